#pragma once

#include <span>
#include <vector>

#include "onepmac/alphabet.hpp"

namespace onepmac {

struct Tolerances {
  double validation = 1e-12;
  double interference = 1e-10;
};

// Conditional distribution p(b|a_1..a_N), stored as a dense tensor with b
// outermost. Instances are always stochastic within the validation tolerance.
class Mac {
 public:
  Mac(AlphabetSpec alphabets, std::vector<double> probs, double tol = Tolerances{}.validation);

  const AlphabetSpec& alphabets() const { return alphabets_; }
  const std::vector<double>& probs() const { return probs_; }
  int parties() const { return alphabets_.parties(); }

  double operator()(int b, std::size_t flat_input) const {
    return probs_[alphabets_.transition_index(b, flat_input)];
  }
  double prob(int b, std::span<const int> inputs) const {
    return (*this)(b, alphabets_.flatten(inputs));
  }

  bool operator==(const Mac&) const = default;

 private:
  AlphabetSpec alphabets_;
  std::vector<double> probs_;
};

Mac validate_mac(const std::vector<double>& tensor, const AlphabetSpec& alphabets,
                 double tol = Tolerances{}.validation);

// Deterministic MAC from a function table f(flat input) -> output symbol.
Mac deterministic_mac(const AlphabetSpec& alphabets, std::span<const int> table);

Mac constant_mac(const AlphabetSpec& alphabets, int b);

// Convex combination sum_k w_k macs[k]; alphabets must agree.
Mac mix(std::span<const Mac> macs, std::span<const double> weights);

}  // namespace onepmac
