#pragma once

#include <map>
#include <span>
#include <vector>

#include "onepmac/mac.hpp"

namespace onepmac {

// Second-order interference between parties i and j (0-based): the largest
// |p(b|a_i,a_j)+p(b|a_i',a_j')-p(b|a_i,a_j')-p(b|a_i',a_j)| over outputs,
// input pairs and contexts of the other parties.
double interference_I2(const Mac& mac, int i, int j);

// Alternating sum over a_s in {0, alpha_s} for s in S of prod f(a_s) p(b|a),
// f(0)=+1, f(alpha)=-1, other parties fixed by `context` (entries for S are
// ignored). Empty `alphas` means alpha_s = 1 for all s.
double interference_IK(const Mac& mac, std::span<const int> S, std::span<const int> context,
                       std::span<const int> alphas = {}, int b = 0);

double max_interference_IK(const Mac& mac, std::span<const int> S);

bool is_separable(const Mac& mac, const Tolerances& tol = {});

// Interference coordinates share the index layout of the transition tensor:
// the slot (b, a) holds q(b, S, alpha) with S = supp(a) and alpha = a|_S.
struct CoordKey {
  int b = 0;
  std::vector<int> parties;  // sorted, 0-based
  std::vector<int> alphas;   // nonzero symbols, aligned with parties
  auto operator<=>(const CoordKey&) const = default;
};

struct InterferenceCoords {
  AlphabetSpec alphabets;
  std::vector<double> values;

  double at(int b, std::span<const int> parties, std::span<const int> alphas) const;
  // Binary form q(S) = q(0, S, {1}); bit i of `mask` selects party i.
  double binary_q(unsigned mask) const;
  std::size_t slot(int b, std::span<const int> parties, std::span<const int> alphas) const;

  std::map<CoordKey, double> entries() const;
  static InterferenceCoords from_entries(const AlphabetSpec& alphabets,
                                         const std::map<CoordKey, double>& entries);

  // Reduced basis drops the last output symbol.
  std::vector<double> reduced() const;
  static InterferenceCoords from_reduced(const AlphabetSpec& alphabets,
                                         std::span<const double> reduced);
};

InterferenceCoords to_interference_coords(const Mac& mac);
Mac from_interference_coords(const InterferenceCoords& coords,
                             double tol = Tolerances{}.validation);

// In-place transform on any field type; sequential per-party differences give
// q(S) = sum_{T subset S} (-1)^{|S|-|T|} p(T).
template <class T>
void forward_interference_transform(const AlphabetSpec& alph, std::vector<T>& v) {
  const std::size_t n_in = alph.num_inputs();
  for (int party = 0; party < alph.parties(); ++party) {
    const std::size_t stride = alph.stride(party);
    const std::size_t m = alph.input_sizes[party];
    for (int b = 0; b < alph.output_size; ++b) {
      const std::size_t base = static_cast<std::size_t>(b) * n_in;
      for (std::size_t flat = 0; flat < n_in; ++flat) {
        const std::size_t digit = (flat / stride) % m;
        if (digit == 0) continue;
        v[base + flat] -= v[base + flat - digit * stride];
      }
    }
  }
}

template <class T>
void inverse_interference_transform(const AlphabetSpec& alph, std::vector<T>& v) {
  const std::size_t n_in = alph.num_inputs();
  for (int party = 0; party < alph.parties(); ++party) {
    const std::size_t stride = alph.stride(party);
    const std::size_t m = alph.input_sizes[party];
    for (int b = 0; b < alph.output_size; ++b) {
      const std::size_t base = static_cast<std::size_t>(b) * n_in;
      for (std::size_t flat = 0; flat < n_in; ++flat) {
        const std::size_t digit = (flat / stride) % m;
        if (digit == 0) continue;
        v[base + flat] += v[base + flat - digit * stride];
      }
    }
  }
}

}  // namespace onepmac
