#include "onepmac/mac.hpp"

#include <cmath>
#include <sstream>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

std::string tuple_string(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

Mac::Mac(AlphabetSpec alphabets, std::vector<double> probs, double tol)
    : alphabets_(std::move(alphabets)), probs_(std::move(probs)) {
  if (probs_.size() != alphabets_.num_transitions()) {
    std::ostringstream os;
    os << "tensor has " << probs_.size() << " entries, alphabets " << alphabets_.describe()
       << " need " << alphabets_.num_transitions();
    throw ShapeMismatch(os.str());
  }
  const std::size_t n_in = alphabets_.num_inputs();
  double worst = 0.0;
  std::size_t worst_input = 0;
  bool bad = false;
  for (std::size_t a = 0; a < n_in; ++a) {
    double total = 0.0;
    for (int b = 0; b < alphabets_.output_size; ++b) {
      const double p = probs_[alphabets_.transition_index(b, a)];
      if (!std::isfinite(p) || p < -tol || p > 1.0 + tol) {
        std::ostringstream os;
        os << "entry p(" << b << "|" << tuple_string(alphabets_.unflatten(a)) << ") = " << p
           << " is outside [0,1]";
        throw NotStochastic(os.str());
      }
      total += p;
    }
    const double deficit = 1.0 - total;
    if (std::abs(deficit) > tol && std::abs(deficit) > std::abs(worst)) {
      worst = deficit;
      worst_input = a;
      bad = true;
    }
  }
  if (bad) {
    std::ostringstream os;
    os << "column for input " << tuple_string(alphabets_.unflatten(worst_input))
       << " sums to " << 1.0 - worst << " (deficit " << worst << ")";
    throw NotStochastic(os.str());
  }
}

Mac validate_mac(const std::vector<double>& tensor, const AlphabetSpec& alphabets, double tol) {
  return Mac(alphabets, tensor, tol);
}

Mac deterministic_mac(const AlphabetSpec& alphabets, std::span<const int> table) {
  const std::size_t n_in = alphabets.num_inputs();
  if (table.size() != n_in) throw ShapeMismatch("function table has wrong length");
  std::vector<double> probs(alphabets.num_transitions(), 0.0);
  for (std::size_t a = 0; a < n_in; ++a) {
    if (table[a] < 0 || table[a] >= alphabets.output_size)
      throw IndexOutOfRange("output symbol out of range");
    probs[alphabets.transition_index(table[a], a)] = 1.0;
  }
  return Mac(alphabets, std::move(probs));
}

Mac constant_mac(const AlphabetSpec& alphabets, int b) {
  std::vector<int> table(alphabets.num_inputs(), b);
  return deterministic_mac(alphabets, table);
}

Mac mix(std::span<const Mac> macs, std::span<const double> weights) {
  if (macs.empty() || macs.size() != weights.size())
    throw ShapeMismatch("mix needs one weight per MAC");
  std::vector<double> probs(macs[0].probs().size(), 0.0);
  for (std::size_t k = 0; k < macs.size(); ++k) {
    if (!(macs[k].alphabets() == macs[0].alphabets()))
      throw ShapeMismatch("mixed MACs have different alphabets");
    for (std::size_t t = 0; t < probs.size(); ++t) probs[t] += weights[k] * macs[k].probs()[t];
  }
  return Mac(macs[0].alphabets(), std::move(probs));
}

}  // namespace onepmac
