#include "onepmac/interference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

void check_party(const Mac& mac, int p) {
  if (p < 0 || p >= mac.parties())
    throw IndexOutOfRange("party index " + std::to_string(p) + " out of range");
}

void check_subset(const Mac& mac, std::span<const int> S) {
  if (S.empty()) throw IndexOutOfRange("party subset must be nonempty");
  std::vector<int> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw IndexOutOfRange("party subset has repeated entries");
  for (int s : S) {
    check_party(mac, s);
    if (mac.alphabets().input_sizes[s] < 2)
      throw NonBinaryRestriction("party " + std::to_string(s + 1) + " has fewer than two inputs");
  }
}

// Enumerates the contexts of all parties outside S (S entries stay 0).
template <class F>
void for_each_context(const AlphabetSpec& alph, std::span<const int> S, F&& f) {
  std::vector<int> radix(alph.input_sizes);
  for (int s : S) radix[s] = 1;
  std::vector<int> ctx(alph.parties(), 0);
  do {
    f(ctx);
  } while (next_tuple(ctx, radix));
}

}  // namespace

double interference_I2(const Mac& mac, int i, int j) {
  check_party(mac, i);
  check_party(mac, j);
  if (i == j) throw IndexOutOfRange("I2 needs two distinct parties");
  const AlphabetSpec& alph = mac.alphabets();
  const int mi = alph.input_sizes[i], mj = alph.input_sizes[j];
  const std::size_t si = alph.stride(i), sj = alph.stride(j);
  const int pair[2] = {i, j};
  double best = 0.0;
  for_each_context(alph, pair, [&](const std::vector<int>& ctx) {
    const std::size_t base = alph.flatten(ctx);
    for (int b = 0; b < alph.output_size; ++b)
      for (int x = 0; x < mi; ++x)
        for (int x2 = x + 1; x2 < mi; ++x2)
          for (int y = 0; y < mj; ++y)
            for (int y2 = y + 1; y2 < mj; ++y2) {
              const double v = mac(b, base + x * si + y * sj) + mac(b, base + x2 * si + y2 * sj) -
                               mac(b, base + x * si + y2 * sj) - mac(b, base + x2 * si + y * sj);
              best = std::max(best, std::abs(v));
            }
  });
  return best;
}

double interference_IK(const Mac& mac, std::span<const int> S, std::span<const int> context,
                       std::span<const int> alphas, int b) {
  check_subset(mac, S);
  const AlphabetSpec& alph = mac.alphabets();
  if (static_cast<int>(context.size()) != mac.parties())
    throw ShapeMismatch("context must list an input for every party");
  if (!alphas.empty() && alphas.size() != S.size())
    throw ShapeMismatch("one restriction symbol per party in S");
  if (b < 0 || b >= alph.output_size) throw IndexOutOfRange("output symbol out of range");
  std::vector<int> a(context.begin(), context.end());
  std::vector<int> alpha(S.size(), 1);
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (!alphas.empty()) alpha[k] = alphas[k];
    if (alpha[k] <= 0 || alpha[k] >= alph.input_sizes[S[k]])
      throw NonBinaryRestriction("restriction {0," + std::to_string(alpha[k]) +
                                 "} is not a two-element input set of party " +
                                 std::to_string(S[k] + 1));
    a[S[k]] = 0;
  }
  const std::size_t base = alph.flatten(a);
  double sum = 0.0;
  const unsigned n = static_cast<unsigned>(S.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::size_t flat = base;
    for (unsigned k = 0; k < n; ++k)
      if (mask >> k & 1u) flat += alpha[k] * alph.stride(S[k]);
    const double p = mac(b, flat);
    sum += (std::popcount(mask) % 2 ? -p : p);
  }
  return sum;
}

double max_interference_IK(const Mac& mac, std::span<const int> S) {
  check_subset(mac, S);
  const AlphabetSpec& alph = mac.alphabets();
  std::vector<int> alpha_radix;
  for (int s : S) alpha_radix.push_back(alph.input_sizes[s] - 1);
  double best = 0.0;
  for_each_context(alph, S, [&](const std::vector<int>& ctx) {
    std::vector<int> digits(S.size(), 0);
    do {
      std::vector<int> alpha(S.size());
      for (std::size_t k = 0; k < S.size(); ++k) alpha[k] = digits[k] + 1;
      for (int b = 0; b < alph.output_size; ++b)
        best = std::max(best, std::abs(interference_IK(mac, S, ctx, alpha, b)));
    } while (next_tuple(digits, alpha_radix));
  });
  return best;
}

bool is_separable(const Mac& mac, const Tolerances& tol) {
  for (int i = 0; i < mac.parties(); ++i)
    for (int j = i + 1; j < mac.parties(); ++j) {
      const int pair[2] = {i, j};
      if (max_interference_IK(mac, pair) > tol.interference) return false;
    }
  return true;
}

std::size_t InterferenceCoords::slot(int b, std::span<const int> parties,
                                     std::span<const int> alphas) const {
  if (parties.size() != alphas.size()) throw ShapeMismatch("one symbol per party in S");
  if (b < 0 || b >= alphabets.output_size) throw IndexOutOfRange("output symbol out of range");
  std::vector<int> a(alphabets.parties(), 0);
  for (std::size_t k = 0; k < parties.size(); ++k) {
    const int p = parties[k];
    if (p < 0 || p >= alphabets.parties()) throw IndexOutOfRange("party index out of range");
    if (alphas[k] <= 0 || alphas[k] >= alphabets.input_sizes[p])
      throw IndexOutOfRange("coordinate symbol must be a nonzero input");
    if (a[p] != 0) throw IndexOutOfRange("party repeated in S");
    a[p] = alphas[k];
  }
  return alphabets.transition_index(b, alphabets.flatten(a));
}

double InterferenceCoords::at(int b, std::span<const int> parties,
                              std::span<const int> alphas) const {
  return values[slot(b, parties, alphas)];
}

double InterferenceCoords::binary_q(unsigned mask) const {
  std::vector<int> a(alphabets.parties(), 0);
  for (int i = 0; i < alphabets.parties(); ++i)
    if (mask >> i & 1u) a[i] = 1;
  return values[alphabets.transition_index(0, alphabets.flatten(a))];
}

std::map<CoordKey, double> InterferenceCoords::entries() const {
  std::map<CoordKey, double> out;
  const std::size_t n_in = alphabets.num_inputs();
  for (int b = 0; b < alphabets.output_size; ++b)
    for (std::size_t flat = 0; flat < n_in; ++flat) {
      CoordKey key{b, {}, {}};
      const auto a = alphabets.unflatten(flat);
      for (int i = 0; i < alphabets.parties(); ++i)
        if (a[i] != 0) {
          key.parties.push_back(i);
          key.alphas.push_back(a[i]);
        }
      out.emplace(std::move(key), values[alphabets.transition_index(b, flat)]);
    }
  return out;
}

InterferenceCoords InterferenceCoords::from_entries(const AlphabetSpec& alphabets,
                                                    const std::map<CoordKey, double>& entries) {
  InterferenceCoords c{alphabets, std::vector<double>(alphabets.num_transitions(), 0.0)};
  std::vector<char> seen(c.values.size(), 0);
  for (const auto& [key, value] : entries) {
    const std::size_t s = c.slot(key.b, key.parties, key.alphas);
    c.values[s] = value;
    seen[s] = 1;
  }
  const auto missing = std::count(seen.begin(), seen.end(), 0);
  if (missing > 0)
    throw IncompleteCoords(std::to_string(missing) + " of " + std::to_string(seen.size()) +
                           " interference coordinates are missing");
  return c;
}

std::vector<double> InterferenceCoords::reduced() const {
  const std::size_t n = alphabets.num_inputs() * (alphabets.output_size - 1);
  return std::vector<double>(values.begin(), values.begin() + n);
}

InterferenceCoords InterferenceCoords::from_reduced(const AlphabetSpec& alphabets,
                                                    std::span<const double> reduced) {
  const std::size_t n_in = alphabets.num_inputs();
  if (reduced.size() != n_in * (alphabets.output_size - 1))
    throw IncompleteCoords("reduced interference coordinates have wrong length");
  InterferenceCoords c{alphabets, std::vector<double>(alphabets.num_transitions(), 0.0)};
  std::copy(reduced.begin(), reduced.end(), c.values.begin());
  // Normalization: sum_b q(b,S,alpha) is 1 for S empty and 0 otherwise.
  const int last = alphabets.output_size - 1;
  for (std::size_t flat = 0; flat < n_in; ++flat) {
    double s = flat == 0 ? 1.0 : 0.0;
    for (int b = 0; b < last; ++b) s -= c.values[alphabets.transition_index(b, flat)];
    c.values[alphabets.transition_index(last, flat)] = s;
  }
  return c;
}

InterferenceCoords to_interference_coords(const Mac& mac) {
  InterferenceCoords c{mac.alphabets(), mac.probs()};
  forward_interference_transform(c.alphabets, c.values);
  return c;
}

Mac from_interference_coords(const InterferenceCoords& coords, double tol) {
  if (coords.values.size() != coords.alphabets.num_transitions())
    throw IncompleteCoords("expected " + std::to_string(coords.alphabets.num_transitions()) +
                           " coordinates, got " + std::to_string(coords.values.size()));
  std::vector<double> p = coords.values;
  inverse_interference_transform(coords.alphabets, p);
  return Mac(coords.alphabets, std::move(p), tol);
}

}  // namespace onepmac
