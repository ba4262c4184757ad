#include "onepmac/vertices.hpp"

#include <set>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

void check_k(const AlphabetSpec& alphabets, int K) {
  if (K < 1 || K > alphabets.parties())
    throw IndexOutOfRange("K must satisfy 1 <= K <= N (got K=" + std::to_string(K) + ")");
}

// Visits all ways of choosing w of n positions, lexicographically.
template <class F>
bool for_each_combination(int n, int w, F&& f) {
  std::vector<int> c(w);
  for (int i = 0; i < w; ++i) c[i] = i;
  while (true) {
    if (!f(c)) return false;
    int i = w - 1;
    while (i >= 0 && c[i] == n - w + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

void for_each_deterministic_table(const AlphabetSpec& alphabets, int K,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
  check_k(alphabets, K);
  const std::size_t n_in = alphabets.num_inputs();
  const int nonzero_outputs = alphabets.output_size - 1;
  for (const auto& subset : combinations(alphabets.parties(), K)) {
    // Map every global input to its index in the subset's local input space.
    std::vector<int> local_radix;
    for (int s : subset) local_radix.push_back(alphabets.input_sizes[s]);
    std::size_t n_local = 1;
    for (int r : local_radix) n_local *= r;
    std::vector<std::size_t> local_of(n_in);
    for (std::size_t flat = 0; flat < n_in; ++flat) {
      const auto a = alphabets.unflatten(flat);
      std::size_t l = 0;
      for (std::size_t k = 0; k < subset.size(); ++k) l = l * local_radix[k] + a[subset[k]];
      local_of[flat] = l;
    }
    std::vector<int> local(n_local, 0);
    std::vector<int> table(n_in, 0);
    const std::vector<int> value_radix_full(n_local, nonzero_outputs);
    for (int w = 0; w <= static_cast<int>(n_local); ++w) {
      const bool go = for_each_combination(static_cast<int>(n_local), w, [&](const std::vector<int>& pos) {
        std::vector<int> digits(w, 0);
        std::span<const int> radix(value_radix_full.data(), w);
        do {
          std::fill(local.begin(), local.end(), 0);
          for (int k = 0; k < w; ++k) local[pos[k]] = digits[k] + 1;
          for (std::size_t flat = 0; flat < n_in; ++flat) table[flat] = local[local_of[flat]];
          if (!visit(table)) return false;
        } while (next_tuple(digits, radix));
        return true;
      });
      if (!go) return;
    }
  }
}

std::vector<Mac> enumerate_deterministic_macs(const AlphabetSpec& alphabets, int K) {
  std::set<std::vector<int>> seen;
  std::vector<Mac> out;
  for_each_deterministic_table(alphabets, K, [&](const std::vector<int>& table) {
    if (seen.insert(table).second) out.push_back(deterministic_mac(alphabets, table));
    return true;
  });
  return out;
}

std::vector<Mac> enumerate_vertices(const AlphabetSpec& alphabets, int K) {
  if (alphabets.output_size != 2)
    throw UnsupportedOutputSize("vertex enumeration of C_{N,K} requires a binary output; use "
                                "enumerate_deterministic_macs for larger outputs");
  return enumerate_deterministic_macs(alphabets, K);
}

std::vector<Mac> enumerate_vertices(int N, int K) {
  if (N < 1) throw InvalidDim("N must be at least 1");
  return enumerate_vertices(AlphabetSpec::binary(N), K);
}

}  // namespace onepmac
