#include "onepmac/alphabet.hpp"

#include <sstream>

#include "onepmac/errors.hpp"

namespace onepmac {

AlphabetSpec::AlphabetSpec(std::vector<int> inputs, int output)
    : input_sizes(std::move(inputs)), output_size(output) {
  if (input_sizes.empty()) throw ShapeMismatch("alphabet needs at least one party");
  for (int s : input_sizes)
    if (s < 2) throw ShapeMismatch("every input alphabet needs at least two symbols");
  if (output_size < 2) throw ShapeMismatch("output alphabet needs at least two symbols");
}

AlphabetSpec AlphabetSpec::binary(int parties) {
  return AlphabetSpec(std::vector<int>(parties, 2), 2);
}

std::size_t AlphabetSpec::num_inputs() const {
  std::size_t n = 1;
  for (int s : input_sizes) n *= static_cast<std::size_t>(s);
  return n;
}

std::size_t AlphabetSpec::stride(int party) const {
  std::size_t s = 1;
  for (int i = parties() - 1; i > party; --i) s *= static_cast<std::size_t>(input_sizes[i]);
  return s;
}

std::size_t AlphabetSpec::flatten(std::span<const int> inputs) const {
  if (static_cast<int>(inputs.size()) != parties())
    throw ShapeMismatch("input tuple has wrong length");
  std::size_t flat = 0;
  for (int i = 0; i < parties(); ++i) {
    if (inputs[i] < 0 || inputs[i] >= input_sizes[i])
      throw IndexOutOfRange("input symbol out of range for party " + std::to_string(i + 1));
    flat = flat * input_sizes[i] + inputs[i];
  }
  return flat;
}

std::vector<int> AlphabetSpec::unflatten(std::size_t flat) const {
  std::vector<int> out(parties());
  for (int i = parties() - 1; i >= 0; --i) {
    out[i] = static_cast<int>(flat % input_sizes[i]);
    flat /= input_sizes[i];
  }
  return out;
}

std::string AlphabetSpec::describe() const {
  std::ostringstream os;
  os << "inputs [";
  for (int i = 0; i < parties(); ++i) os << (i ? "," : "") << input_sizes[i];
  os << "], output " << output_size;
  return os.str();
}

bool next_tuple(std::vector<int>& digits, std::span<const int> radices) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < radices[i]) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace onepmac
