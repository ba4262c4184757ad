#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace onepmac {

// Input alphabets A_1..A_N and output alphabet B. Symbol 0 is the reference
// input of every party. Input tuples are flattened with party 0 as the most
// significant digit; a transition index is b * num_inputs() + flat_input.
struct AlphabetSpec {
  std::vector<int> input_sizes;
  int output_size = 2;

  AlphabetSpec() = default;
  AlphabetSpec(std::vector<int> inputs, int output);

  static AlphabetSpec binary(int parties);

  int parties() const { return static_cast<int>(input_sizes.size()); }
  std::size_t num_inputs() const;
  std::size_t num_transitions() const { return num_inputs() * output_size; }

  std::size_t flatten(std::span<const int> inputs) const;
  std::vector<int> unflatten(std::size_t flat) const;
  // Weight of party i's digit in the flattened index.
  std::size_t stride(int party) const;

  std::size_t transition_index(int b, std::size_t flat_input) const {
    return static_cast<std::size_t>(b) * num_inputs() + flat_input;
  }

  bool operator==(const AlphabetSpec&) const = default;
  std::string describe() const;
};

// Increments a mixed-radix tuple in place (last digit fastest); returns false
// after the last tuple.
bool next_tuple(std::vector<int>& digits, std::span<const int> radices);

std::vector<std::vector<int>> combinations(int n, int k);

long long binomial(int n, int k);

}  // namespace onepmac
