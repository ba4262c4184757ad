#pragma once

#include <functional>
#include <vector>

#include "onepmac/mac.hpp"

namespace onepmac {

// Streams deterministic MACs whose output depends on the inputs of one
// K-subset of parties. Subsets come in lexicographic order; within a subset the
// function tables come in order of increasing Hamming weight (number of
// non-zero outputs), so low-weight tables, which already span the affine hull,
// appear first. The callback receives the full table (output per flattened
// input) and returns false to stop. Duplicates across subsets are not removed.
void for_each_deterministic_table(const AlphabetSpec& alphabets, int K,
                                  const std::function<bool(const std::vector<int>&)>& visit);

// All distinct deterministic K-local MACs for any output size.
std::vector<Mac> enumerate_deterministic_macs(const AlphabetSpec& alphabets, int K);

// Vertices of the binary-output polytope C_{N,K}.
std::vector<Mac> enumerate_vertices(const AlphabetSpec& alphabets, int K);
std::vector<Mac> enumerate_vertices(int N, int K);

}  // namespace onepmac
