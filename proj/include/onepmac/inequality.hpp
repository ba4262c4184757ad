#pragma once

#include <span>
#include <string>
#include <vector>

#include "onepmac/mac.hpp"
#include "onepmac/rational.hpp"

namespace onepmac {

// sum_{b,a} c(b|a) p(b|a) <= bound, coefficients laid out like Mac::probs().
struct LinearInequality {
  AlphabetSpec alphabets;
  RationalVector coeffs;
  Rational bound;

  LinearInequality() = default;
  LinearInequality(AlphabetSpec alph, RationalVector c, Rational s);

  Rational& coeff(int b, std::span<const int> inputs);
  std::string describe() const;
};

double eval_inequality(const LinearInequality& ineq, const Mac& mac);
Rational eval_inequality(const LinearInequality& ineq, const RationalVector& point);

// Distinguished symbols of a fingerprinting inequality. `reference` holds the
// all-parties reference input (default all 0), `flipped` the input a party in
// the subset switches to (default 1).
struct FingerprintLabeling {
  std::vector<int> reference;
  std::vector<int> flipped;
  int reference_output = 0;
  int flipped_output = 1;
  // -p(b|ref) + sum_i p(b|ref with i flipped) <= K, with b = flipped_output.
  bool single_output_form = false;
};

// p(b0|ref) + sum_{i in subset} p(b1|ref with party i flipped) <= K+1, or the
// single-output variant. Parties are 0-based; |subset| must be K+1.
LinearInequality fingerprint_inequality(const AlphabetSpec& alphabets, int K,
                                        std::span<const int> party_subset,
                                        const FingerprintLabeling& labeling = {});
LinearInequality fingerprint_inequality(int N, int K);

// The three non-positivity facet classes of C_{3,2}:
// 0: p(0|000)+p(1|001)+p(1|010)+p(1|100) <= 3
// 1: p(0|000)+p(1|001)+p(1|010)+p(0|101) <= 3
// 2: p(0|000)+p(1|001)+p(1|010)+p(1|011)+p(0|111) <= 4
std::vector<LinearInequality> c32_nontrivial_inequalities();

}  // namespace onepmac
