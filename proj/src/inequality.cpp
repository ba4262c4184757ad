#include "onepmac/inequality.hpp"

#include <algorithm>
#include <sstream>

#include "onepmac/errors.hpp"

namespace onepmac {

LinearInequality::LinearInequality(AlphabetSpec alph, RationalVector c, Rational s)
    : alphabets(std::move(alph)), coeffs(std::move(c)), bound(std::move(s)) {
  if (coeffs.size() != alphabets.num_transitions())
    throw ShapeMismatch("inequality has " + std::to_string(coeffs.size()) +
                        " coefficients, alphabets need " +
                        std::to_string(alphabets.num_transitions()));
}

Rational& LinearInequality::coeff(int b, std::span<const int> inputs) {
  if (b < 0 || b >= alphabets.output_size) throw IndexOutOfRange("output symbol out of range");
  return coeffs[alphabets.transition_index(b, alphabets.flatten(inputs))];
}

std::string LinearInequality::describe() const {
  std::ostringstream os;
  bool first = true;
  const std::size_t n_in = alphabets.num_inputs();
  for (int b = 0; b < alphabets.output_size; ++b)
    for (std::size_t a = 0; a < n_in; ++a) {
      const Rational& c = coeffs[alphabets.transition_index(b, a)];
      if (sgn(c) == 0) continue;
      if (sgn(c) < 0)
        os << (first ? "-" : " - ");
      else if (!first)
        os << " + ";
      const Rational m = abs(c);
      if (m != 1) os << to_string(m) << "*";
      os << "p(" << b << "|";
      for (int x : alphabets.unflatten(a)) os << x;
      os << ")";
      first = false;
    }
  if (first) os << "0";
  os << " <= " << to_string(bound);
  return os.str();
}

double eval_inequality(const LinearInequality& ineq, const Mac& mac) {
  if (!(ineq.alphabets == mac.alphabets()))
    throw ShapeMismatch("inequality and MAC have different alphabets");
  double s = 0.0;
  for (std::size_t t = 0; t < ineq.coeffs.size(); ++t)
    if (sgn(ineq.coeffs[t]) != 0) s += ineq.coeffs[t].get_d() * mac.probs()[t];
  return s;
}

Rational eval_inequality(const LinearInequality& ineq, const RationalVector& point) {
  return dot(ineq.coeffs, point);
}

LinearInequality fingerprint_inequality(const AlphabetSpec& alphabets, int K,
                                        std::span<const int> party_subset,
                                        const FingerprintLabeling& labeling) {
  const int N = alphabets.parties();
  if (K < 1 || K >= N)
    throw BadSubsetSize("fingerprinting inequality needs 1 <= K < N (got K=" +
                        std::to_string(K) + ", N=" + std::to_string(N) + ")");
  if (static_cast<int>(party_subset.size()) != K + 1)
    throw BadSubsetSize("party subset must have exactly K+1 = " + std::to_string(K + 1) +
                        " parties, got " + std::to_string(party_subset.size()));
  std::vector<int> sorted(party_subset.begin(), party_subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw BadSubsetSize("party subset has repeated entries");
  for (int p : sorted)
    if (p < 0 || p >= N) throw IndexOutOfRange("party index out of range");

  std::vector<int> ref = labeling.reference.empty() ? std::vector<int>(N, 0) : labeling.reference;
  if (static_cast<int>(ref.size()) != N) throw ShapeMismatch("reference input needs N symbols");
  std::vector<int> flip = labeling.flipped;
  if (flip.empty())
    for (int p : party_subset) flip.push_back(ref[p] == 1 ? 0 : 1);
  if (flip.size() != party_subset.size())
    throw ShapeMismatch("one flipped symbol per party in the subset");

  const int b0 = labeling.reference_output, b1 = labeling.flipped_output;
  if (b0 < 0 || b1 < 0 || b0 >= alphabets.output_size || b1 >= alphabets.output_size)
    throw IndexOutOfRange("output label out of range");
  if (!labeling.single_output_form && b0 == b1)
    throw IndexOutOfRange("reference and flipped outputs must differ");

  LinearInequality ineq(alphabets, RationalVector(alphabets.num_transitions(), 0), 0);
  if (labeling.single_output_form) {
    ineq.coeff(b1, ref) -= 1;
    ineq.bound = K;
  } else {
    ineq.coeff(b0, ref) += 1;
    ineq.bound = K + 1;
  }
  for (std::size_t k = 0; k < party_subset.size(); ++k) {
    std::vector<int> a = ref;
    if (flip[k] == ref[party_subset[k]])
      throw IndexOutOfRange("flipped symbol must differ from the reference symbol");
    a[party_subset[k]] = flip[k];
    ineq.coeff(b1, a) += 1;
  }
  return ineq;
}

LinearInequality fingerprint_inequality(int N, int K) {
  std::vector<int> subset(K + 1);
  for (int i = 0; i <= K; ++i) subset[i] = i;
  return fingerprint_inequality(AlphabetSpec::binary(N), K, subset);
}

std::vector<LinearInequality> c32_nontrivial_inequalities() {
  const AlphabetSpec alph = AlphabetSpec::binary(3);
  struct Term { int b; int a[3]; };
  auto make = [&](std::initializer_list<Term> terms, int bound) {
    LinearInequality ineq(alph, RationalVector(alph.num_transitions(), 0), bound);
    for (const auto& t : terms) ineq.coeff(t.b, std::span<const int>(t.a, 3)) += 1;
    return ineq;
  };
  return {
      make({{0, {0, 0, 0}}, {1, {0, 0, 1}}, {1, {0, 1, 0}}, {1, {1, 0, 0}}}, 3),
      make({{0, {0, 0, 0}}, {1, {0, 0, 1}}, {1, {0, 1, 0}}, {0, {1, 0, 1}}}, 3),
      make({{0, {0, 0, 0}}, {1, {0, 0, 1}}, {1, {0, 1, 0}}, {1, {0, 1, 1}}, {0, {1, 1, 1}}}, 4),
  };
}

}  // namespace onepmac
