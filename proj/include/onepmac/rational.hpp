#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace onepmac {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// "p/q" (or "p") in lowest terms.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Exact binary value of a double.
Rational exact_rational(double x);
// Smallest-denominator rational within `tol` of x with denominator <= max_den,
// falling back to the exact binary value.
Rational rationalize(double x, double tol = 1e-12, long max_den = 1000000);

RationalVector to_rational_vector(const std::vector<double>& v);
std::vector<double> to_double_vector(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

// Scales (normal, offset) by a positive factor so that all entries are
// coprime integers. Zero input is left unchanged.
void make_primitive(RationalVector& normal, Rational& offset);
void make_primitive(std::vector<Integer>& v);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const;
};

bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace onepmac
