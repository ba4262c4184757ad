#include "onepmac/rational.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "onepmac/errors.hpp"

namespace onepmac {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ParseError("empty rational");
  if (r.set_str(t, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite number cannot be made rational");
  Rational r(x);
  r.canonicalize();
  return r;
}

Rational rationalize(double x, double tol, long max_den) {
  if (!std::isfinite(x)) throw ParseError("non-finite number cannot be made rational");
  // Continued-fraction convergents.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(rest);
    if (std::abs(fl) > 9e15) break;
    const long a = static_cast<long>(fl);
    const long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      Rational r(h1, k1);
      r.canonicalize();
      return r;
    }
    const double frac = rest - fl;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }
  return exact_rational(x);
}

RationalVector to_rational_vector(const std::vector<double>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(exact_rational(x));
  return out;
}

std::vector<double> to_double_vector(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

void make_primitive(RationalVector& normal, Rational& offset) {
  Integer l = 1;
  auto absorb_den = [&](const Rational& q) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t()); };
  for (const auto& q : normal) absorb_den(q);
  absorb_den(offset);
  Integer g = 0;
  auto absorb_num = [&](const Rational& q) {
    Integer n = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  };
  for (const auto& q : normal) absorb_num(q);
  absorb_num(offset);
  if (g == 0) return;
  const Rational scale(l, g);
  for (auto& q : normal) {
    q *= scale;
    q.canonicalize();
  }
  offset *= scale;
  offset.canonicalize();
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::size_t RationalVectorHash::operator()(const RationalVector& v) const {
  std::size_t h = v.size();
  std::hash<std::string> hs;
  for (const auto& q : v) h = h * 1000003u ^ hs(q.get_str());
  return h;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace onepmac
