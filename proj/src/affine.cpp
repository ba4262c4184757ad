#include <algorithm>
#include <cstdlib>

#include "onepmac/errors.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/vertices.hpp"

namespace onepmac {

namespace {

constexpr long kIntLimit = 1L << 30;

RationalVector solve_exact(std::vector<RationalVector> a, RationalVector rhs) {
  // Gauss-Jordan on a nonsingular square system.
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw DegenerateInput("singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

RationalVector AffineHull::residual(const RationalVector& p) const {
  RationalVector r(ambient_);
  for (std::size_t t = 0; t < ambient_; ++t) r[t] = p[t] - (*origin_)[t];
  // Pivot entries of a full RREF basis are unit columns, so one pass suffices.
  RationalVector coef(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) coef[k] = r[pivots_[k]];
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(coef[k]) == 0) continue;
    for (std::size_t t = 0; t < ambient_; ++t)
      if (sgn(basis_[k][t]) != 0) r[t] -= coef[k] * basis_[k][t];
  }
  return r;
}

void AffineHull::insert(RationalVector r) {
  std::size_t pc = 0;
  while (sgn(r[pc]) == 0) ++pc;
  const Rational inv = 1 / r[pc];
  for (auto& x : r)
    if (sgn(x) != 0) x *= inv;
  for (auto& row : basis_) {
    if (sgn(row[pc]) == 0) continue;
    const Rational f = row[pc];
    for (std::size_t t = 0; t < ambient_; ++t)
      if (sgn(r[t]) != 0) row[t] -= f * r[t];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
  basis_.insert(basis_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, pc);
  refresh_integer_cache();
}

void AffineHull::refresh_integer_cache() {
  int_ok_ = false;
  iorigin_.clear();
  for (const auto& x : *origin_) {
    if (x.get_den() != 1 || abs(x) > kIntLimit) return;
    iorigin_.push_back(x.get_num().get_si());
  }
  Integer l = 1;
  for (const auto& row : basis_)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  if (l > kIntLimit) return;
  ibasis_.assign(basis_.size(), std::vector<long long>(ambient_));
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t t = 0; t < ambient_; ++t) {
      const Rational v = basis_[k][t] * l;
      if (abs(v) > kIntLimit) return;
      ibasis_[k][t] = v.get_num().get_si();
    }
  den_ = l.get_si();
  int_ok_ = true;
}

bool AffineHull::add(const RationalVector& p) {
  if (ambient_ == 0 && !origin_) ambient_ = p.size();
  if (p.size() != ambient_) throw DimensionMismatch("point has wrong dimension");
  if (!origin_) {
    origin_ = p;
    refresh_integer_cache();
    return true;
  }
  RationalVector r = residual(p);
  for (const auto& x : r)
    if (sgn(x) != 0) {
      insert(std::move(r));
      return true;
    }
  return false;
}

bool AffineHull::add_integer(std::span<const long long> p) {
  if (ambient_ == 0 && !origin_) ambient_ = p.size();
  if (p.size() != ambient_) throw DimensionMismatch("point has wrong dimension");
  bool small = true;
  for (long long x : p) small = small && std::llabs(x) <= kIntLimit;
  if (origin_ && int_ok_ && small) {
    bool zero = true;
    for (std::size_t t = 0; t < ambient_ && zero; ++t) {
      __int128 acc = static_cast<__int128>(den_) * (p[t] - iorigin_[t]);
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        const long long c = p[pivots_[k]] - iorigin_[pivots_[k]];
        if (c != 0) acc -= static_cast<__int128>(c) * ibasis_[k][t];
      }
      zero = acc == 0;
    }
    if (zero) return false;
  }
  RationalVector q(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) q[t] = static_cast<long>(p[t]);
  return add(q);
}

bool AffineHull::contains(const RationalVector& p) const {
  if (!origin_) return false;
  if (p.size() != ambient_) throw DimensionMismatch("point has wrong dimension");
  for (const auto& x : residual(p))
    if (sgn(x) != 0) return false;
  return true;
}

RationalVector AffineHull::reduced_coords(const RationalVector& p) const {
  if (p.size() != ambient_) throw DimensionMismatch("point has wrong dimension");
  RationalVector y(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) y[k] = p[pivots_[k]] - (*origin_)[pivots_[k]];
  return y;
}

RationalVector AffineHull::orthogonal_residual(const RationalVector& p) const {
  RationalVector d(ambient_);
  for (std::size_t t = 0; t < ambient_; ++t) d[t] = p[t] - (*origin_)[t];
  const std::size_t k = basis_.size();
  if (k == 0) return d;
  std::vector<RationalVector> gram(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis_[i], d);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis_[i], basis_[j]);
  }
  const RationalVector c = solve_exact(std::move(gram), std::move(rhs));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < ambient_; ++t)
      if (sgn(basis_[i][t]) != 0) d[t] -= c[i] * basis_[i][t];
  return d;
}

std::pair<RationalVector, Rational> AffineHull::canonical_functional(const RationalVector& normal,
                                                                     const Rational& offset) const {
  if (normal.size() != ambient_) throw DimensionMismatch("functional has wrong dimension");
  RationalVector n(ambient_, 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) n[pivots_[k]] = dot(normal, basis_[k]);
  Rational s = offset - dot(normal, *origin_) + dot(n, *origin_);
  make_primitive(n, s);
  return {std::move(n), std::move(s)};
}

AffineHull hull_of(const std::vector<RationalVector>& points) {
  if (points.empty()) throw EmptyInput("affine hull of an empty point set");
  AffineHull h(points[0].size());
  for (const auto& p : points) h.add(p);
  return h;
}

int affine_dimension(const std::vector<RationalVector>& points) { return hull_of(points).dim(); }

int affine_dimension(const std::vector<Mac>& macs) {
  if (macs.empty()) throw EmptyInput("affine dimension of an empty point set");
  std::vector<RationalVector> pts;
  pts.reserve(macs.size());
  for (const auto& m : macs) pts.push_back(to_rational_vector(m.probs()));
  return affine_dimension(pts);
}

int deterministic_hull_dimension(const AlphabetSpec& alphabets, int K) {
  const std::size_t n_in = alphabets.num_inputs();
  const int bound = static_cast<int>((alphabets.output_size - 1) * n_in);
  AffineHull hull(alphabets.num_transitions());
  std::vector<long long> point(alphabets.num_transitions());
  for_each_deterministic_table(alphabets, K, [&](const std::vector<int>& table) {
    std::fill(point.begin(), point.end(), 0);
    for (std::size_t a = 0; a < n_in; ++a) point[alphabets.transition_index(table[a], a)] = 1;
    hull.add_integer(point);
    return hull.dim() < bound;
  });
  return hull.dim();
}

}  // namespace onepmac
