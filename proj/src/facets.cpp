#include <algorithm>
#include <bit>

#include "onepmac/errors.hpp"
#include "onepmac/polytope.hpp"

namespace onepmac {

namespace {

using IntVec = std::vector<Integer>;

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
};

struct Ray {
  IntVec x;
  Bits zero;  // processed constraints that are tight at this ray
};

Integer idot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

// Extreme rays of the pointed cone {x : A x >= 0} by the double description
// method with the combinatorial adjacency test.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& A) {
  const std::size_t m = A.size();
  const std::size_t D = A[0].size();

  // Greedily choose D independent rows for the initial simplicial cone.
  std::vector<std::size_t> init;
  {
    std::vector<RationalVector> ech;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < m && init.size() < D; ++i) {
      RationalVector r(D);
      for (std::size_t j = 0; j < D; ++j) r[j] = A[i][j];
      for (std::size_t k = 0; k < ech.size(); ++k)
        if (sgn(r[piv[k]]) != 0) {
          const Rational f = r[piv[k]] / ech[k][piv[k]];
          for (std::size_t j = 0; j < D; ++j) r[j] -= f * ech[k][j];
        }
      std::size_t p = 0;
      while (p < D && sgn(r[p]) == 0) ++p;
      if (p == D) continue;
      ech.push_back(std::move(r));
      piv.push_back(p);
      init.push_back(i);
    }
  }
  if (init.size() < D) throw DegenerateInput("constraint system is not full rank");

  // Columns of the inverse of the initial rows are the initial rays.
  std::vector<RationalVector> aug(D, RationalVector(2 * D, 0));
  for (std::size_t r = 0; r < D; ++r) {
    for (std::size_t j = 0; j < D; ++j) aug[r][j] = A[init[r]][j];
    aug[r][D + r] = 1;
  }
  for (std::size_t col = 0; col < D; ++col) {
    std::size_t p = col;
    while (sgn(aug[p][col]) == 0) ++p;
    std::swap(aug[p], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < D; ++r) {
      if (r == col || sgn(aug[r][col]) == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * D; ++j) aug[r][j] -= f * aug[col][j];
    }
  }

  std::vector<std::size_t> order = init;
  std::vector<char> used(m, 0);
  for (auto i : init) used[i] = 1;
  for (std::size_t i = 0; i < m; ++i)
    if (!used[i]) order.push_back(i);

  std::vector<Ray> rays;
  for (std::size_t c = 0; c < D; ++c) {
    RationalVector col(D);
    for (std::size_t r = 0; r < D; ++r) col[r] = aug[r][D + c];
    Integer l = 1;
    for (const auto& q : col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Ray ray{IntVec(D), Bits(m)};
    for (std::size_t r = 0; r < D; ++r) ray.x[r] = col[r].get_num() * (l / col[r].get_den());
    make_primitive(ray.x);
    for (std::size_t k = 0; k < D; ++k)
      if (k != c) ray.zero.set(order[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = D; step < m; ++step) {
    const std::size_t row = order[step];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = idot(A[row], rays[r].x);
      const int s = sgn(val[r]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zer) rays[r].zero.set(row);
      continue;
    }
    std::vector<Ray> next;
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && common.subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray nr{IntVec(D), common};
        for (std::size_t j = 0; j < D; ++j) nr.x[j] = val[p] * rays[n].x[j] - val[n] * rays[p].x[j];
        make_primitive(nr.x);
        nr.zero.set(row);
        next.push_back(std::move(nr));
      }
    }
    for (auto p : pos) next.push_back(std::move(rays[p]));
    for (auto z : zer) {
      rays[z].zero.set(row);
      next.push_back(std::move(rays[z]));
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(std::move(r.x));
  return out;
}

}  // namespace

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

Facet canonical_facet(const AffineHull& hull, const RationalVector& normal, const Rational& offset) {
  auto [n, s] = hull.canonical_functional(normal, offset);
  return Facet{std::move(n), std::move(s)};
}

Facet canonical_facet(const AffineHull& hull, const LinearInequality& ineq) {
  return canonical_facet(hull, ineq.coeffs, ineq.bound);
}

RationalPolytope polytope_from_macs(const std::vector<Mac>& macs) {
  if (macs.empty()) throw EmptyInput("polytope needs at least one vertex");
  RationalPolytope p;
  for (const auto& m : macs) p.vertices.push_back(to_rational_vector(m.probs()));
  p.dim = affine_dimension(p.vertices);
  return p;
}

RationalPolytope v_to_h(const RationalPolytope& polytope) {
  if (polytope.vertices.empty()) throw EmptyInput("v_to_h needs vertices");
  const AffineHull hull = hull_of(polytope.vertices);
  const int d = hull.dim();
  if (d < 1) throw DegenerateInput("all vertices coincide; no facets");

  // In reduced coordinates y, a facet a.y <= beta is an extreme ray (a, beta)
  // of the cone {beta - a.y_i >= 0 for every vertex i}.
  std::vector<IntVec> rows;
  for (const auto& v : polytope.vertices) {
    const RationalVector y = hull.reduced_coords(v);
    Integer l = 1;
    for (const auto& q : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVec row(d + 1);
    for (int k = 0; k < d; ++k) row[k] = -(y[k].get_num() * (l / y[k].get_den()));
    row[d] = l;
    make_primitive(row);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<Facet> facets;
  const auto& piv = hull.pivots();
  const auto& origin = hull.origin();
  for (const auto& ray : extreme_rays(rows)) {
    RationalVector n(hull.ambient(), 0);
    Rational s = Rational(ray[d]);
    bool nonzero = false;
    for (int k = 0; k < d; ++k) {
      n[piv[k]] = Rational(ray[k]);
      s += n[piv[k]] * origin[piv[k]];
      nonzero = nonzero || sgn(ray[k]) != 0;
    }
    if (!nonzero) continue;
    make_primitive(n, s);
    facets.push_back(Facet{std::move(n), std::move(s)});
  }
  std::sort(facets.begin(), facets.end(), facet_less);

  RationalPolytope out = polytope;
  out.dim = d;
  out.facets = std::move(facets);
  return out;
}

std::size_t CensusReport::nontrivial_classes() const {
  std::size_t c = 0;
  for (const auto& k : classes) c += k.positivity ? 0 : 1;
  return c;
}

}  // namespace onepmac
