#include "onepmac/errors.hpp"
#include "onepmac/polytope.hpp"

namespace onepmac {

namespace {

// Phase-one simplex on  A lambda = b, lambda >= 0  with Bland's rule.
// Returns the basic solution (feasible iff artificials vanish) and the dual
// vector y of the phase-one problem.
struct PhaseOne {
  bool feasible = false;
  RationalVector x;
  RationalVector y;
};

PhaseOne phase_one(const std::vector<RationalVector>& A, const RationalVector& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  const std::size_t cols = n + m;
  std::vector<int> flip(m, 1);
  // Tableau rows: [A | I | b], with rows negated where b < 0.
  std::vector<RationalVector> T(m, RationalVector(cols + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip[i] * A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = flip[i] * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector cost(cols + 1, 0);
  for (std::size_t j = n; j < cols; ++j) cost[j] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= T[i][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      const Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen: phase one is bounded below by 0
    const Rational inv = 1 / T[leave][enter];
    for (auto& v : T[leave])
      if (sgn(v) != 0) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(T[leave][j]) != 0) T[i][j] -= f * T[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(T[leave][j]) != 0) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  PhaseOne out;
  out.x.assign(cols, 0);
  for (std::size_t i = 0; i < m; ++i) out.x[basis[i]] = T[i][cols];
  out.feasible = true;
  for (std::size_t j = n; j < cols; ++j)
    if (sgn(out.x[j]) != 0) out.feasible = false;
  out.x.resize(n);
  // y_i = 1 - reduced cost of artificial i, expressed for the unflipped rows.
  out.y.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.y[i] = flip[i] * (1 - cost[n + i]);
  return out;
}

}  // namespace

MembershipResult lp_membership(const RationalVector& point,
                               const std::vector<RationalVector>& vertices) {
  if (vertices.empty()) throw EmptyInput("membership test against an empty vertex set");
  for (const auto& v : vertices)
    if (v.size() != point.size())
      throw DimensionMismatch("point has dimension " + std::to_string(point.size()) +
                              ", vertices have " + std::to_string(v.size()));
  const AffineHull hull = hull_of(vertices);
  MembershipResult res;

  if (!hull.contains(point)) {
    // Off the affine hull: the orthogonal residual is constant on the hull.
    RationalVector r = hull.orthogonal_residual(point);
    Rational s = dot(r, hull.origin());
    make_primitive(r, s);
    res.separator = Facet{std::move(r), std::move(s)};
    return res;
  }

  const std::size_t d = hull.basis().size();
  std::vector<RationalVector> A(d + 1, RationalVector(vertices.size()));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const RationalVector y = hull.reduced_coords(vertices[j]);
    for (std::size_t k = 0; k < d; ++k) A[k][j] = y[k];
    A[d][j] = 1;
  }
  RationalVector b = hull.reduced_coords(point);
  b.push_back(1);

  const PhaseOne sol = phase_one(A, b);
  if (sol.feasible) {
    res.member = true;
    res.weights = sol.x;
    return res;
  }
  // Farkas: u.y(v) + mu <= 0 on vertices and u.y(p) + mu > 0.
  RationalVector n(hull.ambient(), 0);
  Rational s = -sol.y[d];
  for (std::size_t k = 0; k < d; ++k) {
    n[hull.pivots()[k]] = sol.y[k];
    s += sol.y[k] * hull.origin()[hull.pivots()[k]];
  }
  make_primitive(n, s);
  res.separator = Facet{std::move(n), std::move(s)};
  return res;
}

}  // namespace onepmac
