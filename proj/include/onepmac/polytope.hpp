#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "onepmac/inequality.hpp"
#include "onepmac/mac.hpp"
#include "onepmac/rational.hpp"

namespace onepmac {

// Incrementally maintained affine hull of a point set. The direction space is
// kept as a reduced row-echelon basis, so the coordinates of a hull point at
// the pivot columns are its reduced (intrinsic) coordinates.
class AffineHull {
 public:
  explicit AffineHull(std::size_t ambient = 0) : ambient_(ambient) {}

  // Returns true if the point raised the dimension (or was the first point).
  bool add(const RationalVector& p);
  // Faster exact path for integer points; same semantics as add().
  bool add_integer(std::span<const long long> p);

  int dim() const { return origin_ ? static_cast<int>(basis_.size()) : -1; }
  std::size_t ambient() const { return ambient_; }
  const RationalVector& origin() const { return *origin_; }
  const std::vector<RationalVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& p) const;
  RationalVector reduced_coords(const RationalVector& p) const;
  // Component of p - origin orthogonal (Euclidean) to the direction space.
  RationalVector orthogonal_residual(const RationalVector& p) const;

  // Representative of the affine functional x -> n.x - s restricted to the
  // hull, supported on pivot columns and scaled to coprime integers.
  std::pair<RationalVector, Rational> canonical_functional(const RationalVector& normal,
                                                           const Rational& offset) const;

 private:
  RationalVector residual(const RationalVector& p) const;
  void insert(RationalVector r);
  void refresh_integer_cache();

  std::size_t ambient_;
  std::optional<RationalVector> origin_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
  // den_ * basis_ as machine integers when every entry fits comfortably.
  bool int_ok_ = false;
  long long den_ = 1;
  std::vector<std::vector<long long>> ibasis_;
  std::vector<long long> iorigin_;
};

int affine_dimension(const std::vector<RationalVector>& points);
int affine_dimension(const std::vector<Mac>& macs);

// Affine dimension of the deterministic K-local MACs, streamed without
// materializing the vertex list; stops once the stochastic bound
// (|B|-1) * prod |A_i| is reached.
int deterministic_hull_dimension(const AlphabetSpec& alphabets, int K);

struct Facet {
  RationalVector normal;
  Rational offset;
  bool operator==(const Facet&) const = default;
};

bool facet_less(const Facet& a, const Facet& b);

struct RationalPolytope {
  int dim = -1;
  std::vector<RationalVector> vertices;
  std::optional<std::vector<Facet>> facets;
};

RationalPolytope polytope_from_macs(const std::vector<Mac>& macs);

// Complete irredundant facet list of conv(vertices) within its affine hull.
RationalPolytope v_to_h(const RationalPolytope& polytope);

// Facet of the hull-restricted form equivalent to sum c p <= s.
Facet canonical_facet(const AffineHull& hull, const RationalVector& normal, const Rational& offset);
Facet canonical_facet(const AffineHull& hull, const LinearInequality& ineq);

AffineHull hull_of(const std::vector<RationalVector>& points);

// Coordinate permutations generated by party swaps, input relabelings and
// output relabelings; perm[t] is the image of transition coordinate t.
struct SymmetryGroup {
  AlphabetSpec alphabets;
  std::vector<std::vector<std::size_t>> generators;

  static SymmetryGroup from_alphabets(const AlphabetSpec& alphabets);
};

Facet apply_permutation(const std::vector<std::size_t>& perm, const Facet& f);

struct FacetClass {
  Facet representative;  // lexicographically smallest member
  std::vector<Facet> orbit;
  bool positivity = false;
};

// One class per orbit, sorted by representative. Needs the polytope's
// vertices to reduce facets modulo the affine hull.
std::vector<FacetClass> canonicalize_facets(const RationalPolytope& polytope,
                                            const SymmetryGroup& group);

// Index of the class whose orbit contains the inequality, or -1.
int find_facet_class(const std::vector<FacetClass>& classes, const AffineHull& hull,
                     const LinearInequality& ineq);

bool is_positivity_facet(const AffineHull& hull, const Facet& f);

struct MembershipResult {
  bool member = false;
  RationalVector weights;  // convex weights when member
  Facet separator;         // normal.v <= offset on vertices, normal.point > offset otherwise
};

MembershipResult lp_membership(const RationalVector& point,
                               const std::vector<RationalVector>& vertices);

struct CensusReport {
  std::size_t vertex_count = 0;
  int dim = -1;
  std::size_t facet_count = 0;
  std::size_t positivity_count = 0;
  RationalPolytope polytope;
  std::vector<FacetClass> classes;
  std::size_t nontrivial_classes() const;
};

CensusReport facet_census(const AlphabetSpec& alphabets, int K);

}  // namespace onepmac
