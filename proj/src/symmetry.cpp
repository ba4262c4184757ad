#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "onepmac/errors.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/vertices.hpp"

namespace onepmac {

namespace {

struct FacetHash {
  std::size_t operator()(const Facet& f) const {
    return RationalVectorHash{}(f.normal) * 31u ^ std::hash<std::string>{}(f.offset.get_str());
  }
};

// Permutation of transition coordinates induced by maps on inputs and output.
template <class InputMap, class OutputMap>
std::vector<std::size_t> induced(const AlphabetSpec& alph, InputMap in_map, OutputMap out_map) {
  const std::size_t n_in = alph.num_inputs();
  std::vector<std::size_t> perm(alph.num_transitions());
  for (int b = 0; b < alph.output_size; ++b)
    for (std::size_t flat = 0; flat < n_in; ++flat) {
      const auto a = in_map(alph.unflatten(flat));
      perm[alph.transition_index(b, flat)] = alph.transition_index(out_map(b), alph.flatten(a));
    }
  return perm;
}

}  // namespace

SymmetryGroup SymmetryGroup::from_alphabets(const AlphabetSpec& alph) {
  SymmetryGroup g{alph, {}};
  auto same_b = [](int b) { return b; };
  for (int i = 0; i + 1 < alph.parties(); ++i) {
    if (alph.input_sizes[i] != alph.input_sizes[i + 1]) continue;
    g.generators.push_back(induced(alph, [i](std::vector<int> a) {
      std::swap(a[i], a[i + 1]);
      return a;
    }, same_b));
  }
  for (int i = 0; i < alph.parties(); ++i) {
    const int m = alph.input_sizes[i];
    g.generators.push_back(induced(alph, [i](std::vector<int> a) {
      if (a[i] < 2) a[i] = 1 - a[i];
      return a;
    }, same_b));
    if (m > 2)
      g.generators.push_back(induced(alph, [i, m](std::vector<int> a) {
        a[i] = (a[i] + 1) % m;
        return a;
      }, same_b));
  }
  const int nb = alph.output_size;
  auto same_a = [](std::vector<int> a) { return a; };
  g.generators.push_back(induced(alph, same_a, [](int b) { return b < 2 ? 1 - b : b; }));
  if (nb > 2) g.generators.push_back(induced(alph, same_a, [nb](int b) { return (b + 1) % nb; }));
  return g;
}

Facet apply_permutation(const std::vector<std::size_t>& perm, const Facet& f) {
  if (perm.size() != f.normal.size()) throw DimensionMismatch("permutation size mismatch");
  Facet g{RationalVector(f.normal.size()), f.offset};
  for (std::size_t t = 0; t < perm.size(); ++t) g.normal[perm[t]] = f.normal[t];
  return g;
}

bool is_positivity_facet(const AffineHull& hull, const Facet& f) {
  for (std::size_t t = 0; t < hull.ambient(); ++t) {
    RationalVector e(hull.ambient(), 0);
    e[t] = -1;
    if (canonical_facet(hull, e, 0) == f) return true;
  }
  return false;
}

std::vector<FacetClass> canonicalize_facets(const RationalPolytope& polytope,
                                            const SymmetryGroup& group) {
  std::vector<FacetClass> classes;
  if (!polytope.facets || polytope.facets->empty()) return classes;
  const AffineHull hull = hull_of(polytope.vertices);

  std::unordered_set<Facet, FacetHash> positivity;
  for (std::size_t t = 0; t < hull.ambient(); ++t) {
    RationalVector e(hull.ambient(), 0);
    e[t] = -1;
    positivity.insert(canonical_facet(hull, e, 0));
  }

  std::unordered_set<Facet, FacetHash> assigned;
  for (const auto& f0 : *polytope.facets) {
    const Facet start = canonical_facet(hull, f0.normal, f0.offset);
    if (assigned.count(start)) continue;
    FacetClass cls;
    std::deque<Facet> queue{start};
    assigned.insert(start);
    while (!queue.empty()) {
      Facet f = std::move(queue.front());
      queue.pop_front();
      for (const auto& perm : group.generators) {
        const Facet img = apply_permutation(perm, f);
        Facet c = canonical_facet(hull, img.normal, img.offset);
        if (assigned.insert(c).second) queue.push_back(std::move(c));
      }
      cls.positivity = cls.positivity || positivity.count(f) > 0;
      cls.orbit.push_back(std::move(f));
    }
    std::sort(cls.orbit.begin(), cls.orbit.end(), facet_less);
    cls.representative = cls.orbit.front();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const FacetClass& a, const FacetClass& b) {
    if (a.positivity != b.positivity) return a.positivity;
    return facet_less(a.representative, b.representative);
  });
  return classes;
}

int find_facet_class(const std::vector<FacetClass>& classes, const AffineHull& hull,
                     const LinearInequality& ineq) {
  const Facet f = canonical_facet(hull, ineq);
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (std::binary_search(classes[k].orbit.begin(), classes[k].orbit.end(), f, facet_less))
      return static_cast<int>(k);
  return -1;
}

CensusReport facet_census(const AlphabetSpec& alphabets, int K) {
  CensusReport rep;
  const auto verts = enumerate_vertices(alphabets, K);
  rep.vertex_count = verts.size();
  rep.polytope = v_to_h(polytope_from_macs(verts));
  rep.dim = rep.polytope.dim;
  rep.facet_count = rep.polytope.facets->size();
  const AffineHull hull = hull_of(rep.polytope.vertices);
  for (const auto& f : *rep.polytope.facets) rep.positivity_count += is_positivity_facet(hull, f);
  rep.classes = canonicalize_facets(rep.polytope, SymmetryGroup::from_alphabets(alphabets));
  return rep;
}

}  // namespace onepmac
