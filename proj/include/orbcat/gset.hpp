#pragma once

#include <string>

#include "orbcat/group.hpp"

namespace orbcat {

/// Finite left Γ-set: act[g][x] with act(gh, x) = act(g, act(h, x)).
struct GammaSet {
  FiniteGroup group;
  int size = 0;
  std::vector<std::vector<int>> act;

  int apply(int g, int x) const { return act[g][x]; }
  void validate() const;
  std::vector<int> fixed_points(const Subgroup& h) const;
  std::vector<int> fixed_points_all() const;  // X^Γ
};

GammaSet gset_empty(const FiniteGroup& g);
GammaSet gset_point(const FiniteGroup& g);
GammaSet gset_cosets(const FiniteGroup& g, const Subgroup& h);  // Γ/H, left multiplication
GammaSet gset_disjoint(const GammaSet& a, const GammaSet& b);
/// Disjoint union of random orbits Γ/H with the points relabeled by a
/// random permutation; size <= max_size (possibly empty when allow_empty).
GammaSet gset_random(const FiniteGroup& g, int max_size, Rng& rng, bool allow_empty = false);
/// Relabel points along a permutation π; the result Y satisfies
/// π(g·x) = g·π(x), so π is an equivariant bijection X -> Y.
GammaSet gset_relabel(const GammaSet& x, const std::vector<int>& perm);

/// File format: line 1 the size, then one line per group element holding a
/// permutation of 0..size-1 (row g = action of g).
GammaSet load_gset(const std::string& path, const FiniteGroup& g);
std::string gset_to_text(const GammaSet& x);

}  // namespace orbcat
