#pragma once

#include "orbcat/family.hpp"
#include "orbcat/fincat.hpp"

namespace orbcat {

/// The orbit category of a family: objects are the homogeneous left
/// Γ-sets Γ/F for members F, morphisms Γ/F -> Γ/G are the cosets γG with
/// γ⁻¹Fγ ≤ G, composed by [δ]∘[γ] = [γδ]. Every morphism carries its
/// underlying equivariant map in `u` (coset indices per object).
struct OrbitCategory {
  FiniteGroup group;
  Family family;
  FinCategory cat;                         // object i = Γ/family.members[i]
  std::vector<std::vector<Coset>> cosets;  // per object, representatives ascending
  std::vector<std::vector<int>> coset_of;  // per object: group element -> coset index
  std::vector<int> mor_coset;              // per morphism: coset index in the codomain object
  std::vector<std::vector<std::vector<int>>> mor_lookup;  // [dom][cod][coset] -> morphism or -1
  SetValuedFunctor u;                      // U_F: Γ/F as a set, morphisms as maps

  /// Morphism [γ] : dom -> cod if it exists, else -1.
  int find_morphism(int dom, int cod, int gamma) const;
  /// Underlying equivariant map applied to a coset index of the domain.
  int apply_map(int m, int x) const { return u.map[m][x]; }
  int member_of_object(int obj) const { return obj; }
};

OrbitCategory orbit_category(const FiniteGroup& g, const Family& f);

/// Independent morphism count: candidate images of 1F are the |Γ/G|
/// cosets; a candidate extends to an equivariant map iff it is F-fixed.
/// Used as the oracle against hom-set sizes.
long long count_equivariant_maps(const FiniteGroup& g, const Subgroup& f, const Subgroup& h);

}  // namespace orbcat
