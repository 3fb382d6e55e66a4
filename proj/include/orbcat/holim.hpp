#pragma once

#include "orbcat/gset.hpp"
#include "orbcat/wreath.hpp"

namespace orbcat {

/// The diagram X⁻ : Orb_F(Γ)^op -> Set, Γ/F -> X^F, with the map of an
/// orbit morphism [γ] : Γ/F -> Γ/G sending X^G -> X^F, x -> γ·x.
struct FixedPointDiagram {
  FinCategory op;                       // opposite of the orbit category
  SetValuedFunctor functor;             // values index into `fixed`
  std::vector<std::vector<int>> fixed;  // per family member: X^F as point lists
};

FixedPointDiagram fixed_point_diagram(const OrbitCategory& orb, const GammaSet& x);

/// A limit cone: one F-fixed point per family member, natural for every
/// orbit morphism (γ·x_G = x_F for [γ] : Γ/F -> Γ/G).
struct Cone {
  std::vector<int> at;  // per family member: a point of X

  bool operator==(const Cone& o) const = default;
  bool operator<(const Cone& o) const { return at < o.at; }
};

/// All cones over X⁻, enumerated by backtracking over the product of the
/// fixed-point sets with naturality filtering. This is the generalized
/// homotopy fixed point set of a discrete X, and doubles as the
/// independent oracle for the limit description.
std::vector<Cone> holim_discrete(const OrbitCategory& orb, const GammaSet& x);

/// π₀ of E_F Γ as a Γ-set (the action permutes connected components).
struct Pi0GammaSet {
  int size = 0;
  std::vector<int> component;          // per E-object
  std::vector<std::vector<int>> act;   // per group element
};

Pi0GammaSet pi0_gamma(const GammaCategory& e);

/// All equivariant maps π₀(E_F Γ) -> X (each map is one value per component).
std::vector<std::vector<int>> equivariant_maps_pi0(const GammaCategory& e, const GammaSet& x);

/// The comparison functor j_F : Γ/F ↓ Orb_F(Γ) -> E_F Γ,
/// φ -> (Γ/G, φ(1F)), which lands in the F-fixed subcategory.
struct JFunctor {
  int member = -1;
  SliceCategory under;  // Γ/F ↓ Orb
  FinFunctor into_e;    // under.cat -> E
};

JFunctor j_functor(const GammaCategory& e, int member);

struct HolimTheoremReport {
  bool ok = false;
  long long cones = 0;
  long long maps = 0;
  bool j_functors_ok = false;
  std::string detail;
};

/// X-independent data of the comparison: π₀ as a Γ-set and one j functor
/// per family member. Build once per (Γ, F) and reuse across many X.
struct HolimContext {
  Pi0GammaSet pi0;
  std::vector<JFunctor> js;
};

HolimContext make_holim_context(const GammaCategory& e);

/// Exact discrete form of the comparison: the correspondence built from
/// the functors j_F is a bijection between the equivariant maps out of
/// π₀(E_F Γ) and the cones of holim_discrete.
HolimTheoremReport verify_holim_theorem(const GammaCategory& e, const GammaSet& x);
HolimTheoremReport verify_holim_theorem(const GammaCategory& e, const GammaSet& x,
                                        const HolimContext& ctx);

struct FiberReport {
  int base_member = -1;
  int objects = 0;
  bool indiscrete = false;
  bool has_initial = false;
  bool has_terminal = false;
  bool contractible = false;  // certified by indiscreteness or an initial/terminal object
  std::string detail;
};

struct CofinalityReport {
  bool cofinal = true;          // every fiber carries a contractibility certificate
  bool all_indiscrete = true;   // the stronger certificate used for the Sylow argument
  std::vector<FiberReport> fibers;
  int first_bad = -1;           // first fiber with no certificate at all
  int first_not_indiscrete = -1;
};

/// For the full subcategory on `sub_members`, builds every fiber G/Q ↓ i.
/// A fiber counts as contractible when it is nonempty and indiscrete, or
/// when it has an initial or terminal object.
CofinalityReport cofinality_check(const OrbitCategory& orb, const std::vector<int>& sub_members);

struct SylowReport {
  bool hypothesis_holds = false;
  std::string sylow_label;
  int weyl_order = 0;
  bool cofinal = false;
  long long holim_count = 0;
  long long weyl_fixed_count = 0;
  bool match = false;
  bool ok = false;  // the verdict the report asserts (match, or detected failure)
  std::string detail;
};

/// If Γ has a unique (normal) Sylow p-subgroup P, compares the cones over
/// the p-subgroup family with (X^P)^W, W the endomorphisms of Γ/P in the
/// orbit category, and verifies the evident bijection. Otherwise reports
/// the hypothesis failure with a concrete non-indiscrete fiber.
SylowReport sylow_comparison(const FiniteGroup& g, int p, const GammaSet& x);

/// Same comparison for a family generated by one explicit subgroup; the
/// hypothesis is that the member is the unique maximal element.
SylowReport maximal_member_comparison(const FiniteGroup& g, const Subgroup& max, const GammaSet& x);

}  // namespace orbcat
