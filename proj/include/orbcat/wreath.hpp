#pragma once

#include "orbcat/orbit.hpp"

namespace orbcat {

/// Wreath product C ≀ U: objects are pairs (C, x) with x in U(C),
/// morphisms (C,x) -> (D,y) the base morphisms φ with U(φ)(x) = y,
/// composed by (ψ, y)∘(φ, x) = (ψ∘φ, x).
struct WreathCategory {
  FinCategory total;
  std::vector<std::pair<int, int>> obj_pair;            // total object -> (base object, x)
  std::vector<std::vector<int>> obj_of;                 // [base object][x] -> total object
  std::vector<std::pair<int, int>> mor_pair;            // total morphism -> (base morphism, x at dom)
  std::unordered_map<std::uint64_t, int> mor_of_pair;   // pair_key(base mor, x) -> total morphism
  FinFunctor projection;                                // total -> base

  int object_of(int base_obj, int x) const { return obj_of[base_obj][x]; }
  int morphism_of(int base_mor, int x) const { return mor_of_pair.at(pair_key(base_mor, x)); }
};

WreathCategory wreath_product(const FinCategory& base, const SetValuedFunctor& u);

/// E_F Γ = Orb_F(Γ) ≀ U_F with the Γ-action γ(C, x) = (C, γ·x). Objects
/// are identified with left cosets γF.
struct GammaCategory {
  OrbitCategory orb;
  WreathCategory wr;
  std::vector<std::vector<int>> act_obj;  // per group element: object permutation
  std::vector<std::vector<int>> act_mor;  // per group element: morphism permutation
  std::vector<Coset> obj_coset;           // per total object: the coset γF

  const FinCategory& cat() const { return wr.total; }
  const FiniteGroup& group() const { return orb.group; }
  const Family& family() const { return orb.family; }

  /// Functor laws for each γ, the action homomorphism laws, and the
  /// coset identification (objects are distinct cosets and a morphism
  /// γF -> νG exists iff (γ⁻¹ν)⁻¹F(γ⁻¹ν) ≤ G). Throws on failure.
  void validate_action() const;
};

GammaCategory e_f_gamma(const FiniteGroup& g, const Family& f);

/// Fixed objects/morphisms under every element of H, computed by direct
/// scan and cross-checked against the coset-condition description (full
/// subcategory on the objects (Γ/F, γF) with γ⁻¹Hγ ≤ F).
struct FixedScan {
  std::vector<int> objects;
  std::vector<int> morphisms;
};

FixedScan fixed_scan(const GammaCategory& e, const Subgroup& h);
Subcategory fixed_subcategory(const GammaCategory& e, const Subgroup& h);

/// Initial object of the (full) fixed subcategory, without extracting it.
ObjectSearch fixed_initial(const GammaCategory& e, const FixedScan& scan);

struct CertificateEntry {
  Subgroup subgroup;
  bool in_family = false;
  bool fixed_empty = false;
  int witness = -1;       // initial object of the fixed subcategory (index there)
  std::string witness_label;
  bool ok = false;
};

struct ClassifyingCertificate {
  std::vector<CertificateEntry> entries;
  bool all_ok = true;
};

/// For every subgroup H of Γ: fixed subcategory empty iff H ∉ F, and an
/// initial-object witness when H ∈ F.
ClassifyingCertificate classifying_certificate(const GammaCategory& e);

struct QuotientCompareReport {
  bool ok = true;
  int maxdim = 0;
  std::vector<long long> orbit_counts;       // Γ-orbits of nondegenerate simplices of N(E)
  std::vector<long long> base_counts;        // nondegenerate simplices of N(Orb)
  std::vector<long long> total_counts;       // nondegenerate simplices of N(E)
  std::string counterexample;
};

/// Levelwise comparison of N(E_F Γ)/Γ with N(Orb_F Γ) through dimension
/// maxdim: the lifts of every base chain form one Γ-orbit and the
/// forgetful map commutes with faces and degeneracies.
QuotientCompareReport quotient_compare(const GammaCategory& e, int maxdim,
                                       long long cap = 10'000'000);

/// Functor C≀F -> C≀G induced by a natural transformation η : F => G,
/// (C, x) -> (C, η_C(x)). η is validated first.
FinFunctor lift_nat_trans(const FinCategory& c, const SetValuedFunctor& f, const SetValuedFunctor& g,
                          const NatTrans& eta, const WreathCategory& cf, const WreathCategory& cg);

/// Functor B≀(F∘β) -> C≀F induced by β : B -> C, (B, x) -> (β(B), x).
FinFunctor reindex_functor(const FinFunctor& beta, const WreathCategory& b_fb, const WreathCategory& c_f);

/// Strict commutation of the lift/reindex square for α : A -> B and
/// η : F => G on B. Returns false and a witness description on failure.
bool check_lift_reindex_square(const FinCategory& a, const FinCategory& b, const FinFunctor& alpha,
                               const SetValuedFunctor& f, const SetValuedFunctor& g, const NatTrans& eta,
                               std::string* why = nullptr);

/// h_F : E_{h⁻¹F}(Γ') -> E_F(Γ), built as reindex(h_*) ∘ lift(η_{h,F}).
struct InducedFunctor {
  Family preimage;        // h⁻¹(F) on the source group
  GammaCategory source;   // E_{h⁻¹F} Γ'
  GammaCategory target;   // E_F Γ
  FinFunctor h_star;      // Orb_{h⁻¹F}(Γ') -> Orb_F(Γ)
  NatTrans eta;           // U_{h⁻¹F} => U_F ∘ h_*
  FinFunctor functor;     // the composite on wreath categories
};

InducedFunctor induced_functor(const Homomorphism& h, const Family& f_target);

/// Equivariance law ul(h(γ'))∘h_F = h_F∘ul(γ') for every γ'.
bool check_induced_equivariance(const InducedFunctor& ind, const Homomorphism& h, std::string* why = nullptr);

}  // namespace orbcat
