#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbcat/util.hpp"

namespace orbcat {

/// Finite category as explicit data: indexed objects and morphisms, one
/// identity morphism per object, and a dense composition table over the
/// composable non-identity pairs (identity composites are implicit).
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<int> mor_dom, mor_cod;
  std::vector<std::string> mor_label;
  std::vector<int> identity;  // per object: morphism index

  // key pair_key(g, f) -> g∘f, for composable non-identity pairs only
  std::unordered_map<std::uint64_t, int> comp;

  // derived by finalize()
  std::vector<char> id_flag;
  std::map<std::pair<int, int>, std::vector<int>> hom;
  std::vector<std::vector<int>> out_nonid;  // per object, ascending

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(mor_dom.size()); }
  bool is_identity(int m) const { return id_flag[m] != 0; }

  int add_object(const std::string& label);
  int add_morphism(int dom, int cod, const std::string& label);

  /// g∘f for cod(f) == dom(g); identity composites are resolved without a
  /// table lookup.
  int compose(int g, int f) const;

  const std::vector<int>& hom_set(int a, int b) const;

  /// Fills comp over all composable non-identity pairs using `rule`.
  void build_composition(const std::function<int(int, int)>& rule);

  /// Builds derived structure and checks structural consistency (identity
  /// endpoints, table totality, endpoint compatibility of composites).
  void finalize();

  /// Associativity over all composable non-identity triples (the unit laws
  /// hold structurally). Throws on failure.
  void validate() const;

  long long count_composable_pairs() const;
};

// --- functors ---------------------------------------------------------------

struct FinFunctor {
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  bool operator==(const FinFunctor& o) const = default;
  void validate(const FinCategory& src, const FinCategory& dst) const;
};

FinFunctor identity_functor(const FinCategory& c);
FinFunctor compose_functor(const FinFunctor& outer, const FinFunctor& inner);

// --- set-valued functors ------------------------------------------------------

/// Functor to finite sets: per object a set {0..size-1}, per morphism a
/// function table. Functor laws are checked exhaustively by validate().
struct SetValuedFunctor {
  std::vector<int> set_size;                         // per object
  std::vector<std::vector<std::string>> elem_label;  // optional
  std::vector<std::vector<int>> map;                 // per morphism

  void validate(const FinCategory& c) const;
  std::string label_of(int obj, int x) const;
};

SetValuedFunctor constant_functor(const FinCategory& c, int size);
/// F∘β : B -> Set for β : B -> C and F on C.
SetValuedFunctor pullback_functor(const FinCategory& b, const FinFunctor& beta,
                                  const FinCategory& c, const SetValuedFunctor& f);

struct NatTrans {
  std::vector<std::vector<int>> component;  // per object: F(c) -> G(c)

  bool operator==(const NatTrans& o) const = default;
  void validate(const FinCategory& c, const SetValuedFunctor& f, const SetValuedFunctor& g) const;
};

NatTrans identity_nat(const SetValuedFunctor& f);
NatTrans compose_nat(const NatTrans& second, const NatTrans& first);
/// Whiskering η∘α for α : A -> B and η between functors on B.
NatTrans whisker_nat(const FinFunctor& alpha, const NatTrans& eta);

/// All natural transformations F => G, in lexicographic component order,
/// up to `limit` (0 = no limit). Backtracking with naturality pruning.
std::vector<NatTrans> enumerate_nat_trans(const FinCategory& c, const SetValuedFunctor& f,
                                          const SetValuedFunctor& g, std::size_t limit = 0);

// --- derived categories ---------------------------------------------------------

FinCategory opposite(const FinCategory& c);

/// Over-category C↓c or under-category c↓C; slice objects remember the
/// arrow they came from and slice morphisms their underlying C-morphism.
struct SliceCategory {
  FinCategory cat;
  int base_object = -1;
  bool over = true;
  std::vector<int> obj_arrow;       // slice object -> C morphism
  std::vector<int> mor_underlying;  // slice morphism -> C morphism
};

SliceCategory over_category(const FinCategory& c, int obj);
SliceCategory under_category(const FinCategory& c, int obj);

/// Comma category d↓F for F : S -> C: objects are pairs (s, φ: d -> F(s)).
struct CommaCategory {
  FinCategory cat;
  std::vector<std::pair<int, int>> obj_data;  // (S object, C morphism)
  std::vector<int> mor_underlying;            // S morphism
};

CommaCategory comma_under(const FinCategory& s, const FinCategory& c, const FinFunctor& f, int d);

/// Subcategory extraction with index maps back to the parent.
struct Subcategory {
  FinCategory cat;
  std::vector<int> obj_orig;
  std::vector<int> mor_orig;
};

Subcategory full_subcategory(const FinCategory& c, const std::vector<int>& objs);
/// Explicit subcategory; requires identities of the chosen objects and
/// closure under composition (checked).
Subcategory subcategory(const FinCategory& c, const std::vector<int>& objs, const std::vector<int>& mors);

// --- structural queries ------------------------------------------------

struct ObjectSearch {
  int object = -1;  // -1 = none
  bool unique = true;
};

ObjectSearch find_initial(const FinCategory& c);
ObjectSearch find_terminal(const FinCategory& c);

struct StructuralReport {
  bool thin = true;
  bool indiscrete = true;
  int num_components = 0;
  std::vector<int> component;  // per object
};

StructuralReport structural_predicates(const FinCategory& c);

}  // namespace orbcat
