#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbcat/util.hpp"

namespace orbcat {

/// Finite group as a dense Cayley table over element indices 0..order-1.
/// The identity is always index 0. For groups built from permutations,
/// mul(a, b) is "apply a, then b".
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inv;               // inv[g]*g = g*inv[g] = 0
  std::vector<std::string> labels;    // cosmetic, size == order
  std::string name;
  // one-line permutation per element when the group was built from
  // permutations; empty otherwise (used by descriptor parsing)
  std::vector<std::vector<int>> perms;

  int op(int a, int b) const { return mul[a][b]; }
  int inverse(int g) const { return inv[g]; }
  int conj(int g, int h) const { return mul[mul[g][h]][inv[g]]; }  // g h g^-1

  int element_order(int g) const;
  bool is_abelian() const;
  std::vector<int> center() const;
  std::string label(int g) const;

  // Checks identity row/column, Latin-square property, inverses, and (when
  // full is set) associativity by the full triple loop.
  void validate(bool full = true) const;
};

/// Subgroup of an ambient group, stored extensionally as a sorted index set.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return sorted_contains(elements, g); }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const {
    if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
    return elements < o.elements;
  }
};

/// Left coset g*H. Equality is by element set; the representative is the
/// smallest element and is not part of the identity of the coset.
struct Coset {
  Subgroup subgroup;
  int representative = 0;
  std::vector<int> elements;  // sorted

  bool operator==(const Coset& o) const { return elements == o.elements; }
  bool contains(int g) const { return sorted_contains(elements, g); }
};

struct Homomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> image;  // image[g] in target

  int apply(int g) const { return image[g]; }
  void validate() const;  // throws with a witnessing pair on failure
};

// --- constructions -----------------------------------------------------

inline constexpr int kDefaultMaxOrder = 5040;

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);  // order 2n, n >= 1
FiniteGroup make_symmetric(int n);
FiniteGroup make_quaternion8();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);
FiniteGroup from_cayley_file(const std::string& path);
// closes the generated set; throws if the order exceeds max_order
FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, int max_order = kDefaultMaxOrder);

/// Builds a group from a descriptor: "Z6", "cyclic:6", "S3", "symmetric:3",
/// "D4", "dihedral:4", "Q8", "Z2xZ2" (direct products with 'x'),
/// "perm:[(1 2)(3 4)],[(1 2 3)]", "cayley:FILE".
FiniteGroup make_group(const std::string& descriptor, int max_order = kDefaultMaxOrder);

// cycle notation helpers (points are 1-based in the text form)
std::vector<int> parse_cycles(const std::string& text, int min_points = 0);
std::string cycle_string(const std::vector<int>& perm);

// --- subgroup machinery -------------------------------------------------

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// All subgroups, sorted by (order, element set); includes 1 and G.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

Subgroup conjugate_subgroup(const FiniteGroup& g, int x, const Subgroup& h);  // x h x^-1
/// γ⁻¹Hγ ⊆ F ?
bool conjugate_inside(const FiniteGroup& g, int gamma, const Subgroup& h, const Subgroup& f);
Subgroup image_subgroup(const Homomorphism& h, const Subgroup& s);

Coset left_coset(const FiniteGroup& g, const Subgroup& h, int rep);
std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h);

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h);
std::string coset_label(const FiniteGroup& g, const Coset& c);

// --- homomorphisms --------------------------------------------------------

/// Extends generator images to a homomorphism; throws error naming a
/// witnessing pair when the assignment violates a relation or the
/// generators do not generate the source.
Homomorphism make_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                               const std::vector<std::pair<int, int>>& gen_images);
Homomorphism identity_hom(const FiniteGroup& g);
Homomorphism compose_hom(const Homomorphism& outer, const Homomorphism& inner);  // outer ∘ inner
/// Zn -> Zm for m | n, x -> x mod m.
Homomorphism cyclic_mod_hom(const FiniteGroup& zn, const FiniteGroup& zm);
/// Sm -> Sn (m <= n), extend permutations by fixed points.
Homomorphism symmetric_embedding(const FiniteGroup& sm, const FiniteGroup& sn);
/// G -> Z2 with kernel the unique index-2 subgroup (errors if not unique).
Homomorphism parity_hom(const FiniteGroup& g, const FiniteGroup& z2);

}  // namespace orbcat
