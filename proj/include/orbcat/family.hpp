#pragma once

#include <string>
#include <vector>

#include "orbcat/group.hpp"

namespace orbcat {

/// Set of subgroups closed under conjugation and under passage to
/// subgroups. Members are kept sorted by (order, element set) so object
/// indices in the categories built on top are reproducible.
struct Family {
  FiniteGroup ambient;
  std::vector<Subgroup> members;

  int index_of(const Subgroup& s) const;
  bool contains(const Subgroup& s) const { return index_of(s) >= 0; }
  int size() const { return static_cast<int>(members.size()); }

  /// Certifies both closure conditions (and non-emptiness) exhaustively.
  void validate() const;
};

/// Smallest family containing the seeds (empty seeds give the trivial family).
Family close_family(const FiniteGroup& g, const std::vector<Subgroup>& seeds);

Family trivial_family(const FiniteGroup& g);
Family all_family(const FiniteGroup& g);
Family p_subgroup_family(const FiniteGroup& g, int p);  // p prime

/// { G <= source : h(G) in F } for F a family on h's target.
Family preimage_family(const Homomorphism& h, const Family& f);

/// Descriptor mini-language: "trivial", "all", "p:3",
/// "gen:[(1 2)],[(1 2 3)]" (cycle notation needs a permutation group;
/// plain indices like "gen:[1 4]" work for any group).
Family family_from_descriptor(const FiniteGroup& g, const std::string& desc);

/// One generated subgroup, e.g. "[(1 2 3)]" or "[1 4]".
Subgroup subgroup_from_descriptor(const FiniteGroup& g, const std::string& desc);

bool is_prime(int p);

}  // namespace orbcat
