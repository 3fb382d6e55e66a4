#include <doctest.h>

#include "orbcat/family.hpp"

using namespace orbcat;

namespace {

int by_label(const FiniteGroup& g, const std::string& label) {
  for (int i = 0; i < g.order; ++i)
    if (g.labels[i] == label) return i;
  REQUIRE(false);
  return -1;
}

bool family_subset(const Family& a, const Family& b) {
  for (const auto& m : a.members)
    if (!b.contains(m)) return false;
  return true;
}

}  // namespace

TEST_CASE("family closure") {
  FiniteGroup s3 = make_symmetric(3);
  Family empty_seed = close_family(s3, {});
  CHECK(empty_seed.size() == 1);
  CHECK(empty_seed.members[0] == trivial_subgroup());

  Subgroup t12 = subgroup_closure(s3, {by_label(s3, "(1 2)")});
  Family f = close_family(s3, {t12});
  CHECK(f.size() == 4);
  CHECK(f.contains(trivial_subgroup()));
  CHECK(f.contains(subgroup_closure(s3, {by_label(s3, "(1 2)")})));
  CHECK(f.contains(subgroup_closure(s3, {by_label(s3, "(1 3)")})));
  CHECK(f.contains(subgroup_closure(s3, {by_label(s3, "(2 3)")})));

  CHECK(close_family(s3, {whole_group(s3)}).size() == 6);
}

TEST_CASE("family closure is idempotent and monotone") {
  FiniteGroup g = make_group("Z12");
  auto subs = enumerate_subgroups(g);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Subgroup> seeds, more;
    for (const auto& s : subs) {
      if (rng.below(3) == 0) seeds.push_back(s);
      if (rng.below(3) == 0) more.push_back(s);
    }
    Family f = close_family(g, seeds);
    CHECK(close_family(g, f.members).members == f.members);
    std::vector<Subgroup> both = seeds;
    both.insert(both.end(), more.begin(), more.end());
    CHECK(family_subset(f, close_family(g, both)));
  }
}

TEST_CASE("named families") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(trivial_family(s3).size() == 1);
  CHECK(all_family(s3).size() == 6);
  CHECK(all_family(s3).members == close_family(s3, {whole_group(s3)}).members);

  Family p3 = p_subgroup_family(s3, 3);
  CHECK(p3.size() == 2);
  CHECK(p3.members[1].order() == 3);

  Family p2 = p_subgroup_family(s3, 2);
  CHECK(p2.size() == 4);

  CHECK_THROWS_AS(p_subgroup_family(s3, 4), error);
  CHECK_THROWS_AS(p_subgroup_family(s3, 1), error);

  // p-subgroup family for p not dividing the order is just the trivial family
  CHECK(p_subgroup_family(s3, 5).size() == 1);
}

TEST_CASE("preimage families") {
  FiniteGroup z4 = make_cyclic(4), z2 = make_cyclic(2);
  Homomorphism h = cyclic_mod_hom(z4, z2);
  Family back = preimage_family(h, all_family(z2));
  CHECK(back.size() == 3);  // all three subgroups of Z4

  Family same = preimage_family(identity_hom(z4), all_family(z4));
  CHECK(same.members == all_family(z4).members);

  FiniteGroup s3 = make_symmetric(3);
  Homomorphism sign = parity_hom(s3, z2);
  Family ker = preimage_family(sign, trivial_family(z2));
  CHECK(ker.size() == 2);
  CHECK(ker.members[1].order() == 3);  // A3

  // every preimage satisfies the family axioms (validate throws otherwise)
  for (const auto& fam : {back, same, ker}) fam.validate();
}

TEST_CASE("family descriptors") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(family_from_descriptor(s3, "trivial").size() == 1);
  CHECK(family_from_descriptor(s3, "all").size() == 6);
  CHECK(family_from_descriptor(s3, "p:3").size() == 2);
  CHECK(family_from_descriptor(s3, "gen:[(1 2)]").size() == 4);
  CHECK(family_from_descriptor(s3, "gen:[(1 2 3)]").size() == 2);
  CHECK(family_from_descriptor(s3, "gen:[2]").size() == 4);  // element index form
  CHECK(family_from_descriptor(s3, "gen:[(1 2);(1 2 3)]").size() == 6);  // two generators
  FiniteGroup s4 = make_symmetric(4);
  Subgroup klein = subgroup_from_descriptor(s4, "[(1 2)(3 4);(1 3)(2 4)]");
  CHECK(klein.order() == 4);
  CHECK(is_normal(s4, klein));
  CHECK_THROWS_AS(family_from_descriptor(s3, "nope"), error);
  FiniteGroup z4 = make_cyclic(4);
  CHECK_THROWS_AS(family_from_descriptor(z4, "gen:[(1 2)]"), error);  // no permutation data
  CHECK(family_from_descriptor(z4, "gen:[2]").size() == 2);
}
