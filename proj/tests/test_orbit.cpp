#include <doctest.h>

#include "orbcat/orbit.hpp"

using namespace orbcat;

namespace {

int by_label(const FiniteGroup& g, const std::string& label) {
  for (int i = 0; i < g.order; ++i)
    if (g.labels[i] == label) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("one-object model for the trivial family") {
  for (const char* desc : {"Z2", "S3", "Q8"}) {
    FiniteGroup g = make_group(desc);
    OrbitCategory orb = orbit_category(g, trivial_family(g));
    CHECK(orb.cat.num_objects() == 1);
    CHECK(orb.cat.num_morphisms() == g.order);
    orb.cat.validate();
  }
}

TEST_CASE("orbit category hom sets on S3") {
  FiniteGroup s3 = make_symmetric(3);
  Family all = all_family(s3);
  OrbitCategory orb = orbit_category(s3, all);
  orb.cat.validate();

  int triv = all.index_of(trivial_subgroup());
  int a3 = -1, t12 = -1;
  for (int i = 0; i < all.size(); ++i) {
    if (all.members[i].order() == 3) a3 = i;
    if (all.members[i] == subgroup_closure(s3, {by_label(s3, "(1 2)")})) t12 = i;
  }
  REQUIRE(a3 >= 0);
  REQUIRE(t12 >= 0);

  CHECK(orb.cat.hom_set(a3, a3).size() == 2);
  CHECK(orb.cat.hom_set(t12, a3).empty());
  CHECK(orb.cat.hom_set(t12, t12).size() == 1);  // the normalizer is the subgroup itself
  CHECK(orb.cat.hom_set(triv, triv).size() == 6);
  for (int i = 0; i < all.size(); ++i)
    CHECK(static_cast<int>(orb.cat.hom_set(triv, i).size()) == s3.order / all.members[i].order());
}

TEST_CASE("hom sets biject with equivariant maps across a zoo") {
  for (const char* desc : {"Z6", "S3", "D4", "Q8"}) {
    FiniteGroup g = make_group(desc);
    for (const Family& fam : {all_family(g), p_subgroup_family(g, 2)}) {
      OrbitCategory orb = orbit_category(g, fam);
      for (int a = 0; a < fam.size(); ++a)
        for (int b = 0; b < fam.size(); ++b)
          CHECK(static_cast<long long>(orb.cat.hom_set(a, b).size()) ==
                count_equivariant_maps(g, fam.members[a], fam.members[b]));
    }
  }
}

TEST_CASE("composition agrees with the underlying equivariant maps") {
  // ξ(ψ∘φ) must equal the composite map evaluated at the basepoint 1F
  for (const char* desc : {"Z4", "S3"}) {
    FiniteGroup g = make_group(desc);
    OrbitCategory orb = orbit_category(g, all_family(g));
    for (int f = 0; f < orb.cat.num_morphisms(); ++f) {
      if (orb.cat.is_identity(f)) continue;
      int dom = orb.cat.mor_dom[f];
      int base = orb.coset_of[dom][0];
      for (int m : orb.cat.out_nonid[orb.cat.mor_cod[f]]) {
        int composite = orb.cat.compose(m, f);
        CHECK(orb.mor_coset[composite] == orb.u.map[m][orb.u.map[f][base]]);
      }
    }
  }
}

TEST_CASE("well-definedness of the morphism condition over all representatives") {
  FiniteGroup s3 = make_symmetric(3);
  Family all = all_family(s3);
  OrbitCategory orb = orbit_category(s3, all);
  for (int i = 0; i < all.size(); ++i)
    for (int j = 0; j < all.size(); ++j)
      for (const Coset& c : orb.cosets[j]) {
        bool canonical = conjugate_inside(s3, c.representative, all.members[i], all.members[j]);
        for (int rep : c.elements)
          CHECK(conjugate_inside(s3, rep, all.members[i], all.members[j]) == canonical);
      }
}

TEST_CASE("identity morphisms are the identity cosets") {
  FiniteGroup g = make_group("D4");
  OrbitCategory orb = orbit_category(g, all_family(g));
  for (int i = 0; i < orb.cat.num_objects(); ++i) {
    int idm = orb.cat.identity[i];
    CHECK(orb.cosets[i][orb.mor_coset[idm]].contains(0));
  }
}
