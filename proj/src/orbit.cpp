#include "orbcat/orbit.hpp"

namespace orbcat {

int OrbitCategory::find_morphism(int dom, int cod, int gamma) const {
  return mor_lookup[dom][cod][coset_of[cod][gamma]];
}

OrbitCategory orbit_category(const FiniteGroup& g, const Family& f) {
  OrbitCategory orb;
  orb.group = g;
  orb.family = f;
  int n = f.size();
  for (int i = 0; i < n; ++i)
    orb.cat.add_object("G/" + subgroup_label(g, f.members[i]));
  orb.cosets.resize(n);
  orb.coset_of.assign(n, std::vector<int>(g.order, -1));
  for (int i = 0; i < n; ++i) {
    orb.cosets[i] = left_cosets(g, f.members[i]);
    for (std::size_t k = 0; k < orb.cosets[i].size(); ++k)
      for (int e : orb.cosets[i][k].elements) orb.coset_of[i][e] = static_cast<int>(k);
  }

  orb.cat.identity.assign(n, -1);
  orb.mor_lookup.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& slot = orb.mor_lookup[i][j];
      slot.assign(orb.cosets[j].size(), -1);
      for (std::size_t k = 0; k < orb.cosets[j].size(); ++k) {
        const Coset& c = orb.cosets[j][k];
        if (!conjugate_inside(g, c.representative, f.members[i], f.members[j])) continue;
        int m = orb.cat.add_morphism(i, j, "[" + coset_label(g, c) + "]");
        orb.mor_coset.push_back(static_cast<int>(k));
        slot[k] = m;
        if (i == j && c.contains(0)) orb.cat.identity[i] = m;
      }
    }
  for (int i = 0; i < n; ++i)
    if (orb.cat.identity[i] < 0) throw error("orbit category: missing identity morphism");

  // [δ]∘[γ] = [γδ]
  orb.cat.build_composition([&](int mg, int mf) {
    int i = orb.cat.mor_dom[mf];
    int j = orb.cat.mor_cod[mf];
    int k = orb.cat.mor_cod[mg];
    int gamma = orb.cosets[j][orb.mor_coset[mf]].representative;
    int delta = orb.cosets[k][orb.mor_coset[mg]].representative;
    int m = orb.mor_lookup[i][k][orb.coset_of[k][g.mul[gamma][delta]]];
    if (m < 0) throw error("orbit category: composite morphism missing");
    return m;
  });
  orb.cat.finalize();

  // U_F: object Γ/F as its coset set, morphism [δ] as νF -> νδG
  orb.u.set_size.resize(n);
  orb.u.elem_label.resize(n);
  for (int i = 0; i < n; ++i) {
    orb.u.set_size[i] = static_cast<int>(orb.cosets[i].size());
    for (const auto& c : orb.cosets[i]) orb.u.elem_label[i].push_back(coset_label(g, c));
  }
  orb.u.map.resize(orb.cat.num_morphisms());
  for (int m = 0; m < orb.cat.num_morphisms(); ++m) {
    int i = orb.cat.mor_dom[m], j = orb.cat.mor_cod[m];
    int delta = orb.cosets[j][orb.mor_coset[m]].representative;
    orb.u.map[m].resize(orb.u.set_size[i]);
    for (int x = 0; x < orb.u.set_size[i]; ++x) {
      int nu = orb.cosets[i][x].representative;
      orb.u.map[m][x] = orb.coset_of[j][g.mul[nu][delta]];
    }
  }
  orb.u.validate(orb.cat);
  return orb;
}

long long count_equivariant_maps(const FiniteGroup& g, const Subgroup& f, const Subgroup& h) {
  long long count = 0;
  for (const Coset& c : left_cosets(g, h)) {
    // candidate φ(1F) = c; equivariance forces φ(xF) = x·c, well defined
    // iff c is F-fixed: f·c = c for all f in F
    bool fixed = true;
    for (int x : f.elements) {
      if (!fixed) break;
      Coset moved = left_coset(g, h, g.mul[x][c.representative]);
      fixed = moved == c;
    }
    if (fixed) ++count;
  }
  return count;
}

}  // namespace orbcat
