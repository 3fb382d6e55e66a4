#include "orbcat/holim.hpp"

#include <algorithm>
#include <set>

namespace orbcat {

namespace {

int index_in(const std::vector<int>& sorted, int v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

FixedPointDiagram fixed_point_diagram(const OrbitCategory& orb, const GammaSet& x) {
  x.validate();
  if (x.group.mul != orb.group.mul) throw error("fixed point diagram: group mismatch");
  FixedPointDiagram d;
  d.op = opposite(orb.cat);
  int n = orb.family.size();
  d.fixed.resize(n);
  for (int i = 0; i < n; ++i) d.fixed[i] = x.fixed_points(orb.family.members[i]);
  d.functor.set_size.resize(n);
  d.functor.elem_label.resize(n);
  for (int i = 0; i < n; ++i) {
    d.functor.set_size[i] = static_cast<int>(d.fixed[i].size());
    for (int p : d.fixed[i]) d.functor.elem_label[i].push_back("x" + std::to_string(p));
  }
  d.functor.map.resize(d.op.num_morphisms());
  for (int m = 0; m < d.op.num_morphisms(); ++m) {
    // m is an orbit morphism [γ]: Γ/F -> Γ/G; in the opposite category it
    // runs G -> F and acts by x -> γ·x
    int f = orb.cat.mor_dom[m], g = orb.cat.mor_cod[m];
    int gamma = orb.cosets[g][orb.mor_coset[m]].representative;
    d.functor.map[m].resize(d.fixed[g].size());
    for (std::size_t k = 0; k < d.fixed[g].size(); ++k) {
      int target = index_in(d.fixed[f], x.apply(gamma, d.fixed[g][k]));
      if (target < 0) throw error("fixed point diagram: map leaves the fixed set");
      d.functor.map[m][k] = target;
    }
  }
  d.functor.validate(d.op);
  return d;
}

std::vector<Cone> holim_discrete(const OrbitCategory& orb, const GammaSet& x) {
  if (x.group.mul != orb.group.mul) throw error("holim: group mismatch");
  int n = orb.family.size();
  std::vector<std::vector<int>> fixed(n);
  for (int i = 0; i < n; ++i) fixed[i] = x.fixed_points(orb.family.members[i]);

  // naturality constraints (a, b, γ): requires γ·x_b = x_a
  struct Constraint {
    int a, b, gamma;
  };
  std::vector<std::vector<Constraint>> by_later(n);  // checked once max(a,b) is assigned
  for (int m = 0; m < orb.cat.num_morphisms(); ++m) {
    int a = orb.cat.mor_dom[m], b = orb.cat.mor_cod[m];
    int gamma = orb.cosets[b][orb.mor_coset[m]].representative;
    by_later[std::max(a, b)].push_back({a, b, gamma});
  }

  std::vector<Cone> out;
  std::vector<int> at(n, -1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      Cone c;
      c.at = at;
      out.push_back(std::move(c));
      return;
    }
    for (int p : fixed[k]) {
      at[k] = p;
      bool ok = true;
      for (const auto& con : by_later[k]) {
        if (x.apply(con.gamma, at[con.b]) != at[con.a]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
    at[k] = -1;
  };
  rec(rec, 0);
  return out;
}

Pi0GammaSet pi0_gamma(const GammaCategory& e) {
  StructuralReport s = structural_predicates(e.cat());
  Pi0GammaSet p;
  p.size = s.num_components;
  p.component = s.component;
  p.act.assign(e.group().order, std::vector<int>(p.size, -1));
  for (int gamma = 0; gamma < e.group().order; ++gamma)
    for (int o = 0; o < e.cat().num_objects(); ++o) {
      int c = p.component[o], gc = p.component[e.act_obj[gamma][o]];
      if (p.act[gamma][c] == -1)
        p.act[gamma][c] = gc;
      else if (p.act[gamma][c] != gc)
        throw error("pi0: action is not well defined on components");
    }
  return p;
}

std::vector<std::vector<int>> equivariant_maps_pi0(const GammaCategory& e, const GammaSet& x) {
  Pi0GammaSet p = pi0_gamma(e);
  std::vector<std::vector<int>> out;
  std::vector<int> val(p.size, -1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == p.size) {
      out.push_back(val);
      return;
    }
    for (int v = 0; v < x.size; ++v) {
      val[k] = v;
      bool ok = true;
      for (int gamma = 0; gamma < e.group().order && ok; ++gamma)
        for (int c = 0; c <= k && ok; ++c) {
          int gc = p.act[gamma][c];
          if (gc <= k && val[gc] != x.apply(gamma, val[c])) ok = false;
        }
      if (ok) self(self, k + 1);
    }
    val[k] = -1;
  };
  rec(rec, 0);
  return out;
}

JFunctor j_functor(const GammaCategory& e, int member) {
  JFunctor j;
  j.member = member;
  j.under = under_category(e.orb.cat, member);
  int base_point = e.orb.coset_of[member][0];  // the coset 1F
  j.into_e.obj_map.resize(j.under.cat.num_objects());
  std::vector<int> value(j.under.cat.num_objects());
  for (int o = 0; o < j.under.cat.num_objects(); ++o) {
    int phi = j.under.obj_arrow[o];
    value[o] = e.orb.u.map[phi][base_point];  // φ(1F)
    j.into_e.obj_map[o] = e.wr.obj_of[e.orb.cat.mor_cod[phi]][value[o]];
  }
  j.into_e.mor_map.resize(j.under.cat.num_morphisms());
  for (int m = 0; m < j.under.cat.num_morphisms(); ++m) {
    int tau = j.under.mor_underlying[m];
    j.into_e.mor_map[m] = e.wr.morphism_of(tau, value[j.under.cat.mor_dom[m]]);
  }
  j.into_e.validate(j.under.cat, e.cat());
  // the image lies in the F-fixed subcategory
  for (int o = 0; o < j.under.cat.num_objects(); ++o)
    for (int h : e.family().members[member].elements)
      if (e.act_obj[h][j.into_e.obj_map[o]] != j.into_e.obj_map[o])
        throw error("j functor: image object is not fixed");
  for (int m = 0; m < j.under.cat.num_morphisms(); ++m)
    for (int h : e.family().members[member].elements)
      if (e.act_mor[h][j.into_e.mor_map[m]] != j.into_e.mor_map[m])
        throw error("j functor: image morphism is not fixed");
  return j;
}

HolimContext make_holim_context(const GammaCategory& e) {
  HolimContext ctx;
  ctx.pi0 = pi0_gamma(e);
  for (int i = 0; i < e.family().size(); ++i) ctx.js.push_back(j_functor(e, i));
  return ctx;
}

HolimTheoremReport verify_holim_theorem(const GammaCategory& e, const GammaSet& x) {
  return verify_holim_theorem(e, x, make_holim_context(e));
}

HolimTheoremReport verify_holim_theorem(const GammaCategory& e, const GammaSet& x,
                                        const HolimContext& ctx) {
  HolimTheoremReport rep;
  std::vector<Cone> cones = holim_discrete(e.orb, x);
  std::sort(cones.begin(), cones.end());
  rep.cones = static_cast<long long>(cones.size());

  std::vector<std::vector<int>> maps;
  {
    // equivariant maps out of π₀, enumerated against the cached Γ-set
    const Pi0GammaSet& p = ctx.pi0;
    std::vector<int> val(p.size, -1);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == p.size) {
        maps.push_back(val);
        return;
      }
      for (int v = 0; v < x.size; ++v) {
        val[k] = v;
        bool ok = true;
        for (int gamma = 0; gamma < e.group().order && ok; ++gamma)
          for (int c = 0; c <= k && ok; ++c) {
            int gc = p.act[gamma][c];
            if (gc <= k && val[gc] != x.apply(gamma, val[c])) ok = false;
          }
        if (ok) self(self, k + 1);
      }
      val[k] = -1;
    };
    rec(rec, 0);
  }
  rep.maps = static_cast<long long>(maps.size());

  const Pi0GammaSet& p = ctx.pi0;
  int n = e.family().size();
  const std::vector<JFunctor>& js = ctx.js;
  rep.j_functors_ok = true;

  // each equivariant map Φ induces the cone F -> Φ(component of j_F(-)),
  // which must be constant over the (connected) under-category
  std::vector<Cone> induced;
  for (const auto& phi : maps) {
    Cone c;
    c.at.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      for (int o = 0; o < js[i].under.cat.num_objects(); ++o) {
        int v = phi[p.component[js[i].into_e.obj_map[o]]];
        if (c.at[i] == -1)
          c.at[i] = v;
        else if (c.at[i] != v) {
          rep.detail = "induced cone is not constant over the under-category";
          return rep;
        }
      }
      for (int h : e.family().members[i].elements)
        if (x.apply(h, c.at[i]) != c.at[i]) {
          rep.detail = "induced cone value is not a fixed point";
          return rep;
        }
    }
    induced.push_back(std::move(c));
  }
  std::sort(induced.begin(), induced.end());
  for (std::size_t i = 0; i + 1 < induced.size(); ++i)
    if (induced[i] == induced[i + 1]) {
      rep.detail = "correspondence is not injective";
      return rep;
    }
  if (induced != cones) {
    rep.detail = "correspondence does not match the enumerated cones";
    return rep;
  }
  rep.ok = true;
  return rep;
}

CofinalityReport cofinality_check(const OrbitCategory& orb, const std::vector<int>& sub_members) {
  for (int s : sub_members)
    if (s < 0 || s >= orb.family.size()) throw error("cofinality: bad member index");
  Subcategory sub = full_subcategory(orb.cat, sub_members);
  FinFunctor incl;
  incl.obj_map = sub.obj_orig;
  incl.mor_map = sub.mor_orig;
  incl.validate(sub.cat, orb.cat);

  CofinalityReport rep;
  for (int d = 0; d < orb.cat.num_objects(); ++d) {
    CommaCategory fiber = comma_under(sub.cat, orb.cat, incl, d);
    StructuralReport s = structural_predicates(fiber.cat);
    FiberReport f;
    f.base_member = d;
    f.objects = fiber.cat.num_objects();
    f.indiscrete = fiber.cat.num_objects() > 0 && s.indiscrete;
    f.has_initial = find_initial(fiber.cat).object >= 0;
    f.has_terminal = find_terminal(fiber.cat).object >= 0;
    f.contractible = f.indiscrete || f.has_initial || f.has_terminal;
    if (!f.indiscrete) {
      if (fiber.cat.num_objects() == 0) {
        f.detail = "empty fiber";
      } else {
        for (int a = 0; a < fiber.cat.num_objects() && f.detail.empty(); ++a)
          for (int b = 0; b < fiber.cat.num_objects() && f.detail.empty(); ++b)
            if (fiber.cat.hom_set(a, b).size() != 1)
              f.detail = std::to_string(f.objects) + " objects; hom(" + fiber.cat.objects[a] +
                         ", " + fiber.cat.objects[b] + ") has " +
                         std::to_string(fiber.cat.hom_set(a, b).size()) + " elements";
      }
      if (rep.first_not_indiscrete < 0) rep.first_not_indiscrete = static_cast<int>(rep.fibers.size());
      rep.all_indiscrete = false;
    }
    if (!f.contractible) {
      if (rep.first_bad < 0) rep.first_bad = static_cast<int>(rep.fibers.size());
      rep.cofinal = false;
    }
    rep.fibers.push_back(std::move(f));
  }
  return rep;
}

namespace {

SylowReport compare_with_member(const OrbitCategory& orb, int p_index, const GammaSet& x) {
  SylowReport rep;
  rep.hypothesis_holds = true;
  const FiniteGroup& g = orb.group;
  const Subgroup& p_sub = orb.family.members[p_index];
  rep.sylow_label = subgroup_label(g, p_sub);

  CofinalityReport cof = cofinality_check(orb, {p_index});
  rep.cofinal = cof.all_indiscrete;

  const auto& endos = orb.cat.hom_set(p_index, p_index);
  rep.weyl_order = static_cast<int>(endos.size());
  std::vector<int> weyl_fixed;
  for (int pt : x.fixed_points(p_sub)) {
    bool fixed = true;
    for (int m : endos) {
      int gamma = orb.cosets[p_index][orb.mor_coset[m]].representative;
      if (x.apply(gamma, pt) != pt) {
        fixed = false;
        break;
      }
    }
    if (fixed) weyl_fixed.push_back(pt);
  }
  rep.weyl_fixed_count = static_cast<long long>(weyl_fixed.size());

  std::vector<Cone> cones = holim_discrete(orb, x);
  rep.holim_count = static_cast<long long>(cones.size());

  std::vector<int> image;
  for (const auto& c : cones) image.push_back(c.at[p_index]);
  std::sort(image.begin(), image.end());
  bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  rep.match = injective && image == weyl_fixed;
  rep.ok = rep.cofinal && rep.match;
  if (!rep.match)
    rep.detail = "cone projection does not biject onto the Weyl-fixed set";
  else if (!rep.cofinal)
    rep.detail = "inclusion of the maximal member is not cofinal";
  return rep;
}

}  // namespace

SylowReport sylow_comparison(const FiniteGroup& g, int p, const GammaSet& x) {
  Family fam = p_subgroup_family(g, p);
  OrbitCategory orb = orbit_category(g, fam);
  int top_order = fam.members.back().order();
  std::vector<int> tops;
  for (int i = 0; i < fam.size(); ++i)
    if (fam.members[i].order() == top_order) tops.push_back(i);

  if (tops.size() > 1) {
    SylowReport rep;
    rep.hypothesis_holds = false;
    rep.sylow_label = subgroup_label(g, fam.members[tops[0]]);
    CofinalityReport cof = cofinality_check(orb, {tops[0]});
    rep.cofinal = cof.all_indiscrete;
    rep.ok = !cof.all_indiscrete && cof.first_not_indiscrete >= 0;
    if (cof.first_not_indiscrete >= 0) {
      const FiberReport& f = cof.fibers[cof.first_not_indiscrete];
      rep.detail = "no unique Sylow " + std::to_string(p) + "-subgroup (" +
                   std::to_string(tops.size()) + " conjugates); fiber over " +
                   orb.cat.objects[f.base_member] + " is not indiscrete: " + f.detail;
    } else {
      rep.detail = "hypothesis fails but every fiber is indiscrete";
    }
    return rep;
  }

  if (!is_normal(g, fam.members[tops[0]]))
    throw error("sylow: unique Sylow subgroup must be normal");
  SylowReport rep = compare_with_member(orb, tops[0], x);
  rep.detail = rep.ok ? "unique normal Sylow subgroup; bijection verified" : rep.detail;
  return rep;
}

SylowReport maximal_member_comparison(const FiniteGroup& g, const Subgroup& max, const GammaSet& x) {
  Family fam = close_family(g, {max});
  OrbitCategory orb = orbit_category(g, fam);
  int idx = fam.index_of(max);
  if (idx < 0) throw error("maximal member comparison: subgroup missing from its own closure");
  bool unique_max = true;
  for (const auto& m : fam.members)
    if (!is_subset(m.elements, max.elements)) unique_max = false;

  if (!unique_max) {
    SylowReport rep;
    rep.hypothesis_holds = false;
    rep.sylow_label = subgroup_label(g, max);
    CofinalityReport cof = cofinality_check(orb, {idx});
    rep.cofinal = cof.all_indiscrete;
    rep.ok = !cof.all_indiscrete && cof.first_not_indiscrete >= 0;
    rep.detail = cof.first_not_indiscrete >= 0
                     ? "not a unique maximal member; fiber over " +
                           orb.cat.objects[cof.fibers[cof.first_not_indiscrete].base_member] +
                           " is not indiscrete: " + cof.fibers[cof.first_not_indiscrete].detail
                     : "not a unique maximal member, yet every fiber is indiscrete";
    return rep;
  }
  SylowReport rep = compare_with_member(orb, idx, x);
  rep.detail = rep.ok ? "unique maximal member; bijection verified" : rep.detail;
  return rep;
}

}  // namespace orbcat
