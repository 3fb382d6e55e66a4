#include "orbcat/wreath.hpp"

#include <map>
#include <set>

#include "orbcat/nerve.hpp"

namespace orbcat {

WreathCategory wreath_product(const FinCategory& base, const SetValuedFunctor& u) {
  u.validate(base);
  WreathCategory w;
  w.obj_of.resize(base.num_objects());
  for (int c = 0; c < base.num_objects(); ++c)
    for (int x = 0; x < u.set_size[c]; ++x) {
      int o = w.total.add_object(base.objects[c] + " . " + u.label_of(c, x));
      w.obj_of[c].push_back(o);
      w.obj_pair.push_back({c, x});
    }
  for (int m = 0; m < base.num_morphisms(); ++m) {
    int dom = base.mor_dom[m], cod = base.mor_cod[m];
    for (int x = 0; x < u.set_size[dom]; ++x) {
      int y = u.map[m][x];
      int e = w.total.add_morphism(w.obj_of[dom][x], w.obj_of[cod][y], base.mor_label[m]);
      w.mor_pair.push_back({m, x});
      w.mor_of_pair[pair_key(m, x)] = e;
    }
  }
  w.total.identity.resize(w.total.num_objects());
  for (int o = 0; o < w.total.num_objects(); ++o) {
    auto [c, x] = w.obj_pair[o];
    w.total.identity[o] = w.morphism_of(base.identity[c], x);
  }
  // (ψ, y) ∘ (φ, x) = (ψ∘φ, x)
  for (const auto& [key, gf] : base.comp) {
    int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    for (int x = 0; x < u.set_size[base.mor_dom[f]]; ++x)
      w.total.comp[pair_key(w.morphism_of(g, u.map[f][x]), w.morphism_of(f, x))] =
          w.morphism_of(gf, x);
  }
  w.total.finalize();
  w.projection.obj_map.resize(w.total.num_objects());
  w.projection.mor_map.resize(w.total.num_morphisms());
  for (int o = 0; o < w.total.num_objects(); ++o) w.projection.obj_map[o] = w.obj_pair[o].first;
  for (int m = 0; m < w.total.num_morphisms(); ++m) w.projection.mor_map[m] = w.mor_pair[m].first;
  w.projection.validate(w.total, base);
  return w;
}

GammaCategory e_f_gamma(const FiniteGroup& g, const Family& f) {
  GammaCategory e;
  e.orb = orbit_category(g, f);
  e.wr = wreath_product(e.orb.cat, e.orb.u);

  // objects are the left cosets γF
  for (int o = 0; o < e.wr.total.num_objects(); ++o) {
    auto [c, x] = e.wr.obj_pair[o];
    e.obj_coset.push_back(e.orb.cosets[c][x]);
    e.wr.total.objects[o] = coset_label(g, e.obj_coset.back());
  }

  e.act_obj.assign(g.order, std::vector<int>(e.wr.total.num_objects()));
  e.act_mor.assign(g.order, std::vector<int>(e.wr.total.num_morphisms()));
  auto act_x = [&](int gamma, int c, int x) {
    return e.orb.coset_of[c][g.mul[gamma][e.orb.cosets[c][x].representative]];
  };
  for (int gamma = 0; gamma < g.order; ++gamma) {
    for (int o = 0; o < e.wr.total.num_objects(); ++o) {
      auto [c, x] = e.wr.obj_pair[o];
      e.act_obj[gamma][o] = e.wr.obj_of[c][act_x(gamma, c, x)];
    }
    for (int m = 0; m < e.wr.total.num_morphisms(); ++m) {
      auto [bm, x] = e.wr.mor_pair[m];
      e.act_mor[gamma][m] = e.wr.morphism_of(bm, act_x(gamma, e.orb.cat.mor_dom[bm], x));
    }
  }
  return e;
}

void GammaCategory::validate_action() const {
  const FiniteGroup& g = orb.group;
  const FinCategory& c = wr.total;
  // each ul-γ is a functor
  for (int gamma = 0; gamma < g.order; ++gamma) {
    FinFunctor f;
    f.obj_map = act_obj[gamma];
    f.mor_map = act_mor[gamma];
    f.validate(c, c);
  }
  // homomorphism to functors: ul-γ1 ∘ ul-γ2 = ul-(γ1 γ2), ul-1 = id
  for (int o = 0; o < c.num_objects(); ++o)
    if (act_obj[0][o] != o) throw error("action: identity does not act trivially");
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (act_mor[0][m] != m) throw error("action: identity does not act trivially on morphisms");
  for (int g1 = 0; g1 < g.order; ++g1)
    for (int g2 = 0; g2 < g.order; ++g2) {
      int g12 = g.mul[g1][g2];
      for (int o = 0; o < c.num_objects(); ++o)
        if (act_obj[g1][act_obj[g2][o]] != act_obj[g12][o])
          throw error("action: object action is not a homomorphism");
      for (int m = 0; m < c.num_morphisms(); ++m)
        if (act_mor[g1][act_mor[g2][m]] != act_mor[g12][m])
          throw error("action: morphism action is not a homomorphism");
    }
  // coset identification: objects are pairwise distinct cosets
  std::set<std::vector<int>> seen;
  for (const auto& cs : obj_coset)
    if (!seen.insert(cs.elements).second) throw error("E_F: object cosets are not distinct");
  // morphism existence rule via canonical representatives
  for (int a = 0; a < c.num_objects(); ++a) {
    auto [ca, xa] = wr.obj_pair[a];
    for (int b = 0; b < c.num_objects(); ++b) {
      auto [cb, xb] = wr.obj_pair[b];
      int gamma = obj_coset[a].representative, nu = obj_coset[b].representative;
      int t = g.mul[g.inv[gamma]][nu];
      bool expected = conjugate_inside(g, t, orb.family.members[ca], orb.family.members[cb]);
      std::size_t n = c.hom_set(a, b).size();
      if (n > 1) throw error("E_F: not thin");
      if (expected != (n == 1))
        throw error("E_F: morphism existence rule fails at (" + c.objects[a] + " -> " +
                    c.objects[b] + ")");
    }
  }
}

FixedScan fixed_scan(const GammaCategory& e, const Subgroup& h) {
  const FinCategory& c = e.cat();
  FixedScan scan;
  for (int o = 0; o < c.num_objects(); ++o) {
    bool fixed = true;
    for (int x : h.elements)
      if (e.act_obj[x][o] != o) {
        fixed = false;
        break;
      }
    if (fixed) scan.objects.push_back(o);
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    bool fixed = true;
    for (int x : h.elements)
      if (e.act_mor[x][m] != m) {
        fixed = false;
        break;
      }
    if (fixed) scan.morphisms.push_back(m);
  }
  // description from the coset condition: γ⁻¹Hγ ≤ F, full on those objects
  std::vector<int> objs_described, mors_described;
  std::vector<char> in_described(c.num_objects(), 0);
  for (int o = 0; o < c.num_objects(); ++o) {
    auto [cb, x] = e.wr.obj_pair[o];
    if (conjugate_inside(e.group(), e.obj_coset[o].representative, h, e.family().members[cb])) {
      objs_described.push_back(o);
      in_described[o] = 1;
    }
  }
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (in_described[c.mor_dom[m]] && in_described[c.mor_cod[m]]) mors_described.push_back(m);
  if (scan.objects != objs_described)
    throw error("fixed subcategory: direct scan disagrees with the coset description");
  if (scan.morphisms != mors_described)
    throw error("fixed subcategory: fullness cross-check fails");
  return scan;
}

Subcategory fixed_subcategory(const GammaCategory& e, const Subgroup& h) {
  FixedScan scan = fixed_scan(e, h);
  return subcategory(e.cat(), scan.objects, scan.morphisms);
}

ObjectSearch fixed_initial(const GammaCategory& e, const FixedScan& scan) {
  // the fixed subcategory is full, so hom sets agree with the parent
  const FinCategory& c = e.cat();
  ObjectSearch r;
  for (std::size_t wi = 0; wi < scan.objects.size(); ++wi) {
    int w = scan.objects[wi];
    bool ok = true;
    for (int o : scan.objects) {
      if (c.hom_set(w, o).size() != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (r.object < 0)
        r.object = static_cast<int>(wi);
      else
        r.unique = false;
    }
  }
  return r;
}

ClassifyingCertificate classifying_certificate(const GammaCategory& e) {
  ClassifyingCertificate cert;
  for (const Subgroup& h : enumerate_subgroups(e.group())) {
    CertificateEntry entry;
    entry.subgroup = h;
    entry.in_family = e.family().contains(h);
    FixedScan fixed = fixed_scan(e, h);
    entry.fixed_empty = fixed.objects.empty();
    if (entry.in_family) {
      ObjectSearch s = fixed_initial(e, fixed);
      if (s.object >= 0) {
        entry.witness = fixed.objects[s.object];
        entry.witness_label = e.cat().objects[entry.witness];
        entry.ok = true;
      }
    } else {
      entry.ok = entry.fixed_empty;
    }
    cert.all_ok = cert.all_ok && entry.ok;
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

QuotientCompareReport quotient_compare(const GammaCategory& e, int maxdim, long long cap) {
  QuotientCompareReport rep;
  rep.maxdim = maxdim;
  rep.orbit_counts.assign(maxdim + 1, 0);
  rep.base_counts.assign(maxdim + 1, 0);
  rep.total_counts.assign(maxdim + 1, 0);
  const FiniteGroup& g = e.group();
  const OrbitCategory& orb = e.orb;
  const FinCategory& base = orb.cat;

  auto fail = [&](const std::string& why) {
    if (rep.ok) {
      rep.ok = false;
      rep.counterexample = why;
    }
  };

  // The fiber of the forgetful map over a k-chain of the orbit category is
  // its set of lifts, indexed by the fiber of U at the first object. Three
  // exhaustive identities ground the levelwise comparison:
  //  (a) the action moves lifts entrywise: ul-γ(m, x) = (m, γ·x) for every
  //      morphism of E and every γ;
  //  (b) the projection functor preserves identities and composition (so
  //      faces and degeneracies of any lift project to faces and
  //      degeneracies of the base chain);
  //  (c) Γ acts transitively on each fiber, so the lifts form one orbit.
  for (int gamma = 0; gamma < g.order; ++gamma)
    for (int m = 0; m < e.cat().num_morphisms(); ++m) {
      auto [bm, x] = e.wr.mor_pair[m];
      int c0 = base.mor_dom[bm];
      int gx = orb.coset_of[c0][g.mul[gamma][orb.cosets[c0][x].representative]];
      if (e.act_mor[gamma][m] != e.wr.morphism_of(bm, gx)) {
        fail("action does not permute lifts entrywise");
        return rep;
      }
    }
  try {
    e.wr.projection.validate(e.cat(), base);
  } catch (const error& err) {
    fail(std::string("projection is not functorial: ") + err.what());
    return rep;
  }
  for (int c = 0; c < base.num_objects(); ++c) {
    int m = orb.u.set_size[c];
    rep.base_counts[0]++;
    rep.total_counts[0] += m;
    std::vector<char> hit(m, 0);
    int count = 0;
    for (int gamma = 0; gamma < g.order; ++gamma) {
      int gx = orb.coset_of[c][gamma];  // γ · (identity coset)
      if (!hit[gx]) {
        hit[gx] = 1;
        ++count;
      }
    }
    if (count != m) {
      fail("lift orbit is not the whole fiber at " + base.objects[c]);
      return rep;
    }
    rep.orbit_counts[0]++;
  }

  std::vector<int> lifted, face_base, face_lift;
  try {
    for_each_chain(base, maxdim, cap, [&](int k, const std::vector<int>& chain) {
      if (!rep.ok) return;
      rep.base_counts[k]++;
      int c0 = base.mor_dom[chain[0]];
      int fiber = orb.u.set_size[c0];
      rep.total_counts[k] += fiber;

      // representative lift: faces commute with the forgetful map and
      // degeneracy statuses agree on both sides
      int cur = 0;
      lifted.clear();
      for (int mi : chain) {
        lifted.push_back(e.wr.morphism_of(mi, cur));
        cur = orb.u.map[mi][cur];
      }
      for (int j = 0; j <= k; ++j) {
        bool base_nd = chain_face(base, chain, j, face_base);
        bool lift_nd = chain_face(e.cat(), lifted, j, face_lift);
        if (base_nd != lift_nd) {
          fail("face degeneracy mismatch at face " + std::to_string(j));
          return;
        }
        if (!base_nd || k == 1) continue;
        for (std::size_t i = 0; i < face_base.size(); ++i)
          if (e.wr.mor_pair[face_lift[i]].first != face_base[i]) {
            fail("face does not project to the base face");
            return;
          }
      }
      // inserting an identity anywhere projects to the base degeneracy
      cur = 0;
      for (std::size_t i = 0; i <= chain.size(); ++i) {
        int obj = i == 0 ? c0 : base.mor_cod[chain[i - 1]];
        int lift_id = e.cat().identity[e.wr.obj_of[obj][cur]];
        if (e.wr.mor_pair[lift_id].first != base.identity[obj]) {
          fail("degeneracy does not project to the base degeneracy");
          return;
        }
        if (i < chain.size()) cur = orb.u.map[chain[i]][cur];
      }
      rep.orbit_counts[k]++;
    });
  } catch (const error& err) {
    fail(err.what());
  }
  if (rep.ok && rep.orbit_counts != rep.base_counts) fail("levelwise orbit counts differ");
  return rep;
}

FinFunctor lift_nat_trans(const FinCategory& c, const SetValuedFunctor& f, const SetValuedFunctor& g,
                          const NatTrans& eta, const WreathCategory& cf, const WreathCategory& cg) {
  eta.validate(c, f, g);
  FinFunctor out;
  out.obj_map.resize(cf.total.num_objects());
  out.mor_map.resize(cf.total.num_morphisms());
  for (int o = 0; o < cf.total.num_objects(); ++o) {
    auto [cb, x] = cf.obj_pair[o];
    out.obj_map[o] = cg.object_of(cb, eta.component[cb][x]);
  }
  for (int m = 0; m < cf.total.num_morphisms(); ++m) {
    auto [bm, x] = cf.mor_pair[m];
    out.mor_map[m] = cg.morphism_of(bm, eta.component[c.mor_dom[bm]][x]);
  }
  out.validate(cf.total, cg.total);
  return out;
}

FinFunctor reindex_functor(const FinFunctor& beta, const WreathCategory& b_fb, const WreathCategory& c_f) {
  FinFunctor out;
  out.obj_map.resize(b_fb.total.num_objects());
  out.mor_map.resize(b_fb.total.num_morphisms());
  for (int o = 0; o < b_fb.total.num_objects(); ++o) {
    auto [b, x] = b_fb.obj_pair[o];
    out.obj_map[o] = c_f.object_of(beta.obj_map[b], x);
  }
  for (int m = 0; m < b_fb.total.num_morphisms(); ++m) {
    auto [bm, x] = b_fb.mor_pair[m];
    out.mor_map[m] = c_f.morphism_of(beta.mor_map[bm], x);
  }
  out.validate(b_fb.total, c_f.total);
  return out;
}

bool check_lift_reindex_square(const FinCategory& a, const FinCategory& b, const FinFunctor& alpha,
                               const SetValuedFunctor& f, const SetValuedFunctor& g, const NatTrans& eta,
                               std::string* why) {
  alpha.validate(a, b);
  SetValuedFunctor fa = pullback_functor(a, alpha, b, f);
  SetValuedFunctor ga = pullback_functor(a, alpha, b, g);
  WreathCategory w_afa = wreath_product(a, fa);
  WreathCategory w_aga = wreath_product(a, ga);
  WreathCategory w_bf = wreath_product(b, f);
  WreathCategory w_bg = wreath_product(b, g);
  NatTrans eta_alpha = whisker_nat(alpha, eta);
  FinFunctor top = reindex_functor(alpha, w_afa, w_bf);
  FinFunctor bottom = reindex_functor(alpha, w_aga, w_bg);
  FinFunctor left = lift_nat_trans(a, fa, ga, eta_alpha, w_afa, w_aga);
  FinFunctor right = lift_nat_trans(b, f, g, eta, w_bf, w_bg);
  FinFunctor via_right = compose_functor(right, top);
  FinFunctor via_left = compose_functor(bottom, left);
  if (via_right == via_left) return true;
  if (why) *why = "lift/reindex square does not commute";
  return false;
}

InducedFunctor induced_functor(const Homomorphism& h, const Family& f_target) {
  h.validate();
  InducedFunctor ind;
  ind.preimage = preimage_family(h, f_target);
  ind.source = e_f_gamma(h.source, ind.preimage);
  ind.target = e_f_gamma(h.target, f_target);
  const OrbitCategory& so = ind.source.orb;
  const OrbitCategory& to = ind.target.orb;

  // h_*: Γ'/G -> Γ/h(G), [γ'] -> [h(γ')]
  ind.h_star.obj_map.resize(so.cat.num_objects());
  for (int i = 0; i < so.cat.num_objects(); ++i) {
    int j = to.family.index_of(image_subgroup(h, so.family.members[i]));
    if (j < 0) throw error("induced functor: image subgroup escapes the target family");
    ind.h_star.obj_map[i] = j;
  }
  ind.h_star.mor_map.resize(so.cat.num_morphisms());
  for (int m = 0; m < so.cat.num_morphisms(); ++m) {
    int i = so.cat.mor_dom[m], j = so.cat.mor_cod[m];
    int rep = so.cosets[j][so.mor_coset[m]].representative;
    int mm = to.find_morphism(ind.h_star.obj_map[i], ind.h_star.obj_map[j], h.image[rep]);
    if (mm < 0) throw error("induced functor: image morphism missing");
    ind.h_star.mor_map[m] = mm;
  }
  ind.h_star.validate(so.cat, to.cat);

  // η_{h,F}: U' => U∘h_*, γ'G -> h(γ')h(G)
  ind.eta.component.resize(so.cat.num_objects());
  for (int i = 0; i < so.cat.num_objects(); ++i) {
    int ti = ind.h_star.obj_map[i];
    ind.eta.component[i].resize(so.u.set_size[i]);
    for (int x = 0; x < so.u.set_size[i]; ++x)
      ind.eta.component[i][x] = to.coset_of[ti][h.image[so.cosets[i][x].representative]];
  }
  SetValuedFunctor pulled = pullback_functor(so.cat, ind.h_star, to.cat, to.u);
  ind.eta.validate(so.cat, so.u, pulled);

  WreathCategory middle = wreath_product(so.cat, pulled);
  FinFunctor lifted = lift_nat_trans(so.cat, so.u, pulled, ind.eta, ind.source.wr, middle);
  FinFunctor reindexed = reindex_functor(ind.h_star, middle, ind.target.wr);
  ind.functor = compose_functor(reindexed, lifted);
  ind.functor.validate(ind.source.cat(), ind.target.cat());
  return ind;
}

bool check_induced_equivariance(const InducedFunctor& ind, const Homomorphism& h, std::string* why) {
  const FiniteGroup& src = h.source;
  for (int gp = 0; gp < src.order; ++gp) {
    int hg = h.image[gp];
    for (int o = 0; o < ind.source.cat().num_objects(); ++o)
      if (ind.target.act_obj[hg][ind.functor.obj_map[o]] !=
          ind.functor.obj_map[ind.source.act_obj[gp][o]]) {
        if (why) *why = "equivariance fails on objects at group element " + std::to_string(gp);
        return false;
      }
    for (int m = 0; m < ind.source.cat().num_morphisms(); ++m)
      if (ind.target.act_mor[hg][ind.functor.mor_map[m]] !=
          ind.functor.mor_map[ind.source.act_mor[gp][m]]) {
        if (why) *why = "equivariance fails on morphisms at group element " + std::to_string(gp);
        return false;
      }
  }
  return true;
}

}  // namespace orbcat
