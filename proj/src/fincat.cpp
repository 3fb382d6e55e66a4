#include "orbcat/fincat.hpp"

#include <queue>

namespace orbcat {

int FinCategory::add_object(const std::string& label) {
  objects.push_back(label);
  return num_objects() - 1;
}

int FinCategory::add_morphism(int dom, int cod, const std::string& label) {
  mor_dom.push_back(dom);
  mor_cod.push_back(cod);
  mor_label.push_back(label);
  return num_morphisms() - 1;
}

int FinCategory::compose(int g, int f) const {
  if (mor_cod[f] != mor_dom[g]) throw error("compose: morphisms not composable");
  if (id_flag[f]) return g;
  if (id_flag[g]) return f;
  auto it = comp.find(pair_key(g, f));
  if (it == comp.end()) throw error("compose: missing table entry");
  return it->second;
}

const std::vector<int>& FinCategory::hom_set(int a, int b) const {
  static const std::vector<int> empty;
  auto it = hom.find({a, b});
  return it == hom.end() ? empty : it->second;
}

void FinCategory::build_composition(const std::function<int(int, int)>& rule) {
  // by-object buckets to enumerate composable pairs
  std::vector<std::vector<int>> out(num_objects());
  for (int m = 0; m < num_morphisms(); ++m)
    if (!(identity[mor_dom[m]] == m && mor_dom[m] == mor_cod[m])) out[mor_dom[m]].push_back(m);
  for (int f = 0; f < num_morphisms(); ++f) {
    bool f_is_id = identity[mor_dom[f]] == f && mor_dom[f] == mor_cod[f];
    if (f_is_id) continue;
    for (int g : out[mor_cod[f]]) comp[pair_key(g, f)] = rule(g, f);
  }
}

void FinCategory::finalize() {
  int no = num_objects(), nm = num_morphisms();
  if (static_cast<int>(identity.size()) != no) throw error("fincat: identity list size mismatch");
  id_flag.assign(nm, 0);
  for (int o = 0; o < no; ++o) {
    int m = identity[o];
    if (m < 0 || m >= nm) throw error("fincat: identity index out of range");
    if (mor_dom[m] != o || mor_cod[m] != o) throw error("fincat: identity endpoints wrong");
    id_flag[m] = 1;
  }
  hom.clear();
  out_nonid.assign(no, {});
  for (int m = 0; m < nm; ++m) {
    if (mor_dom[m] < 0 || mor_dom[m] >= no || mor_cod[m] < 0 || mor_cod[m] >= no)
      throw error("fincat: morphism endpoint out of range");
    hom[{mor_dom[m], mor_cod[m]}].push_back(m);
    if (!id_flag[m]) out_nonid[mor_dom[m]].push_back(m);
  }
  // composition table totality and endpoint compatibility
  for (int f = 0; f < nm; ++f) {
    if (id_flag[f]) continue;
    for (int g : out_nonid[mor_cod[f]]) {
      auto it = comp.find(pair_key(g, f));
      if (it == comp.end()) throw error("fincat: composition table not total");
      int gf = it->second;
      if (gf < 0 || gf >= nm) throw error("fincat: composite out of range");
      if (mor_dom[gf] != mor_dom[f] || mor_cod[gf] != mor_cod[g])
        throw error("fincat: composite endpoints wrong");
    }
  }
  if (comp.size() != static_cast<std::size_t>(count_composable_pairs()))
    throw error("fincat: spurious composition entries");
}

long long FinCategory::count_composable_pairs() const {
  std::vector<long long> in_cnt(num_objects(), 0), out_cnt(num_objects(), 0);
  for (int m = 0; m < num_morphisms(); ++m) {
    if (id_flag[m]) continue;
    out_cnt[mor_dom[m]]++;
    in_cnt[mor_cod[m]]++;
  }
  long long total = 0;
  for (int o = 0; o < num_objects(); ++o) total += in_cnt[o] * out_cnt[o];
  return total;
}

void FinCategory::validate() const {
  for (int f = 0; f < num_morphisms(); ++f) {
    if (id_flag[f]) continue;
    for (int g : out_nonid[mor_cod[f]]) {
      int gf = compose(g, f);
      for (int h : out_nonid[mor_cod[g]]) {
        if (compose(h, gf) != compose(compose(h, g), f))
          throw error("fincat: associativity fails at (" + std::to_string(h) + "," +
                      std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  }
}

// --- functors ----------------------------------------------------------------

void FinFunctor::validate(const FinCategory& src, const FinCategory& dst) const {
  if (static_cast<int>(obj_map.size()) != src.num_objects() ||
      static_cast<int>(mor_map.size()) != src.num_morphisms())
    throw error("functor: map size mismatch");
  for (int o : obj_map)
    if (o < 0 || o >= dst.num_objects()) throw error("functor: object image out of range");
  for (int m = 0; m < src.num_morphisms(); ++m) {
    int fm = mor_map[m];
    if (fm < 0 || fm >= dst.num_morphisms()) throw error("functor: morphism image out of range");
    if (dst.mor_dom[fm] != obj_map[src.mor_dom[m]] || dst.mor_cod[fm] != obj_map[src.mor_cod[m]])
      throw error("functor: endpoints not preserved at morphism " + std::to_string(m));
  }
  for (int o = 0; o < src.num_objects(); ++o)
    if (mor_map[src.identity[o]] != dst.identity[obj_map[o]])
      throw error("functor: identity not preserved at object " + std::to_string(o));
  for (int f = 0; f < src.num_morphisms(); ++f) {
    if (src.id_flag[f]) continue;
    for (int g : src.out_nonid[src.mor_cod[f]])
      if (mor_map[src.compose(g, f)] != dst.compose(mor_map[g], mor_map[f]))
        throw error("functor: composition not preserved at (" + std::to_string(g) + "," +
                    std::to_string(f) + ")");
  }
}

FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f;
  f.obj_map.resize(c.num_objects());
  f.mor_map.resize(c.num_morphisms());
  for (int o = 0; o < c.num_objects(); ++o) f.obj_map[o] = o;
  for (int m = 0; m < c.num_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

FinFunctor compose_functor(const FinFunctor& outer, const FinFunctor& inner) {
  FinFunctor f;
  f.obj_map.resize(inner.obj_map.size());
  f.mor_map.resize(inner.mor_map.size());
  for (std::size_t o = 0; o < inner.obj_map.size(); ++o) f.obj_map[o] = outer.obj_map[inner.obj_map[o]];
  for (std::size_t m = 0; m < inner.mor_map.size(); ++m) f.mor_map[m] = outer.mor_map[inner.mor_map[m]];
  return f;
}

// --- set-valued functors ----------------------------------------------------

void SetValuedFunctor::validate(const FinCategory& c) const {
  if (static_cast<int>(set_size.size()) != c.num_objects() ||
      static_cast<int>(map.size()) != c.num_morphisms())
    throw error("set functor: size mismatch");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (static_cast<int>(map[m].size()) != set_size[c.mor_dom[m]])
      throw error("set functor: bad function domain at morphism " + std::to_string(m));
    for (int v : map[m])
      if (v < 0 || v >= set_size[c.mor_cod[m]])
        throw error("set functor: value out of range at morphism " + std::to_string(m));
  }
  for (int o = 0; o < c.num_objects(); ++o) {
    const auto& idm = map[c.identity[o]];
    for (int x = 0; x < set_size[o]; ++x)
      if (idm[x] != x) throw error("set functor: identity not preserved at object " + std::to_string(o));
  }
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.id_flag[f]) continue;
    for (int g : c.out_nonid[c.mor_cod[f]]) {
      const auto& mgf = map[c.compose(g, f)];
      const auto& mf = map[f];
      const auto& mg = map[g];
      for (int x = 0; x < set_size[c.mor_dom[f]]; ++x)
        if (mgf[x] != mg[mf[x]])
          throw error("set functor: composition not preserved at (" + std::to_string(g) + "," +
                      std::to_string(f) + ")");
    }
  }
}

std::string SetValuedFunctor::label_of(int obj, int x) const {
  if (obj < static_cast<int>(elem_label.size()) && x < static_cast<int>(elem_label[obj].size()))
    return elem_label[obj][x];
  return std::to_string(x);
}

SetValuedFunctor constant_functor(const FinCategory& c, int size) {
  SetValuedFunctor f;
  f.set_size.assign(c.num_objects(), size);
  f.map.resize(c.num_morphisms());
  std::vector<int> id(size);
  for (int i = 0; i < size; ++i) id[i] = i;
  for (int m = 0; m < c.num_morphisms(); ++m) f.map[m] = id;
  return f;
}

SetValuedFunctor pullback_functor(const FinCategory& b, const FinFunctor& beta,
                                  const FinCategory& c, const SetValuedFunctor& f) {
  (void)c;
  SetValuedFunctor out;
  out.set_size.resize(b.num_objects());
  out.elem_label.resize(b.num_objects());
  for (int o = 0; o < b.num_objects(); ++o) {
    out.set_size[o] = f.set_size[beta.obj_map[o]];
    if (beta.obj_map[o] < static_cast<int>(f.elem_label.size()))
      out.elem_label[o] = f.elem_label[beta.obj_map[o]];
  }
  out.map.resize(b.num_morphisms());
  for (int m = 0; m < b.num_morphisms(); ++m) out.map[m] = f.map[beta.mor_map[m]];
  return out;
}

void NatTrans::validate(const FinCategory& c, const SetValuedFunctor& f, const SetValuedFunctor& g) const {
  if (static_cast<int>(component.size()) != c.num_objects()) throw error("nat: component count mismatch");
  for (int o = 0; o < c.num_objects(); ++o) {
    if (static_cast<int>(component[o].size()) != f.set_size[o])
      throw error("nat: bad component domain at object " + std::to_string(o));
    for (int v : component[o])
      if (v < 0 || v >= g.set_size[o]) throw error("nat: component value out of range");
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int a = c.mor_dom[m], b = c.mor_cod[m];
    for (int x = 0; x < f.set_size[a]; ++x)
      if (component[b][f.map[m][x]] != g.map[m][component[a][x]])
        throw error("nat: naturality fails at morphism " + std::to_string(m) + " element " +
                    std::to_string(x));
  }
}

NatTrans identity_nat(const SetValuedFunctor& f) {
  NatTrans n;
  n.component.resize(f.set_size.size());
  for (std::size_t o = 0; o < f.set_size.size(); ++o) {
    n.component[o].resize(f.set_size[o]);
    for (int x = 0; x < f.set_size[o]; ++x) n.component[o][x] = x;
  }
  return n;
}

NatTrans compose_nat(const NatTrans& second, const NatTrans& first) {
  NatTrans n;
  n.component.resize(first.component.size());
  for (std::size_t o = 0; o < first.component.size(); ++o) {
    n.component[o].resize(first.component[o].size());
    for (std::size_t x = 0; x < first.component[o].size(); ++x)
      n.component[o][x] = second.component[o][first.component[o][x]];
  }
  return n;
}

NatTrans whisker_nat(const FinFunctor& alpha, const NatTrans& eta) {
  NatTrans n;
  n.component.resize(alpha.obj_map.size());
  for (std::size_t o = 0; o < alpha.obj_map.size(); ++o) n.component[o] = eta.component[alpha.obj_map[o]];
  return n;
}

std::vector<NatTrans> enumerate_nat_trans(const FinCategory& c, const SetValuedFunctor& f,
                                          const SetValuedFunctor& g, std::size_t limit) {
  int no = c.num_objects();
  std::vector<std::vector<int>> comp(no);
  std::vector<NatTrans> out;

  // naturality against morphisms with both endpoints already assigned
  auto consistent = [&](int o) {
    for (int m = 0; m < c.num_morphisms(); ++m) {
      int a = c.mor_dom[m], b = c.mor_cod[m];
      if (a > o || b > o) continue;
      if (a != o && b != o) continue;  // checked earlier
      for (int x = 0; x < f.set_size[a]; ++x)
        if (comp[b][f.map[m][x]] != g.map[m][comp[a][x]]) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int o) -> bool {
    if (o == no) {
      NatTrans n;
      n.component = comp;
      out.push_back(std::move(n));
      return limit == 0 || out.size() < limit;
    }
    int fs = f.set_size[o], gs = g.set_size[o];
    std::vector<int>& cur = comp[o];
    cur.assign(fs, 0);
    if (fs == 0) {
      if (!consistent(o)) return true;
      return rec(o + 1);
    }
    if (gs == 0) return true;  // no function into the empty set from a non-empty one
    while (true) {
      if (consistent(o)) {
        if (!rec(o + 1)) return false;
      }
      // next candidate function, lexicographic
      int k = fs - 1;
      while (k >= 0 && cur[k] == gs - 1) {
        cur[k] = 0;
        --k;
      }
      if (k < 0) break;
      cur[k]++;
    }
    return true;
  };
  rec(0);
  return out;
}

// --- derived categories ----------------------------------------------------

FinCategory opposite(const FinCategory& c) {
  FinCategory op;
  op.objects = c.objects;
  op.mor_dom = c.mor_cod;
  op.mor_cod = c.mor_dom;
  op.mor_label = c.mor_label;
  op.identity = c.identity;
  op.comp.reserve(c.comp.size());
  for (const auto& [key, gf] : c.comp) {
    int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    op.comp[pair_key(f, g)] = gf;
  }
  op.finalize();
  return op;
}

namespace {

SliceCategory slice(const FinCategory& c, int obj, bool over) {
  SliceCategory s;
  s.base_object = obj;
  s.over = over;
  // objects: arrows into (over) or out of (under) obj
  std::vector<int> obj_of_arrow(c.num_morphisms(), -1);
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if ((over ? c.mor_cod[m] : c.mor_dom[m]) != obj) continue;
    obj_of_arrow[m] = s.cat.add_object(c.mor_label[m]);
    s.obj_arrow.push_back(m);
  }
  // morphisms: psi with phi' ∘ psi = phi (over) or psi ∘ phi = phi' (under)
  std::map<std::pair<std::pair<int, int>, int>, int> index;  // ((dom_slice, cod_slice), psi)
  s.cat.identity.assign(s.cat.num_objects(), -1);
  for (int a = 0; a < s.cat.num_objects(); ++a) {
    int phi = s.obj_arrow[a];
    int tip_a = over ? c.mor_dom[phi] : c.mor_cod[phi];
    for (int b = 0; b < s.cat.num_objects(); ++b) {
      int phi2 = s.obj_arrow[b];
      int tip_b = over ? c.mor_dom[phi2] : c.mor_cod[phi2];
      for (int psi : c.hom_set(tip_a, tip_b)) {
        bool commutes = over ? c.compose(phi2, psi) == phi : c.compose(psi, phi) == phi2;
        if (!commutes) continue;
        int m = s.cat.add_morphism(a, b, c.mor_label[psi]);
        s.mor_underlying.push_back(psi);
        index[{{a, b}, psi}] = m;
        if (a == b && c.is_identity(psi)) s.cat.identity[a] = m;
      }
    }
  }
  for (int a = 0; a < s.cat.num_objects(); ++a)
    if (s.cat.identity[a] < 0) throw error("slice: missing identity");
  s.cat.build_composition([&](int g, int f) {
    int psi = c.compose(s.mor_underlying[g], s.mor_underlying[f]);
    return index.at({{s.cat.mor_dom[f], s.cat.mor_cod[g]}, psi});
  });
  s.cat.finalize();
  return s;
}

}  // namespace

SliceCategory over_category(const FinCategory& c, int obj) { return slice(c, obj, true); }
SliceCategory under_category(const FinCategory& c, int obj) { return slice(c, obj, false); }

CommaCategory comma_under(const FinCategory& s, const FinCategory& c, const FinFunctor& f, int d) {
  CommaCategory out;
  std::map<std::pair<int, int>, int> obj_index;
  for (int so = 0; so < s.num_objects(); ++so)
    for (int phi : c.hom_set(d, f.obj_map[so])) {
      obj_index[{so, phi}] = out.cat.add_object(s.objects[so] + " via " + c.mor_label[phi]);
      out.obj_data.push_back({so, phi});
    }
  out.cat.identity.assign(out.cat.num_objects(), -1);
  std::map<std::pair<std::pair<int, int>, int>, int> mor_index;
  for (int a = 0; a < out.cat.num_objects(); ++a) {
    auto [sa, phia] = out.obj_data[a];
    for (int b = 0; b < out.cat.num_objects(); ++b) {
      auto [sb, phib] = out.obj_data[b];
      for (int psi : s.hom_set(sa, sb)) {
        if (c.compose(f.mor_map[psi], phia) != phib) continue;
        int m = out.cat.add_morphism(a, b, s.mor_label[psi]);
        out.mor_underlying.push_back(psi);
        mor_index[{{a, b}, psi}] = m;
        if (a == b && s.is_identity(psi)) out.cat.identity[a] = m;
      }
    }
  }
  for (int a = 0; a < out.cat.num_objects(); ++a)
    if (out.cat.identity[a] < 0) throw error("comma: missing identity");
  out.cat.build_composition([&](int g, int fm) {
    int psi = s.compose(out.mor_underlying[g], out.mor_underlying[fm]);
    return mor_index.at({{out.cat.mor_dom[fm], out.cat.mor_cod[g]}, psi});
  });
  out.cat.finalize();
  return out;
}

Subcategory full_subcategory(const FinCategory& c, const std::vector<int>& objs) {
  std::vector<int> mors;
  std::vector<char> keep(c.num_objects(), 0);
  for (int o : objs) keep[o] = 1;
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (keep[c.mor_dom[m]] && keep[c.mor_cod[m]]) mors.push_back(m);
  return subcategory(c, objs, mors);
}

Subcategory subcategory(const FinCategory& c, const std::vector<int>& objs, const std::vector<int>& mors) {
  Subcategory s;
  s.obj_orig = objs;
  s.mor_orig = mors;
  std::vector<int> obj_new(c.num_objects(), -1), mor_new(c.num_morphisms(), -1);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    obj_new[objs[i]] = static_cast<int>(i);
    s.cat.add_object(c.objects[objs[i]]);
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    int m = mors[i];
    if (obj_new[c.mor_dom[m]] < 0 || obj_new[c.mor_cod[m]] < 0)
      throw error("subcategory: morphism endpoint outside object set");
    mor_new[m] = static_cast<int>(i);
    s.cat.add_morphism(obj_new[c.mor_dom[m]], obj_new[c.mor_cod[m]], c.mor_label[m]);
  }
  s.cat.identity.assign(objs.size(), -1);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    int idm = c.identity[objs[i]];
    if (mor_new[idm] < 0) throw error("subcategory: identity morphism missing");
    s.cat.identity[i] = mor_new[idm];
  }
  s.cat.build_composition([&](int g, int f) {
    int gf = c.compose(mors[g], mors[f]);
    if (mor_new[gf] < 0) throw error("subcategory: not closed under composition");
    return mor_new[gf];
  });
  s.cat.finalize();
  return s;
}

// --- structural queries ---------------------------------------------------------

ObjectSearch find_initial(const FinCategory& c) {
  ObjectSearch r;
  for (int w = 0; w < c.num_objects(); ++w) {
    bool ok = true;
    for (int o = 0; o < c.num_objects() && ok; ++o) ok = c.hom_set(w, o).size() == 1;
    if (ok) {
      if (r.object < 0)
        r.object = w;
      else
        r.unique = false;
    }
  }
  return r;
}

ObjectSearch find_terminal(const FinCategory& c) {
  ObjectSearch r;
  for (int w = 0; w < c.num_objects(); ++w) {
    bool ok = true;
    for (int o = 0; o < c.num_objects() && ok; ++o) ok = c.hom_set(o, w).size() == 1;
    if (ok) {
      if (r.object < 0)
        r.object = w;
      else
        r.unique = false;
    }
  }
  return r;
}

StructuralReport structural_predicates(const FinCategory& c) {
  StructuralReport r;
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      std::size_t n = c.hom_set(a, b).size();
      if (n > 1) r.thin = false;
      if (n != 1) r.indiscrete = false;
    }
  // connected components of the underlying undirected graph
  std::vector<int> parent(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) parent[o] = o;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int m = 0; m < c.num_morphisms(); ++m) parent[find(c.mor_dom[m])] = find(c.mor_cod[m]);
  std::map<int, int> comp_id;
  r.component.resize(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    int root = find(o);
    auto [it, fresh] = comp_id.insert({root, static_cast<int>(comp_id.size())});
    r.component[o] = it->second;
    (void)fresh;
  }
  r.num_components = static_cast<int>(comp_id.size());
  if (c.num_objects() == 0) r.indiscrete = false;
  return r;
}

}  // namespace orbcat
