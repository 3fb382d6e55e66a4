#include "orbcat/nerve.hpp"

#include <map>
#include <unordered_map>

namespace orbcat {

bool chain_face(const FinCategory& c, const std::vector<int>& chain, int j, std::vector<int>& out) {
  int k = static_cast<int>(chain.size());
  out.clear();
  if (j == 0) {
    out.assign(chain.begin() + 1, chain.end());
    return true;
  }
  if (j == k) {
    out.assign(chain.begin(), chain.end() - 1);
    return true;
  }
  int composite = c.compose(chain[j], chain[j - 1]);
  if (c.is_identity(composite)) return false;
  out.assign(chain.begin(), chain.end());
  out.erase(out.begin() + j);
  out[j - 1] = composite;
  return true;
}

TruncatedNerve nerve(const FinCategory& c, int n, long long cap) {
  if (n < 0) throw error("nerve: dimension must be >= 0");
  TruncatedNerve nv;
  nv.maxdim = n;
  nv.chains.resize(n + 2);
  nv.counts.assign(n + 2, 0);
  nv.counts[0] = c.num_objects();
  for_each_chain(c, n + 1, cap, [&](int k, const std::vector<int>& chain) {
    nv.chains[k].push_back(chain);
    nv.counts[k]++;
  });
  return nv;
}

std::vector<long long> nerve_counts(const FinCategory& c, int maxk, long long cap) {
  std::vector<long long> counts(maxk + 1, 0);
  counts[0] = c.num_objects();
  for_each_chain(c, maxk, cap, [&](int k, const std::vector<int>&) { counts[k]++; });
  return counts;
}

ChainComplex chain_complex(const FinCategory& c, const TruncatedNerve& nv) {
  ChainComplex cc;
  cc.top = nv.maxdim + 1;
  cc.ranks = nv.counts;
  cc.boundary.resize(cc.top + 1);

  std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(cc.top + 1);
  for (int k = 1; k <= cc.top; ++k) {
    index[k].reserve(nv.chains[k].size() * 2);
    for (std::size_t i = 0; i < nv.chains[k].size(); ++i)
      index[k][nv.chains[k][i]] = static_cast<int>(i);
  }

  std::vector<int> face;
  for (int k = 1; k <= cc.top; ++k) {
    std::vector<std::tuple<int, int, long long>> entries;
    for (std::size_t s = 0; s < nv.chains[k].size(); ++s) {
      const auto& chain = nv.chains[k][s];
      for (int j = 0; j <= k; ++j) {
        if (!chain_face(c, chain, j, face)) continue;
        long long sign = (j % 2 == 0) ? 1 : -1;
        int r;
        if (k == 1) {
          r = j == 0 ? c.mor_cod[chain[0]] : c.mor_dom[chain[0]];
        } else {
          auto it = index[k - 1].find(face);
          if (it == index[k - 1].end()) throw error("nerve: face of a listed chain is missing");
          r = it->second;
        }
        entries.push_back({r, static_cast<int>(s), sign});
      }
    }
    cc.boundary[k] = SparseMat::from_triplets(static_cast<int>(cc.ranks[k - 1]),
                                              static_cast<int>(cc.ranks[k]), entries);
  }

  // ∂∘∂ = 0, column by column
  for (int k = 2; k <= cc.top; ++k) {
    for (int s = 0; s < cc.boundary[k].cols; ++s) {
      std::map<int, long long> acc;
      for (auto [r, v] : cc.boundary[k].col[s])
        for (auto [r2, v2] : cc.boundary[k - 1].col[r]) acc[r2] += v * v2;
      for (auto [r2, v2] : acc)
        if (v2 != 0) throw error("nerve: boundary squared is nonzero");
    }
  }
  return cc;
}

bool HomologyResult::reduced_zero() const {
  for (int k = 0; k <= maxdim; ++k) {
    const auto& g = groups[k];
    if (!g.torsion.empty()) return false;
    if (g.betti != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

HomologyResult homology_of(const ChainComplex& cc, int n) {
  if (n + 1 > cc.top) throw error("homology: complex is too shallow for the requested degree");
  std::vector<SnfResult> snf(cc.top + 1);
  for (int k = 1; k <= n + 1; ++k) snf[k] = smith_normal_form(cc.boundary[k]);
  HomologyResult res;
  res.maxdim = n;
  res.groups.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    long long rk = k >= 1 ? snf[k].rank : 0;
    long long rk1 = snf[k + 1].rank;
    res.groups[k].betti = cc.ranks[k] - rk - rk1;
    res.groups[k].torsion = snf[k + 1].nontrivial();
  }
  return res;
}

HomologyResult homology(const FinCategory& c, int n, long long cap) {
  return homology_of(chain_complex(c, nerve(c, n, cap)), n);
}

std::vector<mpz_class> abelianization(const FiniteGroup& g) {
  // commutator subgroup
  std::vector<int> comms;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      comms.push_back(g.mul[g.mul[g.mul[a][b]][g.inv[a]]][g.inv[b]]);
  sort_unique(comms);
  Subgroup k = subgroup_closure(g, comms);

  auto cosets = left_cosets(g, k);
  int m = static_cast<int>(cosets.size());
  std::vector<int> coset_of(g.order);
  for (int i = 0; i < m; ++i)
    for (int e : cosets[i].elements) coset_of[e] = i;

  // Cayley presentation of the quotient: generator per element, relation
  // q_i + q_j - q_{ij} = 0 per pair
  DenseMat rel(m * m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int ij = coset_of[g.mul[cosets[i].representative][cosets[j].representative]];
      int r = i * m + j;
      rel.at(r, i) += 1;
      rel.at(r, j) += 1;
      rel.at(r, ij) -= 1;
    }
  return smith_normal_form(std::move(rel)).nontrivial();
}

AcyclicityReport initial_object_acyclicity(const FinCategory& c, int n, long long cap) {
  AcyclicityReport rep;
  ObjectSearch init = find_initial(c);
  if (init.object < 0) {
    rep.detail = "no initial object";
    return rep;
  }
  rep.applicable = true;
  rep.initial_object = init.object;
  int i0 = init.object;
  std::vector<int> iota(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) iota[o] = c.hom_set(i0, o)[0];

  // degree 0: boundary of h[obj] is [obj] - [init]
  for (int o = 0; o < c.num_objects(); ++o) {
    if (o == i0) continue;
    int m = iota[o];
    if (c.is_identity(m) || c.mor_dom[m] != i0 || c.mor_cod[m] != o) {
      rep.detail = "bad initial morphism at object " + std::to_string(o);
      return rep;
    }
    ++rep.checked;
  }

  bool ok = true;
  std::string fail;
  std::vector<int> face, hchain, hface;
  // pooled term accumulator: a chain appears in at most 2k+4 terms, so a
  // linear scan beats a map and the buffers never reallocate after warmup
  std::vector<std::vector<int>> tchain;
  std::vector<long long> tcoeff;
  std::size_t tcount = 0;
  auto add_term = [&](const std::vector<int>& ch, long long coef) {
    for (std::size_t i = 0; i < tcount; ++i)
      if (tchain[i] == ch) {
        tcoeff[i] += coef;
        return;
      }
    if (tcount == tchain.size()) {
      tchain.emplace_back();
      tcoeff.push_back(0);
    }
    tchain[tcount] = ch;
    tcoeff[tcount] = coef;
    ++tcount;
  };
  auto add_h = [&](const std::vector<int>& chain, long long coef) {
    int c0 = c.mor_dom[chain[0]];
    if (c0 == i0) return;  // h gives a degenerate chain
    hface.clear();
    hface.push_back(iota[c0]);
    hface.insert(hface.end(), chain.begin(), chain.end());
    add_term(hface, coef);
  };

  try {
    for_each_chain(c, n, cap, [&](int k, const std::vector<int>& chain) {
      if (!ok) return;
      tcount = 0;
      // ∂(hσ)
      int c0 = c.mor_dom[chain[0]];
      if (c0 != i0) {
        hchain.clear();
        hchain.push_back(iota[c0]);
        hchain.insert(hchain.end(), chain.begin(), chain.end());
        for (int j = 0; j <= k + 1; ++j) {
          if (!chain_face(c, hchain, j, face)) continue;
          add_term(face, (j % 2 == 0) ? 1 : -1);
        }
      }
      // h(∂σ)
      for (int j = 0; j <= k; ++j) {
        if (!chain_face(c, chain, j, face)) continue;
        if (k == 1) {
          // faces are vertices; h of a vertex o is the 1-chain [iota_o]
          int o = j == 0 ? c.mor_cod[chain[0]] : c.mor_dom[chain[0]];
          if (o != i0) add_term(std::vector<int>{iota[o]}, (j % 2 == 0) ? 1 : -1);
        } else {
          add_h(face, (j % 2 == 0) ? 1 : -1);
        }
      }
      add_term(chain, -1);
      for (std::size_t i = 0; i < tcount; ++i)
        if (tcoeff[i] != 0) {
          ok = false;
          fail = "homotopy identity fails on a chain of dimension " + std::to_string(k);
          return;
        }
      ++rep.checked;
    });
  } catch (const error& e) {
    rep.detail = e.what();
    return rep;
  }
  rep.ok = ok;
  rep.detail = ok ? "" : fail;
  return rep;
}

}  // namespace orbcat
