#include "orbcat/gset.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace orbcat {

void GammaSet::validate() const {
  if (size < 0) throw error("gset: negative size");
  if (static_cast<int>(act.size()) != group.order) throw error("gset: one row per group element required");
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != size) throw error("gset: bad row length");
    std::vector<char> seen(size, 0);
    for (int v : row) {
      if (v < 0 || v >= size || seen[v]) throw error("gset: row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < size; ++x)
    if (act[0][x] != x) throw error("gset: identity must act trivially");
  for (int g1 = 0; g1 < group.order; ++g1)
    for (int g2 = 0; g2 < group.order; ++g2)
      for (int x = 0; x < size; ++x)
        if (act[group.mul[g1][g2]][x] != act[g1][act[g2][x]])
          throw error("gset: not a left action at (" + std::to_string(g1) + "," +
                      std::to_string(g2) + ")");
}

std::vector<int> GammaSet::fixed_points(const Subgroup& h) const {
  std::vector<int> out;
  for (int x = 0; x < size; ++x) {
    bool fixed = true;
    for (int g : h.elements)
      if (act[g][x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

std::vector<int> GammaSet::fixed_points_all() const { return fixed_points(whole_group(group)); }

GammaSet gset_empty(const FiniteGroup& g) {
  GammaSet x;
  x.group = g;
  x.size = 0;
  x.act.assign(g.order, {});
  return x;
}

GammaSet gset_point(const FiniteGroup& g) {
  GammaSet x;
  x.group = g;
  x.size = 1;
  x.act.assign(g.order, {0});
  return x;
}

GammaSet gset_cosets(const FiniteGroup& g, const Subgroup& h) {
  auto cosets = left_cosets(g, h);
  std::vector<int> coset_of(g.order);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int e : cosets[i].elements) coset_of[e] = static_cast<int>(i);
  GammaSet x;
  x.group = g;
  x.size = static_cast<int>(cosets.size());
  x.act.assign(g.order, std::vector<int>(x.size));
  for (int gamma = 0; gamma < g.order; ++gamma)
    for (int i = 0; i < x.size; ++i)
      x.act[gamma][i] = coset_of[g.mul[gamma][cosets[i].representative]];
  return x;
}

GammaSet gset_disjoint(const GammaSet& a, const GammaSet& b) {
  if (a.group.order != b.group.order || a.group.mul != b.group.mul)
    throw error("gset: disjoint union needs the same group");
  GammaSet x;
  x.group = a.group;
  x.size = a.size + b.size;
  x.act.assign(x.group.order, std::vector<int>(x.size));
  for (int g = 0; g < x.group.order; ++g) {
    for (int i = 0; i < a.size; ++i) x.act[g][i] = a.act[g][i];
    for (int i = 0; i < b.size; ++i) x.act[g][a.size + i] = a.size + b.act[g][i];
  }
  return x;
}

GammaSet gset_random(const FiniteGroup& g, int max_size, Rng& rng, bool allow_empty) {
  auto subgroups = enumerate_subgroups(g);
  GammaSet x = gset_empty(g);
  while (true) {
    std::vector<int> fitting;
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      if (x.size + g.order / subgroups[i].order() <= max_size) fitting.push_back(static_cast<int>(i));
    if (fitting.empty()) break;
    bool may_stop = allow_empty || x.size > 0;
    if (may_stop && rng.below(3) == 0) break;
    x = gset_disjoint(x, gset_cosets(g, subgroups[fitting[rng.below(fitting.size())]]));
  }
  std::vector<int> perm(x.size);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return gset_relabel(x, perm);
}

GammaSet gset_relabel(const GammaSet& x, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != x.size) throw error("gset: bad relabeling");
  GammaSet y;
  y.group = x.group;
  y.size = x.size;
  y.act.assign(x.group.order, std::vector<int>(x.size));
  for (int g = 0; g < x.group.order; ++g)
    for (int p = 0; p < x.size; ++p) y.act[g][perm[p]] = perm[x.act[g][p]];
  return y;
}

GammaSet load_gset(const std::string& path, const FiniteGroup& g) {
  std::ifstream in(path);
  if (!in) throw error("cannot open G-set file: " + path);
  GammaSet x;
  x.group = g;
  if (!(in >> x.size) || x.size < 0) throw error("bad size in G-set file: " + path);
  x.act.assign(g.order, std::vector<int>(x.size));
  for (int gamma = 0; gamma < g.order; ++gamma)
    for (int p = 0; p < x.size; ++p)
      if (!(in >> x.act[gamma][p])) throw error("truncated G-set file: " + path);
  x.validate();
  return x;
}

std::string gset_to_text(const GammaSet& x) {
  std::ostringstream out;
  out << x.size << "\n";
  for (int g = 0; g < x.group.order; ++g) {
    for (int p = 0; p < x.size; ++p) out << (p ? " " : "") << x.act[g][p];
    out << "\n";
  }
  return out.str();
}

}  // namespace orbcat
