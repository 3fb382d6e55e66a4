#include "orbcat/group.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace orbcat {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int FiniteGroup::element_order(int g) const {
  int k = 1, x = g;
  while (x != 0) {
    x = mul[x][g];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order; ++a) {
    bool central = true;
    for (int b = 0; b < order && central; ++b) central = mul[a][b] == mul[b][a];
    if (central) z.push_back(a);
  }
  return z;
}

std::string FiniteGroup::label(int g) const {
  if (g >= 0 && g < static_cast<int>(labels.size())) return labels[g];
  return std::to_string(g);
}

void FiniteGroup::validate(bool full) const {
  if (order <= 0) throw error("group: order must be positive");
  if (static_cast<int>(mul.size()) != order) throw error("group: bad table height");
  for (const auto& row : mul)
    if (static_cast<int>(row.size()) != order) throw error("group: bad table width");
  for (int a = 0; a < order; ++a) {
    if (mul[0][a] != a || mul[a][0] != a) throw error("group: index 0 is not an identity");
  }
  // Latin square: each row/column is a permutation
  for (int a = 0; a < order; ++a) {
    std::vector<char> row(order, 0), col(order, 0);
    for (int b = 0; b < order; ++b) {
      int r = mul[a][b], c = mul[b][a];
      if (r < 0 || r >= order || c < 0 || c >= order) throw error("group: entry out of range");
      if (row[r]++ || col[c]++) throw error("group: table is not a Latin square");
    }
  }
  if (static_cast<int>(inv.size()) != order) throw error("group: bad inverse array");
  for (int a = 0; a < order; ++a)
    if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0) throw error("group: bad inverse entry");
  if (full) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw error("group: table is not associative at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

namespace {

void fill_inverses(FiniteGroup& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul[a][b] == 0) g.inv[a] = b;
}

// full validation is cubic; skip the triple loop for large internally
// generated tables (they are associative by construction)
void finish(FiniteGroup& g) {
  fill_inverses(g);
  g.validate(g.order <= 600);
}

std::vector<int> compose_then(const std::vector<int>& a, const std::vector<int>& b) {
  // apply a, then b
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n <= 0) throw error("cyclic: order must be positive");
  FiniteGroup g;
  g.order = n;
  g.name = "Z" + std::to_string(n);
  g.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  g.labels.resize(n);
  for (int a = 0; a < n; ++a) g.labels[a] = std::to_string(a);
  finish(g);
  return g;
}

FiniteGroup make_dihedral(int n) {
  if (n <= 0) throw error("dihedral: parameter must be positive");
  FiniteGroup g;
  g.order = 2 * n;
  g.name = "D" + std::to_string(n);
  g.mul.assign(g.order, std::vector<int>(g.order));
  auto idx = [n](int i, int j) { return i + n * j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          int rr = ((i + (j ? -k : k)) % n + n) % n;
          g.mul[idx(i, j)][idx(k, l)] = idx(rr, (j + l) % 2);
        }
  g.labels.resize(g.order);
  for (int i = 0; i < n; ++i) {
    g.labels[idx(i, 0)] = i == 0 ? "e" : "r^" + std::to_string(i);
    g.labels[idx(i, 1)] = i == 0 ? "s" : "r^" + std::to_string(i) + "s";
  }
  finish(g);
  return g;
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// lexicographic rank of a permutation of 0..n-1
long long perm_rank(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  long long r = 0;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = 0; j < p[i]; ++j)
      if (!used[j]) ++smaller;
    r += smaller * factorial(n - 1 - i);
    used[p[i]] = 1;
  }
  return r;
}

std::vector<int> perm_unrank(long long r, int n) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) {
    long long f = factorial(n - 1 - i);
    int k = static_cast<int>(r / f);
    r %= f;
    p[i] = avail[k];
    avail.erase(avail.begin() + k);
  }
  return p;
}

}  // namespace

std::string cycle_string(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<int> parse_cycles(const std::string& text, int min_points) {
  std::string s = trim(text);
  int max_point = min_points;
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  if (s == "()" || s == "e" || s.empty()) {
    std::vector<int> id(min_points);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw error("bad cycle notation near '" + s.substr(i) + "'");
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw error("unclosed cycle in '" + s + "'");
    std::string body = s.substr(i + 1, close - i - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<int> cyc;
    int p;
    while (in >> p) {
      if (p < 1) throw error("cycle points are 1-based");
      cyc.push_back(p - 1);
      max_point = std::max(max_point, p);
    }
    if (cyc.size() > 1) cycles.push_back(cyc);
    i = close + 1;
  }
  std::vector<int> perm(max_point);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& cyc : cycles) {
    // (a b c) sends a->b->c->a
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (perm[from] != from) throw error("point repeated in cycle notation: " + text);
      perm[from] = to;
    }
  }
  return perm;
}

FiniteGroup make_symmetric(int n) {
  if (n < 1) throw error("symmetric: n must be >= 1");
  if (n > 7) throw error("symmetric: n > 7 exceeds the order cap");
  int order = static_cast<int>(factorial(n));
  FiniteGroup g;
  g.order = order;
  g.name = "S" + std::to_string(n);
  g.perms.resize(order);
  g.labels.resize(order);
  for (int i = 0; i < order; ++i) {
    g.perms[i] = perm_unrank(i, n);
    g.labels[i] = cycle_string(g.perms[i]);
  }
  g.mul.assign(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      g.mul[a][b] = static_cast<int>(perm_rank(compose_then(g.perms[a], g.perms[b])));
  finish(g);
  return g;
}

FiniteGroup make_quaternion8() {
  // elements 2u+s, u in {1,i,j,k}, s = sign bit
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  FiniteGroup g;
  g.order = 8;
  g.name = "Q8";
  g.mul.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      g.mul[a][b] = 2 * unit[ua][ub] + ((sa + sb + sign[ua][ub]) % 2);
    }
  g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  finish(g);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.name = a.name + "x" + b.name;
  g.mul.assign(g.order, std::vector<int>(g.order));
  auto idx = [&](int x, int y) { return x + a.order * y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul[x1][x2], b.mul[y1][y2]);
  g.labels.resize(g.order);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) g.labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  finish(g);
  return g;
}

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.mul = table;
  g.labels.resize(g.order);
  for (int i = 0; i < g.order; ++i) g.labels[i] = std::to_string(i);
  g.name = "cayley" + std::to_string(g.order);
  fill_inverses(g);
  for (int i = 0; i < g.order; ++i)
    if (g.inv[i] < 0) throw error("group: element without inverse");
  g.validate(true);
  return g;
}

FiniteGroup from_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open Cayley file: " + path);
  int n;
  if (!(in >> n) || n <= 0) throw error("bad order in Cayley file: " + path);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j])) throw error("truncated Cayley file: " + path);
  return from_cayley_table(table);
}

FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, int max_order) {
  int points = 1;
  for (const auto& p : gens) points = std::max(points, static_cast<int>(p.size()));
  std::vector<std::vector<int>> padded;
  for (auto p : gens) {
    int old = static_cast<int>(p.size());
    p.resize(points);
    for (int i = old; i < points; ++i) p[i] = i;
    padded.push_back(p);
  }
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);

  std::set<std::vector<int>> elems;
  elems.insert(id);
  std::queue<std::vector<int>> work;
  work.push(id);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop();
    for (const auto& gen : padded) {
      auto nxt = compose_then(cur, gen);
      if (elems.insert(nxt).second) {
        if (static_cast<int>(elems.size()) > max_order)
          throw error("generated group exceeds max order " + std::to_string(max_order));
        work.push(nxt);
      }
    }
  }
  // std::set iterates in lexicographic order, so the identity comes first
  FiniteGroup g;
  g.order = static_cast<int>(elems.size());
  g.perms.assign(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < g.order; ++i) index[g.perms[i]] = i;
  g.mul.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) g.mul[a][b] = index.at(compose_then(g.perms[a], g.perms[b]));
  g.labels.resize(g.order);
  for (int i = 0; i < g.order; ++i) g.labels[i] = cycle_string(g.perms[i]);
  g.name = "perm" + std::to_string(g.order);
  finish(g);
  return g;
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

FiniteGroup make_group_atom(const std::string& desc, int max_order) {
  std::string d = trim(desc);
  if (d.empty()) throw error("empty group descriptor");
  auto num_after = [&](std::size_t k) {
    std::string tail = d.substr(k);
    for (char c : tail)
      if (!isdigit(static_cast<unsigned char>(c))) throw error("bad group descriptor: " + desc);
    if (tail.empty()) throw error("bad group descriptor: " + desc);
    return std::stoi(tail);
  };
  if (d == "Q8" || d == "q8" || d == "quaternion" || d == "quaternion-8") return make_quaternion8();
  if (d.rfind("cyclic:", 0) == 0) return make_cyclic(num_after(7));
  if (d.rfind("dihedral:", 0) == 0) return make_dihedral(num_after(9));
  if (d.rfind("symmetric:", 0) == 0) return make_symmetric(num_after(10));
  if (d.rfind("perm:", 0) == 0) {
    std::vector<std::vector<int>> gens;
    for (const auto& tok : split_top_level(d.substr(5), ',')) {
      std::string t = trim(tok);
      if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
      gens.push_back(parse_cycles(t));
    }
    auto g = from_permutations(gens, max_order);
    return g;
  }
  if (d.rfind("cayley:", 0) == 0) return from_cayley_file(trim(d.substr(7)));
  if (d.rfind("permfile:", 0) == 0) {
    std::ifstream in(trim(d.substr(9)));
    if (!in) throw error("cannot open permutation file: " + trim(d.substr(9)));
    std::vector<std::vector<int>> gens;
    std::string line;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      gens.push_back(parse_cycles(line));
    }
    if (gens.empty()) throw error("permutation file has no generators");
    return from_permutations(gens, max_order);
  }
  if ((d[0] == 'Z' || d[0] == 'C') && d.size() > 1) return make_cyclic(num_after(1));
  if (d[0] == 'S' && d.size() > 1) return make_symmetric(num_after(1));
  if (d[0] == 'D' && d.size() > 1) return make_dihedral(num_after(1));
  if (d[0] == 'A' && d.size() > 1) {
    // alternating group via 3-cycle generators
    int n = num_after(1);
    if (n < 3 || n > 7) throw error("alternating: n must be in 3..7");
    std::vector<std::vector<int>> gens;
    for (int k = 2; k < n; ++k) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      p[0] = 1;
      p[1] = k;
      p[k] = 0;
      gens.push_back(p);
    }
    auto g = from_permutations(gens, max_order);
    g.name = "A" + std::to_string(n);
    return g;
  }
  throw error("bad group descriptor: " + desc);
}

}  // namespace

FiniteGroup make_group(const std::string& descriptor, int max_order) {
  auto parts = split_top_level(trim(descriptor), 'x');
  FiniteGroup g = make_group_atom(parts[0], max_order);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = direct_product(g, make_group_atom(parts[i], max_order));
    if (g.order > max_order) throw error("product group exceeds max order " + std::to_string(max_order));
  }
  return g;
}

// --- subgroups ------------------------------------------------------------

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order);
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(0);
  for (int x : gens) {
    if (x < 0 || x >= g.order) throw error("generator index out of range");
    add(x);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j) add(g.mul[list[i]][list[j]]);
  // products of new elements may appear late; iterate to fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t sz = list.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        int p = g.mul[list[i]][list[j]];
        if (!in[p]) {
          add(p);
          grew = true;
        }
      }
  }
  Subgroup s;
  s.elements = list;
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements[0] != 0) return false;
  for (int a : h.elements) {
    if (a < 0 || a >= g.order) return false;
    if (!h.contains(g.inv[a])) return false;
    for (int b : h.elements)
      if (!h.contains(g.mul[a][b])) return false;
  }
  return g.order % h.order() == 0;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order; ++x)
    if (!(conjugate_subgroup(g, x, h) == h)) return false;
  return true;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::queue<Subgroup> work;
  Subgroup triv = trivial_subgroup();
  seen.insert(triv.elements);
  out.push_back(triv);
  work.push(triv);
  while (!work.empty()) {
    Subgroup h = work.front();
    work.pop();
    for (int x = 0; x < g.order; ++x) {
      if (h.contains(x)) continue;
      auto gens = h.elements;
      gens.push_back(x);
      Subgroup k = subgroup_closure(g, gens);
      if (seen.insert(k.elements).second) {
        out.push_back(k);
        work.push(k);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, int x, const Subgroup& h) {
  Subgroup s;
  s.elements.reserve(h.elements.size());
  for (int a : h.elements) s.elements.push_back(g.conj(x, a));
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

bool conjugate_inside(const FiniteGroup& g, int gamma, const Subgroup& h, const Subgroup& f) {
  int gi = g.inv[gamma];
  for (int x : h.elements)
    if (!f.contains(g.conj(gi, x))) return false;
  return true;
}

Subgroup image_subgroup(const Homomorphism& h, const Subgroup& s) {
  Subgroup out;
  for (int a : s.elements) out.elements.push_back(h.image[a]);
  sort_unique(out.elements);
  return out;
}

Coset left_coset(const FiniteGroup& g, const Subgroup& h, int rep) {
  Coset c;
  c.subgroup = h;
  c.elements.reserve(h.elements.size());
  for (int a : h.elements) c.elements.push_back(g.mul[rep][a]);
  std::sort(c.elements.begin(), c.elements.end());
  c.representative = c.elements[0];
  return c;
}

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Coset> out;
  std::vector<char> seen(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    Coset c = left_coset(g, h, x);
    for (int e : c.elements) seen[e] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    if (i) s += ",";
    s += g.label(h.elements[i]);
  }
  return s + "}";
}

std::string coset_label(const FiniteGroup& g, const Coset& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (i) s += ",";
    s += g.label(c.elements[i]);
  }
  return s + "}";
}

// --- homomorphisms ----------------------------------------------------------

void Homomorphism::validate() const {
  if (static_cast<int>(image.size()) != source.order) throw error("hom: bad image size");
  for (int v : image)
    if (v < 0 || v >= target.order) throw error("hom: image out of range");
  if (image[0] != 0) throw error("hom: identity must map to identity");
  for (int a = 0; a < source.order; ++a)
    for (int b = 0; b < source.order; ++b)
      if (image[source.mul[a][b]] != target.mul[image[a]][image[b]])
        throw error("hom: relation violated at pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Homomorphism make_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                               const std::vector<std::pair<int, int>>& gen_images) {
  std::vector<int> img(src.order, -1);
  img[0] = 0;
  for (auto [g, v] : gen_images) {
    if (g < 0 || g >= src.order || v < 0 || v >= dst.order) throw error("hom: generator or image out of range");
    if (img[g] != -1 && img[g] != v)
      throw error("hom: conflicting image for generator " + std::to_string(g));
    img[g] = v;
  }
  // grow the defined set by right multiplication with generators
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < src.order; ++a) {
      if (img[a] < 0) continue;
      for (auto [g, v] : gen_images) {
        int b = src.mul[a][g];
        int w = dst.mul[img[a]][v];
        if (img[b] == -1) {
          img[b] = w;
          grew = true;
        } else if (img[b] != w) {
          throw error("hom: relation violated at pair (" + std::to_string(a) + "," + std::to_string(g) + ")");
        }
      }
    }
  }
  for (int a = 0; a < src.order; ++a)
    if (img[a] < 0) throw error("hom: generators do not generate the source group");
  Homomorphism h{src, dst, img};
  h.validate();
  return h;
}

Homomorphism identity_hom(const FiniteGroup& g) {
  std::vector<int> img(g.order);
  std::iota(img.begin(), img.end(), 0);
  return Homomorphism{g, g, img};
}

Homomorphism compose_hom(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target.order != outer.source.order) throw error("hom: composition mismatch");
  std::vector<int> img(inner.source.order);
  for (int a = 0; a < inner.source.order; ++a) img[a] = outer.image[inner.image[a]];
  Homomorphism h{inner.source, outer.target, img};
  h.validate();
  return h;
}

Homomorphism cyclic_mod_hom(const FiniteGroup& zn, const FiniteGroup& zm) {
  if (zn.order % zm.order != 0) throw error("cyclic quotient needs m | n");
  std::vector<int> img(zn.order);
  for (int a = 0; a < zn.order; ++a) img[a] = a % zm.order;
  Homomorphism h{zn, zm, img};
  h.validate();
  return h;
}

Homomorphism symmetric_embedding(const FiniteGroup& sm, const FiniteGroup& sn) {
  if (sm.perms.empty() || sn.perms.empty()) throw error("embedding requires permutation groups");
  int n = static_cast<int>(sn.perms[0].size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < sn.order; ++i) index[sn.perms[i]] = i;
  std::vector<int> img(sm.order);
  for (int a = 0; a < sm.order; ++a) {
    std::vector<int> p = sm.perms[a];
    int old = static_cast<int>(p.size());
    if (old > n) throw error("embedding: source moves more points than target");
    p.resize(n);
    for (int i = old; i < n; ++i) p[i] = i;
    auto it = index.find(p);
    if (it == index.end()) throw error("embedding: image permutation not in target");
    img[a] = it->second;
  }
  Homomorphism h{sm, sn, img};
  h.validate();
  return h;
}

Homomorphism parity_hom(const FiniteGroup& g, const FiniteGroup& z2) {
  if (z2.order != 2) throw error("parity: target must be Z2");
  auto subs = enumerate_subgroups(g);
  const Subgroup* kernel = nullptr;
  for (const auto& s : subs)
    if (2 * s.order() == g.order) {
      if (kernel) throw error("parity: index-2 subgroup is not unique");
      kernel = &s;
    }
  if (!kernel) throw error("parity: no index-2 subgroup");
  std::vector<int> img(g.order);
  for (int a = 0; a < g.order; ++a) img[a] = kernel->contains(a) ? 0 : 1;
  Homomorphism h{g, z2, img};
  h.validate();
  return h;
}

}  // namespace orbcat
