#include "orbcat/family.hpp"

#include <algorithm>
#include <map>

namespace orbcat {

int Family::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it != members.end() && *it == s) return static_cast<int>(it - members.begin());
  return -1;
}

void Family::validate() const {
  if (members.empty()) throw error("family: empty");
  if (!std::is_sorted(members.begin(), members.end())) throw error("family: members not sorted");
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i] == members[i - 1]) throw error("family: duplicate member");
  for (const auto& m : members)
    if (!is_subgroup(ambient, m)) throw error("family: member is not a subgroup");
  if (!(members[0] == trivial_subgroup())) throw error("family: missing trivial subgroup");
  for (const auto& m : members)
    for (int g = 0; g < ambient.order; ++g)
      if (!contains(conjugate_subgroup(ambient, g, m)))
        throw error("family: not closed under conjugation");
  // closed under subgroups: every subgroup of the ambient group contained
  // in a member must itself be a member
  for (const auto& s : enumerate_subgroups(ambient)) {
    if (contains(s)) continue;
    for (const auto& m : members)
      if (is_subset(s.elements, m.elements))
        throw error("family: not closed under subgroups (" + subgroup_label(ambient, s) + ")");
  }
}

Family close_family(const FiniteGroup& g, const std::vector<Subgroup>& seeds) {
  for (const auto& s : seeds)
    if (!is_subgroup(g, s)) throw error("close_family: seed is not a subgroup");
  // K is in the closure iff K is contained in some conjugate of a seed
  std::vector<Subgroup> conjs;
  for (const auto& s : seeds)
    for (int x = 0; x < g.order; ++x) conjs.push_back(conjugate_subgroup(g, x, s));
  Family f;
  f.ambient = g;
  for (const auto& k : enumerate_subgroups(g)) {
    bool in = k.order() == 1;
    for (const auto& c : conjs) {
      if (in) break;
      in = is_subset(k.elements, c.elements);
    }
    if (in) f.members.push_back(k);
  }
  std::sort(f.members.begin(), f.members.end());
  f.validate();
  return f;
}

Family trivial_family(const FiniteGroup& g) { return close_family(g, {}); }

Family all_family(const FiniteGroup& g) {
  Family f;
  f.ambient = g;
  f.members = enumerate_subgroups(g);
  f.validate();
  return f;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Family p_subgroup_family(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw error("p-subgroup family: " + std::to_string(p) + " is not prime");
  Family f;
  f.ambient = g;
  for (const auto& s : enumerate_subgroups(g)) {
    int n = s.order();
    while (n % p == 0) n /= p;
    if (n == 1) f.members.push_back(s);
  }
  std::sort(f.members.begin(), f.members.end());
  f.validate();
  return f;
}

Family preimage_family(const Homomorphism& h, const Family& f) {
  Family out;
  out.ambient = h.source;
  for (const auto& s : enumerate_subgroups(h.source))
    if (f.contains(image_subgroup(h, s))) out.members.push_back(s);
  std::sort(out.members.begin(), out.members.end());
  out.validate();
  return out;
}

Subgroup subgroup_from_descriptor(const FiniteGroup& g, const std::string& desc) {
  std::string t = trim(desc);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = trim(t.substr(1, t.size() - 2));
  std::vector<int> gens;
  // several generators may be separated by ';' inside one bracket
  for (const auto& part : split(t, ';')) {
    std::string p = trim(part);
    if (p.empty()) continue;
    if (p.find('(') != std::string::npos) {
      if (g.perms.empty())
        throw error("subgroup descriptor: cycle notation needs a permutation group");
      auto perm = parse_cycles(p, static_cast<int>(g.perms[0].size()));
      auto it = std::find(g.perms.begin(), g.perms.end(), perm);
      if (it == g.perms.end()) throw error("subgroup descriptor: permutation not in group: " + p);
      gens.push_back(static_cast<int>(it - g.perms.begin()));
    } else {
      for (const auto& num : split(p, ' '))
        if (!trim(num).empty()) gens.push_back(std::stoi(trim(num)));
    }
  }
  return subgroup_closure(g, gens);
}

Family family_from_descriptor(const FiniteGroup& g, const std::string& desc) {
  std::string d = trim(desc);
  if (d == "trivial" || d == "1") return trivial_family(g);
  if (d == "all") return all_family(g);
  if (d.rfind("p:", 0) == 0) return p_subgroup_family(g, std::stoi(d.substr(2)));
  if (d.rfind("gen:", 0) == 0) {
    std::vector<Subgroup> seeds;
    std::string body = d.substr(4);
    std::vector<std::string> toks;
    {
      std::string cur;
      int depth = 0;
      for (char c : body) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
          toks.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      toks.push_back(cur);
    }
    for (auto& tok : toks) seeds.push_back(subgroup_from_descriptor(g, tok));
    return close_family(g, seeds);
  }
  throw error("bad family descriptor: " + desc);
}

}  // namespace orbcat
