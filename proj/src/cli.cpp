#include "orbcat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "orbcat/exports.hpp"
#include "orbcat/holim.hpp"
#include "orbcat/nerve.hpp"

namespace orbcat {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string group = "Z1";
  std::string cayley;
  std::string family = "all";
  std::string output = "text";
  std::string gset;
  std::string hom;
  std::string sub;
  std::string of = "orbit";
  int maxdim = 3;
  int p = 2;
  std::string max_member;
  int max_order = kDefaultMaxOrder;
  long long cap = kDefaultSimplexCap;
  std::uint64_t seed = 42;
  bool dump_matrices = false;
};

FiniteGroup opt_group(const Options& o) {
  if (!o.cayley.empty()) return from_cayley_file(o.cayley);
  return make_group(o.group, o.max_order);
}

Json subgroup_json(const FiniteGroup& g, const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["elements"] = s.elements;
  j["label"] = subgroup_label(g, s);
  return j;
}

Json category_json(const FinCategory& c) {
  Json j;
  j["objects"] = Json::array();
  for (int o = 0; o < c.num_objects(); ++o)
    j["objects"].push_back({{"id", o}, {"label", c.objects[o]}});
  j["morphisms"] = Json::array();
  for (int m = 0; m < c.num_morphisms(); ++m)
    j["morphisms"].push_back({{"id", m},
                              {"dom", c.mor_dom[m]},
                              {"cod", c.mor_cod[m]},
                              {"label", c.mor_label[m]},
                              {"identity", c.is_identity(m)}});
  j["composition"] = Json::array();
  for (int f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out_nonid[c.mor_cod[f]])
      j["composition"].push_back({{"g", g}, {"f", f}, {"gf", c.compose(g, f)}});
  }
  return j;
}

Json homology_json(const HomologyResult& h) {
  Json arr = Json::array();
  for (int k = 0; k <= h.maxdim; ++k) {
    Json entry;
    entry["degree"] = k;
    entry["betti"] = h.groups[k].betti;
    entry["torsion"] = Json::array();
    for (const auto& t : h.groups[k].torsion) entry["torsion"].push_back(t.get_str());
    arr.push_back(entry);
  }
  return arr;
}

std::string homology_text(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.betti == 1)
    parts.push_back("Z");
  else if (g.betti > 1)
    parts.push_back("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& text) {
  if (o.output == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

GammaSet opt_gset(const Options& o, const FiniteGroup& g) {
  std::string d = trim(o.gset);
  if (d.empty()) throw error("missing --gset");
  if (d == "point") return gset_point(g);
  if (d == "regular") return gset_cosets(g, trivial_subgroup());
  if (d.rfind("cosets:", 0) == 0) {
    Family f = family_from_descriptor(g, "gen:" + d.substr(7));
    return gset_cosets(g, f.members.back());
  }
  return load_gset(d, g);
}

int cmd_orbit_cat(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  OrbitCategory orb = orbit_category(g, family_from_descriptor(g, o.family));
  if (o.output == "dot") {
    out << to_dot(orb.cat, "Orb");
    return 0;
  }
  Json j;
  j["group"] = g.name;
  j["order"] = g.order;
  j["family"] = Json::array();
  for (const auto& m : orb.family.members) j["family"].push_back(subgroup_json(g, m));
  j["category"] = category_json(orb.cat);
  std::ostringstream text;
  text << "Orb on " << g.name << ": " << orb.cat.num_objects() << " objects, "
       << orb.cat.num_morphisms() << " morphisms\n";
  for (int a = 0; a < orb.cat.num_objects(); ++a)
    for (int b = 0; b < orb.cat.num_objects(); ++b)
      if (!orb.cat.hom_set(a, b).empty())
        text << "  |Mor(" << orb.cat.objects[a] << ", " << orb.cat.objects[b]
             << ")| = " << orb.cat.hom_set(a, b).size() << "\n";
  emit(o, out, j, text.str());
  return 0;
}

int cmd_efg(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  GammaCategory e = e_f_gamma(g, family_from_descriptor(g, o.family));
  e.validate_action();
  if (o.output == "dot") {
    out << to_dot(e.cat(), "EF");
    return 0;
  }
  StructuralReport s = structural_predicates(e.cat());
  Json j;
  j["group"] = g.name;
  j["family_size"] = e.family().size();
  j["objects"] = e.cat().num_objects();
  j["morphisms"] = e.cat().num_morphisms();
  j["thin"] = s.thin;
  j["connected"] = s.num_components == 1;
  j["category"] = category_json(e.cat());
  std::ostringstream text;
  text << "E_F on " << g.name << ": " << e.cat().num_objects() << " objects ("
       << (s.thin ? "thin" : "NOT thin") << ", " << s.num_components << " component(s))\n";
  for (int ob = 0; ob < e.cat().num_objects(); ++ob) text << "  " << e.cat().objects[ob] << "\n";
  emit(o, out, j, text.str());
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  GammaCategory e = e_f_gamma(g, family_from_descriptor(g, o.family));
  ClassifyingCertificate cert = classifying_certificate(e);
  Json j;
  j["group"] = g.name;
  j["entries"] = Json::array();
  std::ostringstream text;
  for (const auto& entry : cert.entries) {
    Json je;
    je["subgroup"] = subgroup_label(g, entry.subgroup);
    je["inFamily"] = entry.in_family;
    je["verdict"] = entry.in_family ? "initial-object-witness" : "empty";
    je["witness"] = entry.in_family ? entry.witness_label : "";
    je["ok"] = entry.ok;
    j["entries"].push_back(je);
    text << (entry.ok ? "ok   " : "FAIL ") << subgroup_label(g, entry.subgroup)
         << (entry.in_family ? " in family: initial object " + entry.witness_label
                             : " not in family: fixed subcategory empty")
         << "\n";
  }
  j["ok"] = cert.all_ok;
  emit(o, out, j, text.str());
  return cert.all_ok ? 0 : 1;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  GammaCategory e = e_f_gamma(g, family_from_descriptor(g, o.family));
  QuotientCompareReport rep = quotient_compare(e, o.maxdim, o.cap);
  Json j;
  j["group"] = g.name;
  j["maxdim"] = rep.maxdim;
  j["orbitCounts"] = rep.orbit_counts;
  j["orbitCategoryCounts"] = rep.base_counts;
  j["totalCounts"] = rep.total_counts;
  j["ok"] = rep.ok;
  if (!rep.ok) j["counterexample"] = rep.counterexample;
  std::ostringstream text;
  for (int k = 0; k <= rep.maxdim; ++k)
    text << "dim " << k << ": orbits " << rep.orbit_counts[k] << ", nerve(Orb) "
         << rep.base_counts[k] << ", nerve(E) " << rep.total_counts[k] << "\n";
  text << (rep.ok ? "quotient comparison: ok\n"
                  : "quotient comparison FAILED: " + rep.counterexample + "\n");
  emit(o, out, j, text.str());
  return rep.ok ? 0 : 1;
}

int cmd_homology(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  Family fam = family_from_descriptor(g, o.family);
  FinCategory cat;
  if (o.of == "orbit") {
    cat = orbit_category(g, fam).cat;
  } else if (o.of == "efg") {
    cat = e_f_gamma(g, fam).cat();
  } else {
    throw error("bad --of value: " + o.of);
  }
  TruncatedNerve nv = nerve(cat, o.maxdim, o.cap);
  ChainComplex cc = chain_complex(cat, nv);
  HomologyResult h = homology_of(cc, o.maxdim);
  Json j;
  j["group"] = g.name;
  j["of"] = o.of;
  j["maxdim"] = o.maxdim;
  j["simplices"] = cc.ranks;
  j["homology"] = homology_json(h);
  std::ostringstream text;
  for (int k = 0; k <= o.maxdim; ++k)
    text << "H_" << k << " = " << homology_text(h.groups[k]) << "\n";
  if (o.dump_matrices) {
    std::ostringstream dump;
    for (int k = 1; k <= cc.top; ++k) {
      DenseMat m = cc.boundary[k].dense();
      dump << k << " " << m.rows << " " << m.cols << ";";
      for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) dump << " " << m.at(r, c).get_str();
      dump << "\n";
    }
    j["boundaries"] = dump.str();
    text << dump.str();
  }
  emit(o, out, j, text.str());
  return 0;
}

int cmd_hofix(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  GammaCategory e = e_f_gamma(g, family_from_descriptor(g, o.family));
  GammaSet x = opt_gset(o, g);
  std::vector<Cone> cones = holim_discrete(e.orb, x);
  HolimTheoremReport rep = verify_holim_theorem(e, x);
  Json j;
  j["group"] = g.name;
  j["gsetSize"] = x.size;
  j["cones"] = Json::array();
  for (const auto& c : cones) j["cones"].push_back(c.at);
  j["equivariantMaps"] = rep.maps;
  j["bijection"] = rep.ok;
  if (!rep.ok) j["counterexample"] = rep.detail;
  std::ostringstream text;
  text << "generalized homotopy fixed points: " << cones.size() << " cone(s)\n";
  for (const auto& c : cones) {
    text << " ";
    for (int v : c.at) text << " " << v;
    text << "\n";
  }
  text << "equivariant maps from pi0: " << rep.maps << "\n";
  text << (rep.ok ? "correspondence: bijection verified\n"
                  : "correspondence FAILED: " + rep.detail + "\n");
  emit(o, out, j, text.str());
  return rep.ok ? 0 : 1;
}

int cmd_cofinal(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  OrbitCategory orb = orbit_category(g, family_from_descriptor(g, o.family));
  std::vector<int> members;
  for (const auto& tok : split(o.sub, ',')) {
    if (trim(tok).empty()) continue;
    members.push_back(std::stoi(trim(tok)));
  }
  if (members.empty()) throw error("--sub needs a comma-separated list of member indices");
  CofinalityReport rep = cofinality_check(orb, members);
  Json j;
  j["group"] = g.name;
  j["sub"] = members;
  j["cofinal"] = rep.cofinal;
  j["allIndiscrete"] = rep.all_indiscrete;
  j["fibers"] = Json::array();
  std::ostringstream text;
  for (const auto& f : rep.fibers) {
    j["fibers"].push_back({{"over", orb.cat.objects[f.base_member]},
                           {"objects", f.objects},
                           {"indiscrete", f.indiscrete},
                           {"hasInitial", f.has_initial},
                           {"hasTerminal", f.has_terminal},
                           {"detail", f.detail}});
    text << "fiber over " << orb.cat.objects[f.base_member] << ": " << f.objects << " objects, "
         << (f.indiscrete ? "indiscrete"
                          : (f.contractible ? "not indiscrete (initial/terminal witness) " + f.detail
                                            : "NOT contractible " + f.detail))
         << "\n";
  }
  text << (rep.cofinal ? "inclusion is cofinal\n" : "inclusion is NOT cofinal\n");
  emit(o, out, j, text.str());
  return 0;
}

int cmd_sylow(const Options& o, std::ostream& out) {
  FiniteGroup g = opt_group(o);
  GammaSet x = o.gset.empty() ? gset_point(g) : opt_gset(o, g);
  bool generalized = !o.max_member.empty();
  SylowReport rep = generalized
                        ? maximal_member_comparison(g, subgroup_from_descriptor(g, o.max_member), x)
                        : sylow_comparison(g, o.p, x);
  Json j;
  j["group"] = g.name;
  if (generalized)
    j["mode"] = "unique-maximal-member";
  else
    j["p"] = o.p;
  j["sylow"] = rep.sylow_label;
  j["hypothesis"] = rep.hypothesis_holds
                        ? (generalized ? "unique maximal member" : "unique normal Sylow")
                        : "hypothesis fails";
  j["detail"] = rep.detail;
  if (rep.hypothesis_holds) {
    j["weylOrder"] = rep.weyl_order;
    j["cofinal"] = rep.cofinal;
    j["holim"] = rep.holim_count;
    j["weylFixed"] = rep.weyl_fixed_count;
    j["match"] = rep.match;
  }
  j["ok"] = rep.ok;
  std::ostringstream text;
  if (rep.hypothesis_holds)
    text << (generalized ? "maximal member " : "Sylow subgroup ") << rep.sylow_label
         << "; |X^{hF}| = " << rep.holim_count << ", |(X^P)^W| = " << rep.weyl_fixed_count
         << " -> " << (rep.match ? "match" : "MISMATCH") << "\n";
  else
    text << "verdict: hypothesis fails; " << rep.detail << "\n";
  emit(o, out, j, text.str());
  return rep.ok ? 0 : 1;
}

Homomorphism hom_from_descriptor(const Options& o) {
  std::string d = trim(o.hom);
  if (d.empty()) throw error("missing --hom");
  auto arrow = d.find("->");
  if (d == "id") {
    return identity_hom(opt_group(o));
  }
  if (d.rfind("mod:", 0) == 0 && arrow != std::string::npos) {
    FiniteGroup a = make_group(trim(d.substr(4, arrow - 4)), o.max_order);
    FiniteGroup b = make_group(trim(d.substr(arrow + 2)), o.max_order);
    return cyclic_mod_hom(a, b);
  }
  if (d.rfind("incl:", 0) == 0 && arrow != std::string::npos) {
    FiniteGroup a = make_group(trim(d.substr(5, arrow - 5)), o.max_order);
    FiniteGroup b = make_group(trim(d.substr(arrow + 2)), o.max_order);
    return symmetric_embedding(a, b);
  }
  if (d.rfind("sign:", 0) == 0) {
    FiniteGroup a = make_group(trim(d.substr(5)), o.max_order);
    return parity_hom(a, make_cyclic(2));
  }
  if (d.rfind("map:", 0) == 0 && arrow != std::string::npos) {
    // map:SRC->DST:v0,v1,...
    auto colon = d.find(':', arrow);
    if (colon == std::string::npos) throw error("bad hom descriptor: " + o.hom);
    FiniteGroup a = make_group(trim(d.substr(4, arrow - 4)), o.max_order);
    FiniteGroup b = make_group(trim(d.substr(arrow + 2, colon - arrow - 2)), o.max_order);
    std::vector<int> img;
    for (const auto& tok : split(d.substr(colon + 1), ',')) img.push_back(std::stoi(trim(tok)));
    Homomorphism h{a, b, img};
    h.validate();
    return h;
  }
  throw error("bad hom descriptor: " + o.hom);
}

int cmd_functorial(const Options& o, std::ostream& out) {
  Homomorphism h = hom_from_descriptor(o);
  Family fam = family_from_descriptor(h.target, o.family);
  InducedFunctor ind = induced_functor(h, fam);
  std::string why;
  bool equivariant = check_induced_equivariance(ind, h, &why);
  Json j;
  j["source"] = h.source.name;
  j["target"] = h.target.name;
  j["preimageFamilySize"] = ind.preimage.size();
  j["sourceObjects"] = ind.source.cat().num_objects();
  j["targetObjects"] = ind.target.cat().num_objects();
  j["functorValid"] = true;  // induced_functor validates or throws
  j["equivariant"] = equivariant;
  j["ok"] = equivariant;
  if (!equivariant) j["counterexample"] = why;
  std::ostringstream text;
  text << "induced functor E_{h^-1F}(" << h.source.name << ") -> E_F(" << h.target.name << "): "
       << ind.source.cat().num_objects() << " -> " << ind.target.cat().num_objects()
       << " objects\n"
       << (equivariant ? "equivariance: ok\n" : "equivariance FAILED: " + why + "\n");
  emit(o, out, j, text.str());
  return equivariant ? 0 : 1;
}

struct Check {
  std::string name;
  long long instances = 0;
  long long passed = 0;
};

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<Check> checks;
  auto record = [&](const std::string& name, bool ok) {
    for (auto& c : checks)
      if (c.name == name) {
        c.instances++;
        c.passed += ok ? 1 : 0;
        return;
      }
    checks.push_back({name, 1, ok ? 1 : 0});
  };

  std::vector<std::string> group_descs = {"Z1", "Z2", "Z3", "Z4",    "Z5", "Z6", "Z8",
                                          "Z12", "Z2xZ2", "S3", "D4", "Q8", "A4"};
  Rng rng(o.seed);
  for (const auto& gd : group_descs) {
    FiniteGroup g = make_group(gd);
    g.validate(true);
    record("group axioms", true);

    std::vector<Family> fams = {trivial_family(g), all_family(g), p_subgroup_family(g, 2),
                                p_subgroup_family(g, 3)};
    if (g.order > 1) fams.push_back(close_family(g, {subgroup_closure(g, {1})}));
    for (const auto& fam : fams) {
      OrbitCategory orb = orbit_category(g, fam);
      bool hom_ok = true;
      for (int a = 0; a < orb.cat.num_objects(); ++a)
        for (int b = 0; b < orb.cat.num_objects(); ++b)
          hom_ok = hom_ok &&
                     static_cast<long long>(orb.cat.hom_set(a, b).size()) ==
                         count_equivariant_maps(g, fam.members[a], fam.members[b]);
      record("orbit hom sets match equivariant map counts", hom_ok);

      GammaCategory e = e_f_gamma(g, fam);
      bool action_ok = true;
      try {
        e.validate_action();
      } catch (const error&) {
        action_ok = false;
      }
      record("E_F action and thinness", action_ok);

      bool fixed_ok = true, cert_ok = true;
      try {
        ClassifyingCertificate cert = classifying_certificate(e);
        cert_ok = cert.all_ok;
      } catch (const error&) {
        fixed_ok = false;
      }
      record("fixed subcategory cross-check", fixed_ok);
      record("classifying certificate", cert_ok);

      QuotientCompareReport q = quotient_compare(e, 2, o.cap);
      record("quotient comparison", q.ok);

      for (const auto& member : fam.members) {
        Subcategory fixed = fixed_subcategory(e, member);
        AcyclicityReport ac = initial_object_acyclicity(fixed.cat, 2, o.cap);
        record("fixed subcategories acyclic", ac.applicable && ac.ok);
      }

      for (int t = 0; t < 3; ++t) {
        Rng sub = rng.fork(t);
        GammaSet x = gset_random(g, 6, sub, true);
        HolimTheoremReport rep = verify_holim_theorem(e, x);
        record("holim correspondence", rep.ok);
      }
    }

    if (g.order <= 12) {
      HomologyResult h = homology(orbit_category(g, trivial_family(g)).cat, 1, o.cap);
      auto ab = abelianization(g);
      bool match = h.groups[1].betti == 0 && h.groups[1].torsion == ab;
      record("H_1 of the one-object model is the abelianization", match);
    }
  }

  {
    FiniteGroup z4 = make_cyclic(4), z2 = make_cyclic(2);
    Homomorphism h = cyclic_mod_hom(z4, z2);
    InducedFunctor ind = induced_functor(h, all_family(z2));
    record("induced functor equivariance", check_induced_equivariance(ind, h));
    InducedFunctor idf = induced_functor(identity_hom(z4), all_family(z4));
    record("identity induces the identity functor", idf.functor == identity_functor(idf.source.cat()));
  }

  bool all_ok = true;
  Json j;
  j["seed"] = o.seed;
  j["checks"] = Json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    bool ok = c.passed == c.instances;
    all_ok = all_ok && ok;
    j["checks"].push_back(
        {{"name", c.name}, {"instances", c.instances}, {"passed", c.passed}, {"ok", ok}});
    text << (ok ? "ok   " : "FAIL ") << c.name << " (" << c.passed << "/" << c.instances << ")\n";
  }
  j["ok"] = all_ok;
  emit(o, out, j, text.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbit categories, classifying categories, and homotopy fixed points for finite groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group", o.group, "group descriptor (Z6, S3, D4, Q8, Z2xZ2, perm:..., A4)");
    cmd->add_option("--cayley", o.cayley, "Cayley table file (overrides --group)");
    cmd->add_option("--family", o.family, "family descriptor (trivial, all, p:2, gen:[...])");
    cmd->add_option("--output", o.output, "output format: json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--maxdim", o.maxdim, "truncation dimension N")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-order", o.max_order, "group order cap");
    cmd->add_option("--cap", o.cap, "simplex cap for nerves");
    cmd->add_option("--seed", o.seed, "seed for randomized checks");
    return cmd;
  };

  auto* c_orbit = add_common(app.add_subcommand("orbit-cat", "emit the orbit category"));
  auto* c_efg = add_common(app.add_subcommand("efg", "emit the classifying category E_F"));
  auto* c_cert = add_common(app.add_subcommand("certify", "fixed-point certificate for every subgroup"));
  auto* c_quot = add_common(app.add_subcommand("quotient-check", "compare N(E_F)/Γ with N(Orb_F)"));
  auto* c_hom = add_common(app.add_subcommand("homology", "integral homology of the truncated nerve"));
  c_hom->add_option("--of", o.of, "which nerve: orbit or efg")
      ->check(CLI::IsMember({"orbit", "efg"}));
  c_hom->add_flag("--dump-matrices", o.dump_matrices, "dump boundary matrices as text");
  auto* c_hofix = add_common(app.add_subcommand("hofix", "generalized homotopy fixed points of a G-set"));
  c_hofix->add_option("--gset", o.gset, "G-set: file, 'point', 'regular' or cosets:[gens]");
  auto* c_cof = add_common(app.add_subcommand("cofinal", "fiber indiscreteness for a full subcategory"));
  c_cof->add_option("--sub", o.sub, "comma-separated family member indices");
  auto* c_syl = add_common(app.add_subcommand("sylow", "compare X^{hP} with (X^P)^W for the p-family"));
  c_syl->add_option("--p", o.p, "the prime p");
  c_syl->add_option("--max", o.max_member,
                    "explicit maximal member, e.g. [(1 2 3)] (unique-maximal-member mode)");
  c_syl->add_option("--gset", o.gset, "G-set (defaults to a point)");
  auto* c_fun = add_common(app.add_subcommand("functorial", "induced functor checks for a homomorphism"));
  c_fun->add_option("--hom", o.hom, "id, mod:Z8->Z4, incl:S2->S3, sign:S3, map:SRC->DST:v0,v1,...");
  auto* c_self = add_common(app.add_subcommand("selftest", "run the invariant suite on the built-in zoo"));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_orbit->parsed()) return cmd_orbit_cat(o, out);
    if (c_efg->parsed()) return cmd_efg(o, out);
    if (c_cert->parsed()) return cmd_certify(o, out);
    if (c_quot->parsed()) return cmd_quotient(o, out);
    if (c_hom->parsed()) return cmd_homology(o, out);
    if (c_hofix->parsed()) return cmd_hofix(o, out);
    if (c_cof->parsed()) return cmd_cofinal(o, out);
    if (c_syl->parsed()) return cmd_sylow(o, out);
    if (c_fun->parsed()) return cmd_functorial(o, out);
    if (c_self->parsed()) return cmd_selftest(o, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace orbcat
