#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orbcat/cli.hpp"
#include "orbcat/gset.hpp"

using namespace orbcat;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("certify subcommand") {
  Result r = cli({"certify", "--group", "S3", "--family", "all", "--output", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["entries"].size() == 6);
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("subgroup"));
    CHECK(e.contains("inFamily"));
    CHECK(e.contains("verdict"));
    CHECK(e.contains("witness"));
    CHECK(e["ok"] == true);
  }
  // text mode prints one witness line per subgroup
  Result t = cli({"certify", "--group", "S3", "--family", "all"});
  CHECK(t.code == 0);
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
}

TEST_CASE("homology subcommand pins the classical values") {
  Result r = cli({"homology", "--group", "Z2", "--family", "trivial", "--maxdim", "3",
                  "--output", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  auto& h = j["homology"];
  REQUIRE(h.size() == 4);
  CHECK(h[0]["betti"] == 1);
  CHECK(h[0]["torsion"].empty());
  CHECK(h[1]["betti"] == 0);
  CHECK(h[1]["torsion"] == Json::array({"2"}));
  CHECK(h[2]["betti"] == 0);
  CHECK(h[2]["torsion"].empty());
  CHECK(h[3]["torsion"] == Json::array({"2"}));

  Result dump = cli({"homology", "--group", "Z2", "--family", "trivial", "--maxdim", "1",
                     "--dump-matrices"});
  CHECK(dump.code == 0);
  CHECK(dump.out.find("2 1 1;") != std::string::npos);  // the boundary (2) in degree 2
}

TEST_CASE("sylow subcommand") {
  Result r = cli({"sylow", "--group", "S3", "--p", "2", "--output", "json"});
  CHECK(r.code == 0);  // detecting the failed hypothesis is a pass
  Json j = Json::parse(r.out);
  CHECK(j["hypothesis"] == "hypothesis fails");
  CHECK(j["ok"] == true);
  std::string detail = j["detail"];
  CHECK(detail.find("not indiscrete") != std::string::npos);

  Result good = cli({"sylow", "--group", "Z6", "--p", "3", "--output", "json"});
  CHECK(good.code == 0);
  Json jg = Json::parse(good.out);
  CHECK(jg["match"] == true);
}

TEST_CASE("usage errors exit with code 2 and name the bad token") {
  Result r = cli({"certify", "--group", "ZZZ9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ZZZ9") != std::string::npos);

  Result r2 = cli({"certify", "--no-such-flag"});
  CHECK(r2.code == 2);

  Result r3 = cli({"homology", "--group", "S3", "--family", "p:9"});
  CHECK(r3.code == 2);

  Result r4 = cli({});
  CHECK(r4.code == 2);

  Result help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("orbit-cat") != std::string::npos);
}

TEST_CASE("category exports") {
  Result dot = cli({"orbit-cat", "--group", "Z4", "--family", "all", "--output", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);

  Result oj = cli({"orbit-cat", "--group", "Z4", "--family", "all", "--output", "json"});
  CHECK(oj.code == 0);
  Json jo = Json::parse(oj.out);
  CHECK(jo["family"].size() == 3);
  CHECK(jo["category"].contains("composition"));

  Result st = cli({"selftest", "--seed", "7", "--output", "json"});
  CHECK(st.code == 0);
  Json js = Json::parse(st.out);
  CHECK(js["ok"] == true);
  CHECK(js["seed"] == 7);
  for (const auto& chk : js["checks"]) CHECK(chk["passed"] == chk["instances"]);

  Result j = cli({"efg", "--group", "Z2", "--family", "trivial", "--output", "json"});
  CHECK(j.code == 0);
  Json parsed = Json::parse(j.out);
  CHECK(parsed["objects"] == 2);
  CHECK(parsed["thin"] == true);
  CHECK(parsed["category"]["objects"].size() == 2);
}

TEST_CASE("quotient-check subcommand") {
  Result r = cli({"quotient-check", "--group", "S3", "--family", "p:2", "--maxdim", "2",
                  "--output", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["orbitCounts"] == j["orbitCategoryCounts"]);
}

TEST_CASE("hofix subcommand") {
  Result pt = cli({"hofix", "--group", "S3", "--family", "p:3", "--gset", "point",
                   "--output", "json"});
  CHECK(pt.code == 0);
  Json j = Json::parse(pt.out);
  CHECK(j["cones"].size() == 1);
  CHECK(j["bijection"] == true);

  // through a G-set file
  FiniteGroup s3 = make_group("S3");
  GammaSet x = gset_disjoint(gset_cosets(s3, subgroup_closure(s3, {3})), gset_point(s3));
  std::string path = "hofix_input.tmp";
  {
    std::ofstream f(path);
    f << gset_to_text(x);
  }
  Result file = cli({"hofix", "--group", "S3", "--family", "p:3", "--gset", path,
                     "--output", "json"});
  std::remove(path.c_str());
  CHECK(file.code == 0);
  Json jf = Json::parse(file.out);
  CHECK(jf["cones"].size() == 1);
}

TEST_CASE("cofinal subcommand") {
  Result r = cli({"cofinal", "--group", "S3", "--family", "p:2", "--sub", "2",
                  "--output", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["cofinal"] == false);
}

TEST_CASE("functorial subcommand") {
  Result r = cli({"functorial", "--hom", "mod:Z8->Z4", "--family", "all", "--output", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["equivariant"] == true);

  Result sign = cli({"functorial", "--hom", "sign:S3", "--family", "all", "--output", "json"});
  CHECK(sign.code == 0);

  Result bad = cli({"functorial", "--hom", "squint:S3", "--family", "all"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("squint") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical JSON") {
  std::vector<std::string> args = {"hofix", "--group", "S3", "--family", "all",
                                   "--gset", "regular", "--seed", "42", "--output", "json"};
  Result a = cli(args), b = cli(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);

  Result c = cli({"certify", "--group", "D4", "--family", "all", "--output", "json"});
  Result d = cli({"certify", "--group", "D4", "--family", "all", "--output", "json"});
  CHECK(c.out == d.out);
}
