#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace rlab;
using namespace rlab::cli;

namespace {

const std::filesystem::path kData = std::filesystem::path(__FILE__).parent_path() / "data";

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run_cli(args);
  return json::parse(r.out);
}

std::string without_clock(json j) {
  j.erase("wall_clock_ms");
  return j.dump();
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli({"check-reedy", "--zoo", "fin_all:2", "--field", "Q"}).code == kPass);
  CHECK(run_cli({"decompose", "--criterion", "e", "--zoo", "span_inj:2", "--field", "Q"}).code == kPass);
  CHECK(run_cli({"decompose", "--criterion", "e", "--zoo", "span_inj:2", "--field", "Fp:2"}).code == kFail);
  CHECK(run_cli({"decompose", "--criterion", "c", "--zoo", "fin_all:2"}).code == kFail);
  // input errors
  CHECK(run_cli({"check-reedy", "--zoo", "nope:1"}).code == kInputError);
  CHECK(run_cli({"check-reedy", "--zoo", "fin_all:9"}).code == kInputError);
  CHECK(run_cli({"check-reedy", "--zoo", "fin_all:2", "--field", "Fp:4"}).code == kInputError);
  CHECK(run_cli({"check-reedy"}).code == kInputError);
  CHECK(run_cli({"frobnicate", "--zoo", "fin_all:2"}).code == kInputError);
  CHECK(run_cli({"spans", "--zoo", "fin_all:2"}).code == kInputError);
  CHECK(run_cli({"glue", "--zoo", "quiver_ab", "--pairs", "gorenstein"}).code == kInputError);
  // unsupported hypotheses
  CHECK(run_cli({"irreducibles", "--zoo", "fin_all:2", "--field", "Fp:2"}).code == kUnsupported);
  CHECK(run_cli({"glue", "--zoo", "orbit_c2", "--field", "Fp:2"}).code == kUnsupported);
}

TEST_CASE("json reports") {
  json j = run_json({"decompose", "--criterion", "e", "--zoo", "span_inj:2"});
  CHECK(j["format"] == 1);
  CHECK(j["status"] == "PASS");
  CHECK(j.contains("wall_clock_ms"));
  CHECK(j["data"]["decomposition"]["end_dims"] == json({1, 1, 2}));

  auto f2 = run_json({"decompose", "--criterion", "e", "--zoo", "span_inj:2", "--field", "Fp:2"});
  CHECK(f2["status"] == "FAIL");
  bool found = false;
  for (const auto& c : f2["checks"])
    if (c["name"] == "automorphism group orders invertible") found = !c["pass"].get<bool>();
  CHECK(found);

  auto irr = run_json({"irreducibles", "--zoo", "fin_all:3"});
  CHECK(irr["data"]["total"] == 7);
}

TEST_CASE("property: reports round trip") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-reedy", "--zoo", "fin_inj:2"},
           {"report", "--zoo", "span_inj:2"},
           {"glue", "--zoo", "quiver_ab", "--seed", "3"},
           {"hovey", "--zoo", "dual_numbers:2", "--battery", "3"},
           {"irreducibles", "--zoo", "fin_all:2", "--field", "Fp:2"}}) {
    json j = run_json(args);
    Report r = report_from_json(j);
    CHECK(to_json(r) == j);
    CHECK(report_from_json(json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("property: same seed gives identical reports") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"glue", "--zoo", "fin_inj:2", "--seed", "17", "--battery", "5"},
           {"hovey", "--zoo", "dual_numbers:2", "--seed", "9", "--battery", "4"},
           {"report", "--zoo", "fin_all:2", "--seed", "2"}}) {
    std::string a = without_clock(run_json(args)), b = without_clock(run_json(args));
    CHECK(a == b);
  }
  // The seed reaches the battery.
  auto s1 = run_json({"glue", "--zoo", "fin_inj:2", "--seed", "1", "--battery", "6"});
  auto s2 = run_json({"glue", "--zoo", "fin_inj:2", "--seed", "2", "--battery", "6"});
  CHECK(s1["seed"] == 1);
  CHECK(s2["seed"] == 2);
}

TEST_CASE("--out writes the json report") {
  auto path = std::filesystem::temp_directory_path() / "reedy_lab_cli_test.json";
  auto r = run_cli({"check-reedy", "--zoo", "quiver_ab", "--out", path.string(), "--format", "json"});
  REQUIRE(r.code == kPass);
  std::ifstream in(path);
  json written = json::parse(in);
  CHECK(without_clock(written) == without_clock(json::parse(r.out)));
  std::filesystem::remove(path);
}

TEST_CASE("every zoo instance passes check-reedy") {
  for (const char* z : {"fin_all:1", "fin_all:2", "fin_all:3", "fin_inj:3", "fin_surj:3", "simplex:3", "cyclic:3",
                        "vect_fq:2,2", "vect_fq:3,1", "poset_chain_meets:3", "span_inj:3", "span_poset:3",
                        "quiver_ab", "quiver_ab_inverse", "dual_numbers:1", "dual_numbers:2", "cyclic_group:6",
                        "orbit_c2"}) {
    INFO(z);
    CHECK(run_cli({"check-reedy", "--zoo", z}).code == kPass);
  }
}

TEST_CASE("zoo hom counts") {
  // fin_all: all maps [m] -> [n], n^m of them.
  auto fa = run_json({"check-reedy", "--zoo", "fin_all:2"});
  for (const auto& p : fa["data"]["pairs"]) {
    const std::size_t m = p["x"].get<std::string>()[1] - '0', n = p["y"].get<std::string>()[1] - '0';
    CHECK(p["hom_dim"] == power(n, m));
  }
  // 2x2 matrices over F_2.
  auto vf = run_json({"check-reedy", "--zoo", "vect_fq:2,2"});
  std::size_t largest = 0;
  for (const auto& p : vf["data"]["pairs"]) largest = std::max(largest, p["hom_dim"].get<std::size_t>());
  CHECK(largest == 16);
}

TEST_CASE("category spec files") {
  auto spec = run_json({"check-reedy", "--spec", (kData / "quiver_ab.json").string()});
  auto built = run_json({"check-reedy", "--zoo", "quiver_ab"});
  CHECK(spec["status"] == "PASS");
  CHECK(spec["data"]["pairs"] == built["data"]["pairs"]);
  CHECK(spec["instance"] == "quiver a->b");

  auto chain = run_cli({"decompose", "--criterion", "d", "--spec", (kData / "chain3.json").string()});
  CHECK(chain.code != kInputError);
  CHECK(run_cli({"check-reedy", "--spec", (kData / "chain3.json").string(), "--field", "Fp:3"}).code == kPass);

  auto bad = [](const json& doc) {
    try {
      instance_from_json(doc, std::nullopt);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  json base = json::parse(std::ifstream(kData / "chain3.json"));
  json missing = base;
  missing["composition"] = json::array();
  CHECK(bad(missing).find("not total") != std::string::npos);
  json unknown = base;
  unknown["plus"].push_back("zz");
  CHECK(bad(unknown).find("unknown label zz") != std::string::npos);
  json wrong = base;
  wrong["composition"][0]["result"] = "u";
  CHECK(bad(wrong).find("wrong source or target") != std::string::npos);
  json no_objects = base;
  no_objects.erase("objects");
  CHECK(bad(no_objects).find("objects") != std::string::npos);
  json field = base;
  field["field"] = "R";
  CHECK_FALSE(bad(field).empty());
  CHECK(run_cli({"check-reedy", "--spec", (kData / "missing.json").string()}).code == kInputError);
}
