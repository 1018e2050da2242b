#include <doctest.h>

#include <sstream>

#include "schurlab/cli.hpp"
#include "schurlab/json_io.hpp"

using namespace schurlab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  Result r = call(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("dim and kostka") {
  CHECK(call_json({"dim", "--lambda", "3,2"})["dim"] == 3);
  CHECK(call_json({"dim", "--lambda", "2,1", "--mu", "1,2"})["dim"] == 2);
  CHECK(call_json({"kostka", "--mu", "2,1", "--lambda", "1,1,1"})["kostka"] == 2);
  CHECK(call({"dim", "--lambda", "2,1", "--mu", "1,1"}).code == 2);
  CHECK(call({"dim", "--lambda", "2,-1"}).code == 2);
  CHECK(call({"kostka", "--mu", "1,2", "--lambda", "1,2"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"dim"}).code == 2);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"compositions", "--n", "0", "--r", "2"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("the size guard names the bound") {
  Result r = call({"sym-iso", "--r", "8"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1000000") != std::string::npos);
}

TEST_CASE("compositions and simples formats") {
  Json j = call_json({"compositions", "--n", "3", "--r", "2"});
  CHECK(j["count"] == 6);
  CHECK(j["compositions"][0] == Json::array({2, 0, 0}));
  Result csv = call({"simples", "--lambda", "2,1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "mu,multiplicity\n\"3,0\",1\n\"2,1\",1\n");
  Json s = call_json({"simples", "--lambda", "0,-1", "--window", "2"});
  CHECK(s["simples"].size() == 3);
  CHECK(s["char_p"] == "not computed");
  CHECK(call({"simples", "--lambda", "0,-1"}).code == 2);
}

TEST_CASE("products") {
  Json p = call_json({"mul", "1,0;0,1", "1,0;0,1"});
  REQUIRE(p["terms"].size() == 1);
  CHECK(p["terms"][0]["coeff_num"] == "1");
  // the swap squares to 1_(1,1)
  Json q = call_json({"mul", "0,1;1,0", "0,1;1,0"});
  REQUIRE(q["terms"].size() == 1);
  CHECK(q["terms"][0]["matrix"] == Json::array({Json::array({1, 0}), Json::array({0, 1})}));
  CHECK(call({"mul", "1,0;0,1", "2,0;0,0"}).code == 0);
  CHECK(call({"mul", "1,0;0,1", "1,0;0,2"}).code == 2);

  Json one = to_json(UdotElement::idempotent(Weight{1, -1}));
  Json prod = call_json({"udot", "mul", one.dump(), one.dump()});
  CHECK(prod == one);
  Json other = to_json(UdotElement::idempotent(Weight{0, 0}));
  CHECK(call_json({"udot", "mul", one.dump(), other.dump()})["terms"].empty());
}

TEST_CASE("verification subcommands") {
  Result r = call({"verify", "relations", "--n", "2", "--window", "3"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["checks_failed"] == 0);
  CHECK(r.err.find("wall time") != std::string::npos);
  CHECK(call({"udot", "verify-psi", "--n", "2", "--r", "2", "--degree", "1"}).code == 0);
  Json t = call_json({"udot", "gl2-table", "--lambda", "1,-1", "--degree", "2"});
  CHECK(t["commutative"] == true);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"basis", "--kind", "codet", "--lambda", "2,1,0", "--mu", "1,1,1"},
           {"basis", "--kind", "pbw", "--lambda", "2,1", "--form", "psa-a"},
           {"udot", "basis", "--lambda", "1,0,-1", "--degree", "2", "--form", "b"},
           {"verify", "zbas", "--n", "2", "--r", "2"},
           {"sym-iso", "--r", "3"}}) {
    Result a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
