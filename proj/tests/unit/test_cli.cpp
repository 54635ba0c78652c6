#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "solk/cli.hpp"

using solk::cli::kExitInvalid;
using solk::cli::kExitOk;
using solk::cli::kExitUsage;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "solk");
  std::ostringstream out, err;
  int code = solk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SOLK_TEST_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ktheory report with descending class order") {
  Result r = run({"ktheory", data("aabab.sol"), "--order", "paper"});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "delta0 = [[-1,1,0],[1,-1,0]]"));
  CHECK(contains(r.out, "psi*_0 = [[2,1],[1,1]]"));
  CHECK(contains(r.out, "K0(C*(Gs)) = Z^2"));
  CHECK(contains(r.out, "K1(C*(Gs)) = Z"));
}

TEST_CASE("ktheory JSON") {
  Result r = run({"ktheory", data("aabab.sol"), "--order", "paper", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::ordered_json::parse(r.out);
  for (const char* key : {"classes", "delta0", "k0_basis", "psi0", "k1", "psi1", "k0_limit",
                          "k1_limit", "diagnostics"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["delta0"] == nlohmann::json::parse("[[-1,1,0],[1,-1,0]]"));
  CHECK(j["psi0"] == nlohmann::json::parse("[[2,1],[1,1]]"));
  CHECK(j["classes"][0]["name"] == "ba");
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* sub : {"classes", "ktheory", "validate"}) {
    for (const char* file : {"aabab.sol", "fibonacci.sol", "circle2.sol"}) {
      Result a = run({sub, data(file), "--json"});
      Result b = run({sub, data(file), "--json"});
      CHECK(a.code == kExitOk);
      CHECK(a.out == b.out);
      CHECK(nlohmann::ordered_json::parse(a.out).dump(2) + "\n" == a.out);
      Result t = run({sub, data(file)});
      CHECK(t.out == run({sub, data(file)}).out);
    }
  }
}

TEST_CASE("sft and limit subcommands") {
  Result s = run({"sft", "--matrix", "1,1;1,1"});
  REQUIRE(s.code == kExitOk);
  CHECK(contains(s.out, "Z[1/2]"));
  CHECK(contains(s.out, "K1 = 0"));

  Result l = run({"limit", "--matrix", "3"});
  REQUIRE(l.code == kExitOk);
  CHECK(contains(l.out, "ZOneOver(3)"));

  Result lj = run({"limit", "--matrix", "1,1;1,1", "--json"});
  REQUIRE(lj.code == kExitOk);
  auto j = nlohmann::ordered_json::parse(lj.out);
  CHECK(j["descriptor"] == "ZOneOver(2)");
  CHECK(j["eventual_basis"] == nlohmann::json::parse("[[1],[1]]"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"ktheory"}).code == kExitUsage);
  CHECK(run({"ktheory", data("aabab.sol"), "--order", "sideways"}).code == kExitUsage);
  CHECK(run({"limit", "--matrix", "1,2"}).code == kExitUsage);
  CHECK(run({"sft", "--matrix", "1,x"}).code == kExitUsage);
  CHECK(run({"validate", data("undeclared.sol")}).code == kExitUsage);
  CHECK(run({"validate", data("no-such-file.sol")}).code == kExitUsage);

  Result id = run({"validate", data("identity.sol")});
  CHECK(id.code == kExitInvalid);
  CHECK(contains(id.out, "homeomorphism"));
  CHECK(run({"ktheory", data("identity.sol")}).code == kExitInvalid);
  CHECK(run({"sft", "--matrix", "1,1;0,0"}).code == kExitInvalid);

  CHECK(run({"validate", data("aabab.sol")}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parse errors name the line") {
  Result r = run({"validate", data("undeclared.sol")});
  CHECK(contains(r.err, "line"));
}
