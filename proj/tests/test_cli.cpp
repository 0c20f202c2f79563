#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "eulergamma/cli.hpp"

using namespace eulergamma;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parameter parsing") {
  const Bits p = 128;
  CHECK(cli::parse_parameter("2.5", p).to_double() == 2.5);
  CHECK(cli::parse_parameter("1/3", p).to_double() == doctest::Approx(1.0 / 3));
  CHECK(cli::parse_parameter("e", p).to_double() == doctest::Approx(2.718281828459045));
  CHECK(cli::parse_parameter("pi", p).to_double() == doctest::Approx(3.141592653589793));
  CHECK(cli::parse_parameter("ln2", p).to_double() == doctest::Approx(0.6931471805599453));
  CHECK_THROWS_AS(cli::parse_parameter("tau", p), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_parameter("1/0", p), std::invalid_argument);
}

TEST_CASE("compute prints truncated digits") {
  const Outcome r = run_cli({"compute", "--digits", "12"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "0.577215664901\n");
}

TEST_CASE("compute formulas agree") {
  const std::string expected = "0.57721566490153286060651209008240243104215933593992\n";
  for (const char* formula : {"theorem", "c1", "c2", "limit"}) {
    const Outcome r = run_cli({"compute", "--digits", "50", "--formula", formula});
    CHECK_MESSAGE(r.code == cli::kSuccess, formula);
    CHECK_MESSAGE(r.out == expected, formula);
  }
  const Outcome alt = run_cli({"compute", "--digits", "50", "--x", "e", "--w", "2"});
  CHECK(alt.out == expected);
  const Outcome naive = run_cli({"compute", "--digits", "8", "--formula", "naive", "--n", "10"});
  CHECK(naive.code == cli::kSuccess);
  CHECK(naive.out.rfind("0.626383", 0) == 0);
}

TEST_CASE("hypothesis violations exit with a usage error") {
  const Outcome neg = run_cli({"compute", "--x", "-1"});
  CHECK(neg.code == cli::kUsageError);
  CHECK(neg.err.find("x > 0") != std::string::npos);
  CHECK(neg.out.empty());
  CHECK(run_cli({"compute", "--w", "0"}).code == cli::kUsageError);
  CHECK(run_cli({"compute", "--x", "banana"}).code == cli::kUsageError);
  CHECK(run_cli({"compute", "--digits", "0"}).code == cli::kUsageError);
  CHECK(run_cli({"compute", "--formula", "bogus"}).code == cli::kUsageError);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"exponent", "--k", "-1"}).code == cli::kUsageError);
  CHECK(run_cli({"verify", "--identities", "nonsense"}).code == cli::kUsageError);
}

TEST_CASE("compute JSON schema and round trip") {
  const Outcome r = run_cli({"compute", "--digits", "30", "--x", "2", "--w", "0.5", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> expected_keys = {"command", "x",      "w",      "digits", "formula", "result",
                                                  "error_exp10", "n1", "n2", "n3", "elapsed_ms", "pass"};
  CHECK(keys == expected_keys);
  CHECK(j["command"] == "compute");
  CHECK(j["digits"] == 30);
  CHECK(j["result"] == "0.577215664901532860606512090082");
  CHECK(j["error_exp10"].get<long>() <= -30);
  CHECK(j["pass"].is_null());
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("exponent subcommand") {
  const Outcome big = run_cli({"exponent", "--x", "e", "--w", "2", "--k", "10"});
  CHECK(big.code == cli::kSuccess);
  CHECK(big.out == "mantissa=7.357931618 exp10=-572754397\n");
  const Outcome small = run_cli({"exponent", "--x", "1", "--w", "1", "--k", "6", "--json"});
  const auto j = nlohmann::ordered_json::parse(small.out);
  CHECK(j["exp10"] == -176);
  CHECK(j["mantissa"].get<std::string>().rfind("6.21013648", 0) == 0);
  CHECK(j.dump() + "\n" == small.out);
  const Outcome zero = run_cli({"exponent", "--x", "1", "--w", "1", "--k", "0"});
  CHECK(zero.out == "mantissa=3.678794412 exp10=-1\n");
}

TEST_CASE("verify passes and reports per check") {
  const Outcome r = run_cli({"verify", "--digits", "40", "--json"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["grid_pass"] == true);
  CHECK(j["identities"].size() >= 5);
  for (const auto& id : j["identities"]) CHECK(id["pass"] == true);
  CHECK(j.dump() + "\n" == r.out);

  const Outcome text = run_cli({"verify", "--digits", "30", "--grid", "1,1;2,0.5", "--identities", "c2,mellin"});
  CHECK(text.code == cli::kSuccess);
  CHECK(text.out.find("PASS grid_invariance") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bench emits one row per digit count") {
  const Outcome r = run_cli({"bench", "--digits-list", "20,40", "--json"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["digits"] == 20);
  CHECK(j["rows"][1]["digits"] == 40);
}
