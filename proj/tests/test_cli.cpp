#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aqp/ajverify.hpp"
#include "aqp/cli.hpp"
#include "aqp/ore_json.hpp"
#include "aqp/parse.hpp"
#include "aqp/reference.hpp"
#include "json.hpp"

using namespace aqp;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct ScopedEnv {
  explicit ScopedEnv(const char* value) { ::setenv(cli::kMaxOrderEnv, value, 1); }
  ~ScopedEnv() { ::unsetenv(cli::kMaxOrderEnv); }
};

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("jones") {
  CHECK(run({"jones", "--knot", "3_1", "--n", "2"}).out == "q + q^3 - q^4\n");
  CHECK(run({"jones", "--knot", "4_1", "--n", "1"}).out == "1\n");

  const Result json = run({"jones", "--knot", "4_1", "--n", "3", "--emit", "json"});
  REQUIRE(json.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("knot") == "4_1");
  CHECK(j.at("n") == 3);
  CHECK(parse_laurent(j.at("value").get<std::string>()) == jones(Knot::kFigure8, 3));
  CHECK(j.at("coeffs").at("0") == 3);
  CHECK(j.at("coeffs").at("-6") == 1);
}

TEST_CASE("usage errors exit with code 2") {
  const Result unknown = run({"jones", "--knot", "5_2", "--n", "2"});
  CHECK(unknown.code == cli::kExitUsage);
  CHECK(unknown.err.find("5_2") != std::string::npos);
  CHECK(run({"jones", "--knot", "3_1", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"jones", "--knot", "3_1"}).code == cli::kExitUsage);
  CHECK(run({"jones", "--knot", "3_1", "--n", "2", "--emit", "xml"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"telescope", "--knot", "3_1", "--max-order", "-1"}).code == cli::kExitUsage);
  CHECK(run({"char-variety", "--operator", "/nonexistent/op.json"}).code == cli::kExitUsage);
  CHECK(run({"char-variety", "--operator", temp_file("aqp_bad.json", "{not json").string()})
            .code == cli::kExitUsage);
  CHECK(run({"repro-paper", "--threads", "0"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("telescope") {
  const Result tref = run({"telescope", "--knot", "3_1"});
  REQUIRE(tref.code == cli::kExitOk);
  CHECK(tref.out.find("telescoping order: 1\n") != std::string::npos);
  CHECK(tref.out.find("failed orders: none\n") != std::string::npos);

  const Result fig8 = run({"telescope", "--knot", "4_1", "--emit", "json"});
  REQUIRE(fig8.code == cli::kExitOk);
  const auto j = OrderedJson::parse(fig8.out);
  CHECK(j.at("order") == 2);
  CHECK(j.at("failed_orders") == nlohmann::json::array({1}));

  const Result bounded = run({"telescope", "--knot", "4_1", "--max-order", "1"});
  CHECK(bounded.code == cli::kExitVerificationFailed);
}

TEST_CASE("the environment overrides the default max order") {
  {
    ScopedEnv env("1");
    CHECK(run({"telescope", "--knot", "4_1"}).code == cli::kExitVerificationFailed);
    CHECK(run({"telescope", "--knot", "4_1", "--max-order", "2"}).code == cli::kExitOk);
  }
  {
    ScopedEnv env("lots");
    CHECK(run({"telescope", "--knot", "3_1"}).code == cli::kExitUsage);
  }
  CHECK(run({"telescope", "--knot", "4_1"}).code == cli::kExitOk);
}

TEST_CASE("char-variety reads telescope output") {
  for (const char* knot : {"3_1", "4_1"}) {
    const Result t = run({"telescope", "--knot", knot, "--homogenize", "--emit", "json"});
    REQUIRE(t.code == cli::kExitOk);
    const auto wrapped = temp_file(std::string("aqp_op_") + knot + ".json", t.out);
    const Result cv = run({"char-variety", "--operator", wrapped.string()});
    REQUIRE(cv.code == cli::kExitOk);
    const Knot k = knot_from_name(knot);
    CHECK(cv.out == characteristic_poly(reference_operator(k)).to_string() + "\n");

    // A bare operator round-trips through JSON unchanged.
    const OrderedJson op = OrderedJson::parse(t.out).at("operator");
    CHECK(normalize(ore_from_json(op)) == reference_operator(k));
    const auto bare = temp_file(std::string("aqp_bare_") + knot + ".json", op.dump());
    CHECK(run({"char-variety", "--operator", bare.string()}).out == cv.out);
  }
}

TEST_CASE("aj-check") {
  const Result r = run({"aj-check", "--knot", "4_1"});
  CHECK(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("essentially_equal") == true);
  CHECK(j.at("lemma31_ok") == true);
  CHECK(j.at("annihilation").at("ok") == true);
  CHECK(j.at("no_order1_certificate").at("nullspace_dimension") == 0);
  CHECK(j.at("factors").at("cofactor_L_degree") == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> cmd{"telescope", "--knot", "4_1", "--emit", "json"};
  CHECK(run(cmd).out == run(cmd).out);
  const Result one = run({"repro-paper", "--threads", "1"});
  const Result two = run({"repro-paper", "--threads", "2"});
  CHECK(one.code == cli::kExitOk);
  CHECK(one.out == two.out);
  CHECK(one.out.find("status: MISMATCH") == std::string::npos);
}
