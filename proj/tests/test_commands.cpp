#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/commands.hpp"
#include "core/error.hpp"

using hsf::CommandOutcome;
using hsf::ErrorCode;
using hsf::Format;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(hsf::parse_format("text") == Format::text);
  CHECK(hsf::parse_format("csv") == Format::csv);
  CHECK(hsf::parse_format("json") == Format::json);
  CHECK_THROWS_AS(hsf::parse_format("xml"), hsf::Error);
}

TEST_CASE("verify command") {
  CommandOutcome out = hsf::cmd_verify({2}, 4, Format::json);
  CHECK(!out.verify_failed);
  nlohmann::json j = nlohmann::json::parse(out.output);
  CHECK(j["command"] == "verify");
  CHECK(j["parameters"]["degree"] == 4);
  // per_root + (product, top_degree) for the one root count.
  CHECK(j["results"].size() == 3);
  for (const auto& rep : j["results"]) CHECK(rep["passed"] == true);

  CHECK_THROWS_AS(hsf::cmd_verify({2}, -1, Format::text), hsf::Error);
  CHECK_THROWS_AS(hsf::cmd_verify({0}, 4, Format::text), hsf::Error);
  CHECK_THROWS_AS(hsf::cmd_verify({}, 4, Format::text), hsf::Error);

  CommandOutcome d0 = hsf::cmd_verify({2}, 0, Format::text);
  CHECK(!d0.verify_failed);
}

TEST_CASE("table command") {
  CommandOutcome csv = hsf::cmd_table(Format::csv);
  std::vector<std::string> rows = lines(csv.output);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "k2,chi,traces");
  CHECK(rows[1] == "0,1,-1;1");
  CHECK(rows[11] == "440,56,21");

  nlohmann::json j = nlohmann::json::parse(hsf::cmd_table(Format::json).output);
  CHECK(j["results"].size() == 11);
  CHECK(j["results"][9]["k2"] == 360);
  CHECK(j["results"][9]["traces"] == nlohmann::json({-19, 19}));
}

TEST_CASE("invariants command") {
  CommandOutcome csv = hsf::cmd_invariants(-19, Format::csv);
  std::vector<std::string> rows = lines(csv.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "t,k2,chi,euler,signature,moduli_dim");
  CHECK(rows[1] == "-19,360,46,192,-8,20");

  nlohmann::json j =
      nlohmann::json::parse(hsf::cmd_invariants(-19, Format::json).output);
  CHECK(j["results"]["k2"] == 360);
  CHECK(j["results"]["ahat"] == "1");

  try {
    hsf::cmd_invariants(2, Format::text);
    FAIL("expected an error");
  } catch (const hsf::Error& e) {
    CHECK(e.code() == ErrorCode::parity);
  }
  try {
    hsf::cmd_invariants(23, Format::text);
    FAIL("expected an error");
  } catch (const hsf::Error& e) {
    CHECK(e.code() == ErrorCode::range);
  }
}

TEST_CASE("catalog command") {
  nlohmann::json all =
      nlohmann::json::parse(hsf::cmd_catalog(std::nullopt, Format::json).output);
  CHECK(all["results"]["entries"].size() == 24);
  CHECK(all["results"]["coverage"]["complete"] == true);

  nlohmann::json cubic = nlohmann::json::parse(
      hsf::cmd_catalog(std::string("cubic_fourfold_fano"), Format::json).output);
  REQUIRE(cubic["results"]["entries"].size() == 1);
  const auto& entry = cubic["results"]["entries"][0];
  CHECK(entry["components"].size() == 2);
  CHECK(entry["components"][0]["k2"] == 3);
  CHECK(entry["components"][1]["chi"] == 6);
  CHECK(!cubic["results"].contains("coverage"));

  nlohmann::json hilb = nlohmann::json::parse(
      hsf::cmd_catalog(std::string("hilbert_square"), Format::json).output);
  CHECK(hilb["results"]["entries"].size() == 21);

  try {
    hsf::cmd_catalog(std::string("nope"), Format::text);
    FAIL("expected an error");
  } catch (const hsf::Error& e) {
    CHECK(e.code() == ErrorCode::unknown_family);
  }

  std::vector<std::string> csv =
      lines(hsf::cmd_catalog(std::nullopt, Format::csv).output);
  CHECK(csv.size() == 25);
  CHECK(csv[0] == "family,param,t,k2,chi,euler,signature,moduli_dim");
  CHECK(csv[1] == "sextic_double_plane,0,-17,288,37,156,-8,19");
}

TEST_CASE("outputs are byte-stable across runs") {
  for (Format fmt : {Format::text, Format::csv, Format::json}) {
    CHECK(hsf::cmd_table(fmt).output == hsf::cmd_table(fmt).output);
    CHECK(hsf::cmd_catalog(std::nullopt, fmt).output ==
          hsf::cmd_catalog(std::nullopt, fmt).output);
    CHECK(hsf::cmd_verify({1, 2}, 4, fmt).output ==
          hsf::cmd_verify({2, 1}, 4, fmt).output);
  }
}

TEST_CASE("json round-trips idempotently") {
  std::string out = hsf::cmd_catalog(std::nullopt, Format::json).output;
  nlohmann::json j1 = nlohmann::json::parse(out);
  std::string s1 = j1.dump(2);
  nlohmann::json j2 = nlohmann::json::parse(s1);
  CHECK(j2.dump(2) == s1);
}
