#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hsf/hsf.h"

namespace {

struct Result {
  hsf_status status = HSF_ERR_INTERNAL;
  std::string output;
};

Result table(hsf_format fmt) {
  hsf_result* r = nullptr;
  Result out;
  out.status = hsf_run_table(fmt, &r);
  out.output = hsf_result_output(r);
  hsf_result_free(r);
  return out;
}

Result invariants(int t, hsf_format fmt) {
  hsf_result* r = nullptr;
  Result out;
  out.status = hsf_run_invariants(t, fmt, &r);
  out.output = hsf_result_output(r);
  hsf_result_free(r);
  return out;
}

}  // namespace

TEST_CASE("verify through the C API") {
  int roots[] = {1, 2};
  hsf_result* r = nullptr;
  CHECK(hsf_run_verify(roots, 2, 6, HSF_FORMAT_JSON, &r) == HSF_OK);
  nlohmann::json j = nlohmann::json::parse(hsf_result_output(r));
  CHECK(j["command"] == "verify");
  CHECK(j["results"].size() == 5);
  hsf_result_free(r);

  CHECK(hsf_run_verify(roots, 2, -1, HSF_FORMAT_JSON, &r) == HSF_ERR_ARGUMENT);
  hsf_result_free(r);
  CHECK(hsf_run_verify(nullptr, 0, 4, HSF_FORMAT_JSON, &r) ==
        HSF_ERR_ARGUMENT);
  hsf_result_free(r);
}

TEST_CASE("table through the C API") {
  Result csv = table(HSF_FORMAT_CSV);
  CHECK(csv.status == HSF_OK);
  CHECK(csv.output.substr(0, 13) == "k2,chi,traces");
  // Byte-stable across calls.
  CHECK(table(HSF_FORMAT_CSV).output == csv.output);
  CHECK(table(HSF_FORMAT_JSON).status == HSF_OK);
}

TEST_CASE("invariants error codes cross the boundary") {
  CHECK(invariants(-19, HSF_FORMAT_JSON).status == HSF_OK);
  CHECK(invariants(2, HSF_FORMAT_JSON).status == HSF_ERR_PARITY);
  CHECK(invariants(23, HSF_FORMAT_JSON).status == HSF_ERR_RANGE);
  // The diagnostic names the violated constraint.
  CHECK(invariants(2, HSF_FORMAT_JSON).output.find("odd") !=
        std::string::npos);
  CHECK(invariants(23, HSF_FORMAT_JSON).output.find("[-19, 21]") !=
        std::string::npos);
}

TEST_CASE("catalog through the C API") {
  hsf_result* r = nullptr;
  CHECK(hsf_run_catalog(nullptr, HSF_FORMAT_JSON, &r) == HSF_OK);
  nlohmann::json j = nlohmann::json::parse(hsf_result_output(r));
  CHECK(j["results"]["entries"].size() == 24);
  hsf_result_free(r);

  CHECK(hsf_run_catalog("epw_double_sextic", HSF_FORMAT_CSV, &r) == HSF_OK);
  hsf_result_free(r);

  CHECK(hsf_run_catalog("nope", HSF_FORMAT_TEXT, &r) ==
        HSF_ERR_UNKNOWN_FAMILY);
  hsf_result_free(r);
}

TEST_CASE("status messages") {
  CHECK(std::string(hsf_status_message(HSF_OK)) == "ok");
  CHECK(std::string(hsf_status_message(HSF_ERR_PARITY)) ==
        "trace parity violation");
}
