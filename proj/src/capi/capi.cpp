#include "hsf/hsf.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/commands.hpp"
#include "core/error.hpp"

struct hsf_result {
  hsf_status status = HSF_OK;
  std::string output;
};

namespace {

hsf_status status_from(hsf::ErrorCode code) {
  switch (code) {
    case hsf::ErrorCode::argument: return HSF_ERR_ARGUMENT;
    case hsf::ErrorCode::parity: return HSF_ERR_PARITY;
    case hsf::ErrorCode::range: return HSF_ERR_RANGE;
    case hsf::ErrorCode::unknown_family: return HSF_ERR_UNKNOWN_FAMILY;
    case hsf::ErrorCode::internal: return HSF_ERR_INTERNAL;
  }
  return HSF_ERR_INTERNAL;
}

hsf::Format to_format(hsf_format format) {
  switch (format) {
    case HSF_FORMAT_TEXT: return hsf::Format::text;
    case HSF_FORMAT_CSV: return hsf::Format::csv;
    case HSF_FORMAT_JSON: return hsf::Format::json;
  }
  throw hsf::Error(hsf::ErrorCode::argument, "unknown output format");
}

template <typename Fn>
hsf_status run(Fn&& fn, hsf_result** out) {
  if (!out) return HSF_ERR_ARGUMENT;
  *out = nullptr;
  auto result = std::make_unique<hsf_result>();
  try {
    hsf::CommandOutcome outcome = fn();
    result->status = outcome.verify_failed ? HSF_VERIFY_FAILED : HSF_OK;
    result->output = std::move(outcome.output);
  } catch (const hsf::Error& e) {
    result->status = status_from(e.code());
    result->output = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result->status = HSF_ERR_INTERNAL;
    result->output = std::string(e.what()) + "\n";
  }
  hsf_status status = result->status;
  *out = result.release();
  return status;
}

}  // namespace

extern "C" {

hsf_status hsf_run_verify(const int* roots, int num_roots, int degree,
                          hsf_format format, hsf_result** out) {
  return run(
      [&] {
        if (!roots || num_roots <= 0)
          throw hsf::Error(hsf::ErrorCode::argument,
                           "need at least one root count");
        std::vector<int> rs(roots, roots + num_roots);
        return hsf::cmd_verify(std::move(rs), degree, to_format(format));
      },
      out);
}

hsf_status hsf_run_table(hsf_format format, hsf_result** out) {
  return run([&] { return hsf::cmd_table(to_format(format)); }, out);
}

hsf_status hsf_run_invariants(int t, hsf_format format, hsf_result** out) {
  return run([&] { return hsf::cmd_invariants(t, to_format(format)); }, out);
}

hsf_status hsf_run_catalog(const char* family, hsf_format format,
                           hsf_result** out) {
  return run(
      [&] {
        std::optional<std::string> f;
        if (family) f = std::string(family);
        return hsf::cmd_catalog(f, to_format(format));
      },
      out);
}

const char* hsf_result_output(const hsf_result* result) {
  return result ? result->output.c_str() : "";
}

void hsf_result_free(hsf_result* result) { delete result; }

const char* hsf_status_message(hsf_status status) {
  switch (status) {
    case HSF_OK: return "ok";
    case HSF_VERIFY_FAILED: return "verification failed";
    case HSF_ERR_ARGUMENT: return "invalid argument";
    case HSF_ERR_PARITY: return "trace parity violation";
    case HSF_ERR_RANGE: return "value out of range";
    case HSF_ERR_UNKNOWN_FAMILY: return "unknown family";
    case HSF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
