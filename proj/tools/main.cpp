// Command-line front end; all computation happens behind the C API.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsf/hsf.h"

namespace {

hsf_format parse_format_or_exit(const std::string& name) {
  if (name == "text") return HSF_FORMAT_TEXT;
  if (name == "csv") return HSF_FORMAT_CSV;
  if (name == "json") return HSF_FORMAT_JSON;
  std::fprintf(stderr, "unknown format '%s' (expected text, csv or json)\n",
               name.c_str());
  std::exit(2);
}

// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
int finish(hsf_status status, hsf_result* result) {
  const char* output = hsf_result_output(result);
  if (status == HSF_OK || status == HSF_VERIFY_FAILED) {
    std::fputs(output, stdout);
  } else {
    std::fprintf(stderr, "error: %s", output);
  }
  hsf_result_free(result);
  if (status == HSF_OK) return 0;
  if (status == HSF_VERIFY_FAILED) return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of fixed surfaces of antisymplectic "
               "involutions on symplectic fourfolds"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format: text, csv or json")
      ->capture_default_str();

  std::vector<int> roots = {1, 2, 3, 4};
  int degree = 8;
  CLI::App* verify = app.add_subcommand("verify", "Run the series identity checks");
  verify->add_option("--roots", roots, "Root counts to check")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--degree", degree, "Truncation degree")
      ->capture_default_str();

  app.add_subcommand("table", "The 11-row (K^2, chi) table");

  int trace = 0;
  CLI::App* invariants =
      app.add_subcommand("invariants", "Fixed-surface invariants for a trace");
  invariants->add_option("--trace", trace, "Trace of the involution on H^{1,1}")
      ->required();

  std::string family;
  CLI::App* catalog = app.add_subcommand("catalog", "Example family catalog");
  catalog->add_option("--family", family, "Restrict to one family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  hsf_format fmt = parse_format_or_exit(format);
  hsf_result* result = nullptr;
  hsf_status status = HSF_ERR_ARGUMENT;

  if (verify->parsed()) {
    status = hsf_run_verify(roots.data(), static_cast<int>(roots.size()),
                            degree, fmt, &result);
  } else if (app.get_subcommand("table")->parsed()) {
    status = hsf_run_table(fmt, &result);
  } else if (invariants->parsed()) {
    status = hsf_run_invariants(trace, fmt, &result);
  } else if (catalog->parsed()) {
    status = hsf_run_catalog(family.empty() ? nullptr : family.c_str(), fmt,
                             &result);
  }

  return finish(status, result);
}
