#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hsf {

enum class Format { text, csv, json };

/// Throws ErrorCode::argument for anything but "text", "csv", "json".
Format parse_format(const std::string& name);

struct CommandOutcome {
  bool verify_failed = false;  // only ever set by the verify command
  std::string output;
};

/// Runs the identity checks for every requested root count at the given
/// truncation degree: one per-root check, then a product and a top-degree
/// check per root count, in ascending root order.
CommandOutcome cmd_verify(std::vector<int> roots, int degree, Format fmt);

/// The 11-row (K^2, chi) table with realizing traces.
CommandOutcome cmd_table(Format fmt);

/// The full fixed-surface invariant record for one trace value.
CommandOutcome cmd_invariants(int t, Format fmt);

/// Catalog listing, optionally filtered to one family; includes the trace
/// coverage summary when unfiltered (text and json only).
CommandOutcome cmd_catalog(const std::optional<std::string>& family,
                           Format fmt);

}  // namespace hsf
