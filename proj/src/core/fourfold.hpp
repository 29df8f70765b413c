#pragma once

#include <vector>

#include "core/genera.hpp"

namespace hsf {

/// Invariant record for the fixed surface of an antisymplectic involution on
/// a b2 = 23 symplectic fourfold, keyed by the trace t of the involution on
/// H^{1,1}. The surface always has signature -8 and A-hat genus 1.
struct FourfoldFixedInvariants {
  int t = 0;
  SurfaceInvariants surface;
  long moduli_dim = 0;  // (21 - t)/2

  bool operator==(const FourfoldFixedInvariants&) const = default;
};

/// One row of the invariant table: a (K^2, chi) pair with the traces that
/// realize it ({t, -t} except for the singleton {21}).
struct CorollaryRow {
  long k2 = 0;
  long chi = 0;
  std::vector<int> traces;  // ascending

  bool operator==(const CorollaryRow&) const = default;
};

/// Closed-form invariants from the trace: k2 = t^2 - 1, chi = (t^2 + 7)/8,
/// euler = (t^2 + 23)/2, moduli_dim = (21 - t)/2. Cross-checked internally
/// against the topological Lefschetz route and Noether completion. Even t
/// and out-of-range t produce distinct error codes.
FourfoldFixedInvariants invariants_from_trace(int t);

/// The 21 odd integers -19, -17, ..., 21, ascending.
std::vector<int> admissible_traces();

/// The 11 distinct (K^2, chi) pairs over all admissible traces, sorted by
/// ascending K^2.
std::vector<CorollaryRow> corollary_table();

}  // namespace hsf
