#include "core/fourfold.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"
#include "core/lefschetz.hpp"

namespace hsf {

FourfoldFixedInvariants invariants_from_trace(int t) {
  eigen_split(t);  // parity and range checks

  FourfoldFixedInvariants inv;
  inv.t = t;
  long tt = static_cast<long>(t) * t;
  inv.surface = complete_invariants(tt - 1, (tt + 7) / 8, std::nullopt);
  inv.moduli_dim = (21 - t) / 2;

  // The closed forms must agree with the trace route and with Noether.
  if (inv.surface.euler != (tt + 23) / 2 ||
      inv.surface.euler != euler_fixed(t) || inv.surface.signature != -8 ||
      inv.surface.ahat != 1)
    throw Error(ErrorCode::internal,
                "closed-form invariants disagree with the trace route");
  return inv;
}

std::vector<int> admissible_traces() {
  std::vector<int> ts;
  for (int t = -19; t <= 21; t += 2) ts.push_back(t);
  return ts;
}

std::vector<CorollaryRow> corollary_table() {
  std::map<std::pair<long, long>, std::vector<int>> rows;
  for (int t : admissible_traces()) {
    FourfoldFixedInvariants inv = invariants_from_trace(t);
    rows[{inv.surface.k2, inv.surface.chi}].push_back(t);
  }
  std::vector<CorollaryRow> out;
  for (auto& [pair, traces] : rows) {
    std::sort(traces.begin(), traces.end());
    out.push_back({pair.first, pair.second, traces});
  }
  std::sort(out.begin(), out.end(),
            [](const CorollaryRow& a, const CorollaryRow& b) {
              return a.k2 < b.k2;
            });
  return out;
}

}  // namespace hsf
