#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "core/error.hpp"
#include "core/fourfold.hpp"
#include "core/lefschetz.hpp"

using hsf::ErrorCode;
using hsf::FourfoldFixedInvariants;

TEST_CASE("invariants_from_trace on the worked examples") {
  FourfoldFixedInvariants epw = hsf::invariants_from_trace(-19);
  CHECK(epw.surface.k2 == 360);
  CHECK(epw.surface.chi == 46);
  CHECK(epw.surface.euler == 192);
  CHECK(epw.moduli_dim == 20);

  FourfoldFixedInvariants one = hsf::invariants_from_trace(1);
  CHECK(one.surface.k2 == 0);
  CHECK(one.surface.chi == 1);
  CHECK(one.surface.euler == 12);
  CHECK(one.moduli_dim == 10);

  FourfoldFixedInvariants cubic = hsf::invariants_from_trace(-7);
  CHECK(cubic.surface.k2 == 48);
  CHECK(cubic.surface.chi == 7);
  CHECK(cubic.surface.euler == 36);
  CHECK(cubic.moduli_dim == 14);
}

TEST_CASE("closed forms and constraints over all admissible traces") {
  for (int t : hsf::admissible_traces()) {
    FourfoldFixedInvariants inv = hsf::invariants_from_trace(t);
    long tt = static_cast<long>(t) * t;
    CHECK(inv.surface.k2 == tt - 1);
    CHECK((tt + 7) % 8 == 0);
    CHECK(inv.surface.chi == (tt + 7) / 8);
    CHECK(inv.surface.euler == (tt + 23) / 2);
    CHECK(inv.surface.signature == -8);
    CHECK(inv.surface.k2 - 8 * inv.surface.chi == -8);
    CHECK(inv.surface.k2 - 2 * inv.surface.euler == -24);
    CHECK(inv.surface.ahat == 1);
    CHECK(inv.moduli_dim == (21 - t) / 2);
    CHECK(inv.moduli_dim >= 0);
    CHECK(inv.moduli_dim <= 20);
    CHECK(inv.surface.euler == hsf::euler_fixed(t));
  }
}

TEST_CASE("parity and range produce distinct error codes") {
  try {
    hsf::invariants_from_trace(2);
    FAIL("expected an error");
  } catch (const hsf::Error& e) {
    CHECK(e.code() == ErrorCode::parity);
  }
  try {
    hsf::invariants_from_trace(23);
    FAIL("expected an error");
  } catch (const hsf::Error& e) {
    CHECK(e.code() == ErrorCode::range);
  }
}

TEST_CASE("admissible_traces") {
  std::vector<int> ts = hsf::admissible_traces();
  CHECK(ts.size() == 21);
  CHECK(ts.front() == -19);
  CHECK(ts.back() == 21);
  for (int t : ts) CHECK((t % 2 != 0));
}

TEST_CASE("corollary table") {
  std::vector<hsf::CorollaryRow> rows = hsf::corollary_table();
  std::vector<std::pair<long, long>> expected = {
      {0, 1},    {8, 2},    {24, 4},   {48, 7},   {80, 11},  {120, 16},
      {168, 22}, {224, 29}, {288, 37}, {360, 46}, {440, 56}};
  REQUIRE(rows.size() == expected.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].k2 == expected[i].first);
    CHECK(rows[i].chi == expected[i].second);
    if (i > 0) CHECK(rows[i].k2 > rows[i - 1].k2);
  }
}

TEST_CASE("table fibers are {t, -t} except the singleton {21}") {
  for (const hsf::CorollaryRow& row : hsf::corollary_table()) {
    if (row.k2 == 440) {
      CHECK(row.traces == std::vector<int>{21});
    } else {
      REQUIRE(row.traces.size() == 2);
      CHECK(row.traces[0] == -row.traces[1]);
    }
  }
}

TEST_CASE("moduli dimension is maximal exactly at t = -19") {
  std::map<int, long> dims;
  for (int t : hsf::admissible_traces())
    dims[t] = hsf::invariants_from_trace(t).moduli_dim;
  CHECK(dims[-19] == 20);
  for (const auto& [t, dim] : dims)
    if (t != -19) CHECK(dim < 20);
}
