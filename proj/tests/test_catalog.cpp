#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "core/catalog.hpp"
#include "core/error.hpp"

using hsf::CatalogEntry;
using hsf::CoverageOptions;
using hsf::CoverageReport;

TEST_CASE("hilbert_square") {
  CHECK(hsf::hilbert_square(-18).t == -17);
  CHECK(hsf::hilbert_square(0).t == 1);
  CHECK(hsf::hilbert_square(20).t == 21);

  // Component splits are labels only; the source gives no invariants.
  CatalogEntry e = hsf::hilbert_square(0);
  REQUIRE(e.components.size() == 2);
  CHECK(!e.components[0].k2.has_value());
  CHECK(!e.components[1].chi.has_value());

  CHECK_THROWS_AS(hsf::hilbert_square(1), hsf::Error);    // even trace
  CHECK_THROWS_AS(hsf::hilbert_square(22), hsf::Error);   // t = 23
}

TEST_CASE("sextic_double_plane") {
  CHECK(hsf::sextic_double_plane(0).t == -17);
  CHECK(hsf::sextic_double_plane(10).t == 3);
  CHECK_THROWS_AS(hsf::sextic_double_plane(11), hsf::Error);
  CHECK_THROWS_AS(hsf::sextic_double_plane(-1), hsf::Error);
}

TEST_CASE("nikulin_curves") {
  CHECK(hsf::nikulin_curves(1).t == 3);
  CHECK(hsf::nikulin_curves(10).t == 21);
  CHECK_THROWS_AS(hsf::nikulin_curves(0), hsf::Error);
  CHECK_THROWS_AS(hsf::nikulin_curves(11), hsf::Error);
}

TEST_CASE("epw_double_sextic and its bitangent twin") {
  CatalogEntry epw = hsf::epw_double_sextic();
  CHECK(epw.t == -19);
  CHECK(epw.invariants.surface.k2 == 360);
  CHECK(epw.invariants.surface.chi == 46);
  CHECK(epw.invariants.surface.euler == 192);
  CHECK(epw.invariants.moduli_dim == 20);

  CatalogEntry twin = hsf::bitangent_surface();
  CHECK(twin.t == epw.t);
  CHECK(twin.invariants == epw.invariants);
}

TEST_CASE("cubic_fourfold_fano component splits") {
  CatalogEntry e = hsf::cubic_fourfold_fano();
  CHECK(e.t == -7);
  CHECK(e.invariants.surface.k2 == 48);
  CHECK(e.invariants.surface.chi == 7);
  REQUIRE(e.components.size() == 2);
  CHECK(*e.components[0].k2 == 3);
  CHECK(*e.components[0].chi == 1);
  CHECK(*e.components[1].k2 == 45);
  CHECK(*e.components[1].chi == 6);
}

TEST_CASE("entry invariants always match the trace formula") {
  for (const CatalogEntry& e : hsf::full_catalog()) {
    CHECK(e.invariants == hsf::invariants_from_trace(e.t));
    long k2_sum = 0, chi_sum = 0;
    bool any = false;
    for (const auto& c : e.components)
      if (c.k2 && c.chi) {
        any = true;
        k2_sum += *c.k2;
        chi_sum += *c.chi;
      }
    if (any) {
      CHECK(k2_sum == e.invariants.surface.k2);
      CHECK(chi_sum == e.invariants.surface.chi);
    }
  }
}

TEST_CASE("full catalog size and composition") {
  std::vector<CatalogEntry> all = hsf::full_catalog();
  CHECK(all.size() == 24);
  std::map<hsf::Family, int> counts;
  for (const auto& e : all) counts[e.family]++;
  CHECK(counts[hsf::Family::sextic_double_plane] == 11);
  CHECK(counts[hsf::Family::nikulin_curves] == 10);
  CHECK(counts[hsf::Family::epw_double_sextic] == 1);
  CHECK(counts[hsf::Family::bitangent_surface] == 1);
  CHECK(counts[hsf::Family::cubic_fourfold_fano] == 1);
  CHECK(counts[hsf::Family::hilbert_square] == 0);
}

TEST_CASE("family names round-trip") {
  for (hsf::Family f :
       {hsf::Family::hilbert_square, hsf::Family::sextic_double_plane,
        hsf::Family::nikulin_curves, hsf::Family::epw_double_sextic,
        hsf::Family::bitangent_surface, hsf::Family::cubic_fourfold_fano})
    CHECK(hsf::family_from_name(hsf::family_name(f)) == f);
  CHECK(!hsf::family_from_name("k3_cubic").has_value());
}

TEST_CASE("trace coverage is complete") {
  CoverageReport rep = hsf::trace_coverage();
  CHECK(rep.complete);
  CHECK(rep.realized == hsf::admissible_traces());
  CHECK(rep.missing.empty());
  CHECK(rep.surplus.empty());
}

TEST_CASE("coverage ablations locate each construction's contribution") {
  CoverageOptions no_epw;
  no_epw.include_epw = false;
  CoverageReport rep = hsf::trace_coverage(no_epw);
  CHECK(!rep.complete);
  CHECK(rep.missing == std::vector<int>{-19});

  CoverageOptions no_nikulin;
  no_nikulin.include_nikulin = false;
  CoverageReport rep2 = hsf::trace_coverage(no_nikulin);
  CHECK(rep2.missing == std::vector<int>{5, 7, 9, 11, 13, 15, 17, 19, 21});
}
