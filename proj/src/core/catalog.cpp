#include "core/catalog.hpp"

#include <algorithm>
#include <set>

#include "core/error.hpp"

namespace hsf {

std::string family_name(Family f) {
  switch (f) {
    case Family::hilbert_square: return "hilbert_square";
    case Family::sextic_double_plane: return "sextic_double_plane";
    case Family::nikulin_curves: return "nikulin_curves";
    case Family::epw_double_sextic: return "epw_double_sextic";
    case Family::bitangent_surface: return "bitangent_surface";
    case Family::cubic_fourfold_fano: return "cubic_fourfold_fano";
  }
  throw Error(ErrorCode::internal, "unhandled family");
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f :
       {Family::hilbert_square, Family::sextic_double_plane,
        Family::nikulin_curves, Family::epw_double_sextic,
        Family::bitangent_surface, Family::cubic_fourfold_fano})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

CatalogEntry hilbert_square(int euler_gamma) {
  CatalogEntry e;
  e.family = Family::hilbert_square;
  e.parameters = {{"euler_gamma", euler_gamma}};
  e.t = euler_gamma + 1;
  e.invariants = invariants_from_trace(e.t);
  // The fixed surface splits as the symmetric square of the fixed curve and
  // the quotient K3; no per-component invariants are recorded.
  e.components = {{"sym2_fixed_curve", std::nullopt, std::nullopt},
                  {"k3_quotient", std::nullopt, std::nullopt}};
  return e;
}

CatalogEntry sextic_double_plane(int s) {
  if (s < 0 || s > 10)
    throw Error(ErrorCode::range,
                "double-point count s must satisfy 0 <= s <= 10");
  CatalogEntry e;
  e.family = Family::sextic_double_plane;
  e.parameters = {{"s", s}};
  e.t = -17 + 2 * s;
  e.invariants = invariants_from_trace(e.t);
  return e;
}

CatalogEntry nikulin_curves(int r) {
  if (r < 1 || r > 10)
    throw Error(ErrorCode::range,
                "rational-curve count r must satisfy 1 <= r <= 10");
  CatalogEntry e;
  e.family = Family::nikulin_curves;
  e.parameters = {{"r", r}};
  e.t = 2 * r + 1;
  e.invariants = invariants_from_trace(e.t);
  return e;
}

CatalogEntry epw_double_sextic() {
  CatalogEntry e;
  e.family = Family::epw_double_sextic;
  e.t = -19;
  e.invariants = invariants_from_trace(e.t);
  e.components = {{"fixed_surface", 360, 46}};  // connected
  return e;
}

CatalogEntry bitangent_surface() {
  CatalogEntry e = epw_double_sextic();
  e.family = Family::bitangent_surface;
  e.components = {{"bitangent_surface", 360, 46}};
  return e;
}

CatalogEntry cubic_fourfold_fano() {
  CatalogEntry e;
  e.family = Family::cubic_fourfold_fano;
  e.t = -7;
  e.invariants = invariants_from_trace(e.t);
  e.components = {{"cubic_surface", 3, 1}, {"fano_surface", 45, 6}};
  return e;
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  for (int s = 0; s <= 10; ++s) out.push_back(sextic_double_plane(s));
  for (int r = 1; r <= 10; ++r) out.push_back(nikulin_curves(r));
  out.push_back(epw_double_sextic());
  out.push_back(bitangent_surface());
  out.push_back(cubic_fourfold_fano());
  return out;
}

CoverageReport trace_coverage(CoverageOptions opts) {
  std::set<int> realized;
  if (opts.include_sextic)
    for (int s = 0; s <= 10; ++s) realized.insert(sextic_double_plane(s).t);
  if (opts.include_nikulin)
    for (int r = 1; r <= 10; ++r) realized.insert(nikulin_curves(r).t);
  if (opts.include_epw) realized.insert(epw_double_sextic().t);

  std::set<int> admissible;
  for (int t : admissible_traces()) admissible.insert(t);

  CoverageReport rep;
  rep.realized.assign(realized.begin(), realized.end());
  std::set_difference(admissible.begin(), admissible.end(), realized.begin(),
                      realized.end(), std::back_inserter(rep.missing));
  std::set_difference(realized.begin(), realized.end(), admissible.begin(),
                      admissible.end(), std::back_inserter(rep.surplus));
  rep.complete = rep.missing.empty() && rep.surplus.empty();
  return rep;
}

}  // namespace hsf
