#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/fourfold.hpp"

namespace hsf {

enum class Family {
  hilbert_square,
  sextic_double_plane,
  nikulin_curves,
  epw_double_sextic,
  bitangent_surface,
  cubic_fourfold_fano,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// A known component of the fixed surface. Invariants are recorded only
/// where the source gives them; a label-only component marks a split whose
/// invariants are not derivable at this level.
struct ComponentSplit {
  std::string label;
  std::optional<long> k2;
  std::optional<long> chi;

  bool operator==(const ComponentSplit&) const = default;
};

struct CatalogEntry {
  Family family = Family::hilbert_square;
  std::vector<std::pair<std::string, long>> parameters;
  int t = 0;
  FourfoldFixedInvariants invariants;
  std::vector<ComponentSplit> components;
};

/// Hilbert square of a K3 with an antisymplectic involution whose fixed
/// curve has the given Euler number; t = e(Gamma) + 1.
CatalogEntry hilbert_square(int euler_gamma);

/// Double plane branched along a sextic with s ordinary double points,
/// 0 <= s <= 10; t = -17 + 2s.
CatalogEntry sextic_double_plane(int s);

/// K3 with an involution fixing r disjoint rational curves, 1 <= r <= 10;
/// t = 2r + 1.
CatalogEntry nikulin_curves(int r);

/// Double EPW sextic with its covering involution; t = -19, connected fixed
/// surface with (K^2, chi) = (360, 46).
CatalogEntry epw_double_sextic();

/// Surface of bitangents to a quartic surface: the specialization of the
/// EPW case, with identical invariants.
CatalogEntry bitangent_surface();

/// Fano variety of lines on an invariant cubic fourfold; t = -7, fixed
/// surface a disjoint cubic surface (3, 1) and Fano surface (45, 6).
CatalogEntry cubic_fourfold_fano();

/// Every entry with a canonical parameter sweep: 11 sextic double planes,
/// 10 Nikulin curve configurations, the EPW sextic, its bitangent twin, and
/// the cubic fourfold Fano example (24 entries). The Hilbert-square family
/// needs a curve Euler number and is reachable only by name.
std::vector<CatalogEntry> full_catalog();

struct CoverageOptions {
  bool include_sextic = true;
  bool include_nikulin = true;
  bool include_epw = true;
};

struct CoverageReport {
  std::vector<int> realized;  // ascending
  std::vector<int> missing;   // admissible but not realized
  std::vector<int> surplus;   // realized but not admissible (always empty)
  bool complete = false;
};

/// Checks that the sextic, Nikulin and EPW constructions together realize
/// every admissible trace; options ablate individual constructions.
CoverageReport trace_coverage(CoverageOptions opts = {});

}  // namespace hsf
