#pragma once

#include <optional>

#include "core/rational.hpp"
#include "core/sym_series.hpp"

namespace hsf {

/// Invariants of a (possibly disconnected) compact complex surface, all
/// summed over components. The three integer invariants are tied together by
/// Noether's formula euler = 12*chi - k2; the signature equals both
/// k2 - 8*chi and (k2 - 2*euler)/3, and the A-hat genus is -signature/8.
struct SurfaceInvariants {
  long k2 = 0;
  long chi = 0;
  long euler = 0;
  long signature = 0;
  Rational ahat = 0;

  bool operator==(const SurfaceInvariants&) const = default;
};

/// Todd series prod_i gamma_i / (1 - e^{-gamma_i}) for m roots, to degree d.
SymSeries todd_class(int num_roots, int trunc_degree);

/// Chern character of the full exterior algebra: prod_i (1 + e^{gamma_i}).
SymSeries ch_exterior(int num_roots, int trunc_degree);

/// Td * e^{-c1/2}, the integrand of the A-hat genus.
SymSeries ahat_integrand(int num_roots, int trunc_degree);

/// A-hat genus of a surface with the given K^2 and Euler number, computed by
/// series evaluation; equals (2*euler - k2)/24 in closed form.
Rational ahat_surface(long k2, long euler);

/// Completes a surface invariant record from any two of {k2, chi, euler};
/// rejects data whose completion would make chi non-integral.
SurfaceInvariants complete_invariants(std::optional<long> k2,
                                      std::optional<long> chi,
                                      std::optional<long> euler);

}  // namespace hsf
