#include "core/genera.hpp"

#include "core/chern.hpp"
#include "core/error.hpp"

namespace hsf {

SymSeries todd_class(int num_roots, int trunc_degree) {
  return per_root_product(PowerSeries::todd_factor(trunc_degree), num_roots,
                          trunc_degree);
}

SymSeries ch_exterior(int num_roots, int trunc_degree) {
  return per_root_product(PowerSeries::one_plus_exp(trunc_degree), num_roots,
                          trunc_degree);
}

SymSeries ahat_integrand(int num_roots, int trunc_degree) {
  return todd_class(num_roots, trunc_degree) *
         exp_c1_multiple(Rational(-1, 2), num_roots, trunc_degree);
}

Rational ahat_surface(long k2, long euler) {
  return evaluate_surface(ahat_integrand(2, 2), k2, euler);
}

SurfaceInvariants complete_invariants(std::optional<long> k2,
                                      std::optional<long> chi,
                                      std::optional<long> euler) {
  int given = (k2 ? 1 : 0) + (chi ? 1 : 0) + (euler ? 1 : 0);
  if (given != 2)
    throw Error(ErrorCode::argument,
                "exactly two of k2, chi, euler must be given");
  SurfaceInvariants s;
  if (k2 && chi) {
    s.k2 = *k2;
    s.chi = *chi;
    s.euler = 12 * s.chi - s.k2;  // Noether
  } else if (k2 && euler) {
    long sum = *k2 + *euler;
    if (sum % 12 != 0)
      throw Error(ErrorCode::argument,
                  "inconsistent surface data: chi = (k2 + e)/12 is not an "
                  "integer");
    s.k2 = *k2;
    s.euler = *euler;
    s.chi = sum / 12;
  } else {
    s.chi = *chi;
    s.euler = *euler;
    s.k2 = 12 * s.chi - s.euler;
  }
  s.signature = s.k2 - 8 * s.chi;
  s.ahat = Rational(-s.signature, 8);
  return s;
}

}  // namespace hsf
