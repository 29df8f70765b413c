#pragma once

#include "core/rational.hpp"

namespace hsf {

// Second Betti number of the fourfolds considered here; the identification
// Sym^2 H^2 = H^4 underlying the trace formula holds exactly in this case.
inline constexpr int kSecondBetti = 23;

/// Eigenvalue bookkeeping for an antisymplectic involution acting on H^2 of
/// a b2 = 23 fourfold: t is the trace on H^{1,1}, a and b the dimensions of
/// the (+1)- and (-1)-eigenspaces on H^2. Always a + b = 23, a - b = t - 2,
/// a >= 1 and b >= 2.
struct InvolutionTrace {
  int t = 0;
  int a = 0;
  int b = 0;

  bool operator==(const InvolutionTrace&) const = default;
};

/// Alternating trace of the involution on H^*(X, O_X) for an irreducible
/// symplectic X of the given (even) dimension: 1 when dim = 0 mod 4, 0 when
/// dim = 2 mod 4.
long holomorphic_source_sum(int dim_x);

/// Fixed-locus side of the holomorphic Lefschetz formula for a surface:
/// evaluates Td(F) (ch wedge T_F)^{-1} on a surface with the given K^2 and
/// Euler number.
Rational holomorphic_target_surface(long k2, long euler);

/// Trace of the induced involution on Sym^2 of an (a+b)-dimensional space
/// whose eigenvalue +1 has multiplicity a and -1 has multiplicity b.
long sym2_trace(long a, long b);

/// Eigenspace dimensions on H^2 from the trace parameter t; rejects even t
/// and t outside [-19, 21] with distinct error codes.
InvolutionTrace eigen_split(int t);

/// Euler number of the fixed surface via the topological Lefschetz formula:
/// 2 + 2(t-2) + sym2_trace(a, b); equals (t^2 + 23)/2.
long euler_fixed(int t);

}  // namespace hsf
