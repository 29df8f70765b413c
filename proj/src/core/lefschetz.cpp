#include "core/lefschetz.hpp"

#include <string>

#include "core/chern.hpp"
#include "core/error.hpp"
#include "core/genera.hpp"

namespace hsf {

long holomorphic_source_sum(int dim_x) {
  if (dim_x <= 0 || dim_x % 2 != 0)
    throw Error(ErrorCode::parity,
                "dimension must be a positive even integer");
  long sum = 0;
  for (int j = 0; j <= dim_x / 2; ++j) sum += (j % 2 == 0) ? 1 : -1;
  return sum;
}

Rational holomorphic_target_surface(long k2, long euler) {
  SymSeries integrand = todd_class(2, 2) * ch_exterior(2, 2).reciprocal();
  return evaluate_surface(integrand, k2, euler);
}

long sym2_trace(long a, long b) {
  if (a < 0 || b < 0)
    throw Error(ErrorCode::argument, "eigenspace dimensions must be >= 0");
  return a * (a + 1) / 2 + b * (b + 1) / 2 - a * b;
}

InvolutionTrace eigen_split(int t) {
  if ((t % 2 + 2) % 2 == 0)
    throw Error(ErrorCode::parity,
                "trace t = " + std::to_string(t) +
                    " must be odd (forced parity on H^{1,1})");
  if (t < -19 || t > 21)
    throw Error(ErrorCode::range,
                "trace t = " + std::to_string(t) +
                    " outside [-19, 21] (needs a >= 1 and b >= 2)");
  InvolutionTrace tr;
  tr.t = t;
  tr.a = (t + kSecondBetti - 2) / 2;  // (t + 21) / 2
  tr.b = (kSecondBetti + 2 - t) / 2;  // (25 - t) / 2
  return tr;
}

long euler_fixed(int t) {
  InvolutionTrace tr = eigen_split(t);
  // Trace on H^2 is t - 2: the H^{2,0} + H^{0,2} part contributes -2.
  return 2 + 2 * (t - 2) + sym2_trace(tr.a, tr.b);
}

}  // namespace hsf
