#include "core/power_series.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace hsf {

PowerSeries::PowerSeries(int trunc_degree) : trunc_(trunc_degree) {
  if (trunc_degree < 0)
    throw Error(ErrorCode::argument, "truncation degree must be >= 0");
  coeffs_.assign(static_cast<size_t>(trunc_) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, int trunc_degree) {
  PowerSeries s(trunc_degree);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::exponential(const Rational& c, int trunc_degree) {
  PowerSeries s(trunc_degree);
  Rational term(1);
  s.coeffs_[0] = term;
  for (int k = 1; k <= trunc_degree; ++k) {
    term *= c;
    term /= k;
    s.coeffs_[static_cast<size_t>(k)] = term;
  }
  return s;
}

PowerSeries PowerSeries::todd_factor(int trunc_degree) {
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  PowerSeries q(trunc_degree);
  Rational term(1);
  q.coeffs_[0] = term;
  for (int k = 1; k <= trunc_degree; ++k) {
    term *= -1;
    term /= (k + 1);
    q.coeffs_[static_cast<size_t>(k)] = term;
  }
  return q.reciprocal();
}

PowerSeries PowerSeries::one_plus_exp(int trunc_degree) {
  PowerSeries s = exponential(Rational(1), trunc_degree);
  s.coeffs_[0] += 1;
  return s;
}

const Rational& PowerSeries::coeff(int k) const {
  if (k < 0 || k > trunc_)
    throw Error(ErrorCode::argument, "coefficient index out of range");
  return coeffs_[static_cast<size_t>(k)];
}

void PowerSeries::set_coeff(int k, const Rational& v) {
  if (k < 0 || k > trunc_)
    throw Error(ErrorCode::argument, "coefficient index out of range");
  coeffs_[static_cast<size_t>(k)] = v;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw Error(ErrorCode::argument,
                "reciprocal of a series with zero constant term");
  PowerSeries r(trunc_);
  Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int k = 1; k <= trunc_; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j)
      acc += coeffs_[static_cast<size_t>(j)] * r.coeffs_[static_cast<size_t>(k - j)];
    r.coeffs_[static_cast<size_t>(k)] = -inv0 * acc;
  }
  return r;
}

PowerSeries PowerSeries::scale_var(const Rational& c) const {
  PowerSeries r(trunc_);
  Rational pow(1);
  for (int k = 0; k <= trunc_; ++k) {
    r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)] * pow;
    pow *= c;
  }
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.trunc_, b.trunc_));
  for (int k = 0; k <= r.trunc_; ++k)
    r.coeffs_[static_cast<size_t>(k)] =
        a.coeffs_[static_cast<size_t>(k)] + b.coeffs_[static_cast<size_t>(k)];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.trunc_, b.trunc_));
  for (int i = 0; i <= r.trunc_; ++i) {
    if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= r.trunc_; ++j)
      r.coeffs_[static_cast<size_t>(i + j)] +=
          a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
  }
  return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries r(a.trunc_);
  for (int k = 0; k <= r.trunc_; ++k)
    r.coeffs_[static_cast<size_t>(k)] = c * a.coeffs_[static_cast<size_t>(k)];
  return r;
}

}  // namespace hsf
