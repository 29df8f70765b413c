#pragma once

#include <vector>

#include "core/rational.hpp"

namespace hsf {

/// Truncated univariate power series with exact rational coefficients.
///
/// A series of truncation degree d stores coefficients of 1, x, ..., x^d.
/// Arithmetic between two series truncates to the smaller degree.
class PowerSeries {
 public:
  explicit PowerSeries(int trunc_degree);

  static PowerSeries constant(const Rational& c, int trunc_degree);
  /// e^{c x}
  static PowerSeries exponential(const Rational& c, int trunc_degree);
  /// x / (1 - e^{-x}), built by inverting the unit series (1 - e^{-x}) / x.
  static PowerSeries todd_factor(int trunc_degree);
  /// 1 + e^{x}
  static PowerSeries one_plus_exp(int trunc_degree);

  int trunc_degree() const { return trunc_; }
  const Rational& coeff(int k) const;
  void set_coeff(int k, const Rational& v);

  /// Multiplicative inverse up to the truncation degree; the constant term
  /// must be nonzero.
  PowerSeries reciprocal() const;
  /// Substitution x -> c x: the degree-k coefficient picks up a factor c^k.
  PowerSeries scale_var(const Rational& c) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

  bool operator==(const PowerSeries&) const = default;

 private:
  int trunc_;
  std::vector<Rational> coeffs_;  // size trunc_ + 1
};

}  // namespace hsf
