#pragma once

#include <map>
#include <vector>

#include "core/power_series.hpp"
#include "core/rational.hpp"

namespace hsf {

/// Truncated symmetric power series in m formal Chern roots.
///
/// Terms are keyed by the canonical (weakly decreasing) exponent vector of
/// their symmetric orbit; the stored coefficient is the common coefficient of
/// every monomial in the orbit. No stored key exceeds the truncation degree
/// and no stored coefficient is zero. Arithmetic between two series requires
/// equal root counts and truncates to the smaller degree.
class SymSeries {
 public:
  using Key = std::vector<int>;  // length num_roots, weakly decreasing

  SymSeries(int num_roots, int trunc_degree);

  static SymSeries constant(int num_roots, int trunc_degree, const Rational& c);
  /// The elementary symmetric polynomial e_k of the roots.
  static SymSeries elementary(int num_roots, int trunc_degree, int k);

  int num_roots() const { return num_roots_; }
  int trunc_degree() const { return trunc_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the orbit of the given exponent vector (sorted first).
  Rational coeff(Key key) const;
  /// Adds c to the orbit coefficient of the given exponent vector.
  void add_term(Key key, const Rational& c);

  SymSeries reciprocal() const;
  SymSeries scale_roots(const Rational& c) const;
  SymSeries homogeneous_part(int k) const;
  /// Re-truncates to a (not larger) degree.
  SymSeries truncated(int trunc_degree) const;

  friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator-(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const Rational& c, const SymSeries& a);

  bool operator==(const SymSeries&) const = default;

 private:
  /// Expands orbit representatives to a dense monomial map.
  std::map<Key, Rational> expanded() const;

  int num_roots_;
  int trunc_;
  std::map<Key, Rational> terms_;
};

/// The symmetrized product of one univariate factor per root:
/// prod_i f(gamma_i), truncated at the given degree. f must be supplied to
/// degree at least trunc_degree.
SymSeries per_root_product(const PowerSeries& f, int num_roots,
                           int trunc_degree);

/// e^{c e_1} truncated at the given degree.
SymSeries exp_c1_multiple(const Rational& c, int num_roots, int trunc_degree);

}  // namespace hsf
