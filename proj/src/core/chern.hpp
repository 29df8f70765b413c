#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/sym_series.hpp"

namespace hsf {

/// A polynomial in the elementary symmetric generators e_1, ..., e_m of the
/// Chern roots. Keys are exponent vectors over (e_1, ..., e_m); e_k carries
/// weighted degree k, so the representation is unique.
class ChernPolynomial {
 public:
  using Key = std::vector<int>;  // exponents of e_1 .. e_m

  explicit ChernPolynomial(int num_roots);

  int num_roots() const { return num_roots_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Key& key) const;
  void add_term(const Key& key, const Rational& c);

  static int weighted_degree(const Key& key);

  /// Canonical text form: terms sorted by weighted degree, then by exponent
  /// vector in descending lexicographic order. "0" for the zero polynomial.
  std::string to_string() const;

  /// Term list in the canonical display order.
  std::vector<std::pair<Key, Rational>> sorted_terms() const;

  /// Display form of a single e-monomial, e.g. "e1^2*e2"; "1" for the
  /// constant monomial.
  static std::string monomial_str(const Key& key);

  bool operator==(const ChernPolynomial&) const = default;

 private:
  int num_roots_;
  std::map<Key, Rational> terms_;
};

/// Unique expression of a symmetric series in the Chern-class basis.
ChernPolynomial to_chern_basis(const SymSeries& a);

/// Re-expansion of a Chern polynomial into the root monomial basis.
SymSeries from_chern_basis(const ChernPolynomial& p, int trunc_degree);

/// Integration over a surface: writes the degree-2 part of a two-root series
/// as alpha e_1^2 + beta e_2 and returns alpha*k2 + beta*c2.
Rational evaluate_surface(const SymSeries& a, long k2, long c2);

}  // namespace hsf
