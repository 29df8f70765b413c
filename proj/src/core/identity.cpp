#include "core/identity.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "core/chern.hpp"
#include "core/genera.hpp"
#include "core/sym_series.hpp"

namespace hsf {

namespace {

// First coefficient mismatch between two same-shape series, scanned by
// ascending degree and then canonical Chern-monomial order.
std::optional<Discrepancy> first_discrepancy(const SymSeries& lhs,
                                             const SymSeries& rhs) {
  for (int k = 0; k <= lhs.trunc_degree(); ++k) {
    ChernPolynomial cl = to_chern_basis(lhs.homogeneous_part(k));
    ChernPolynomial cr = to_chern_basis(rhs.homogeneous_part(k));
    if (cl == cr) continue;
    // All monomials of a homogeneous degree-k part share weighted degree k,
    // so display order within the degree is descending lex on exponents.
    std::vector<ChernPolynomial::Key> keys;
    for (const auto& [key, c] : cl.terms()) keys.push_back(key);
    for (const auto& [key, c] : cr.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& key : keys) {
      if (cl.coeff(key) != cr.coeff(key))
        return Discrepancy{k, ChernPolynomial::monomial_str(key),
                           cl.coeff(key), cr.coeff(key)};
    }
  }
  return std::nullopt;
}

VerificationReport make_report(std::string check, int num_roots,
                               int trunc_degree,
                               std::optional<Discrepancy> disc) {
  VerificationReport rep;
  rep.check = std::move(check);
  rep.num_roots = num_roots;
  rep.trunc_degree = trunc_degree;
  rep.first_discrepancy = std::move(disc);
  rep.passed = !rep.first_discrepancy.has_value();
  return rep;
}

Rational pow2_neg(int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r /= 2;
  return r;
}

}  // namespace

VerificationReport verify_per_root(int trunc_degree, PerRootOptions opts) {
  const int d = trunc_degree;
  PowerSeries todd = PowerSeries::todd_factor(d);
  PowerSeries lhs = todd * PowerSeries::one_plus_exp(d).reciprocal();
  PowerSeries rhs = Rational(1, 2) * todd.scale_var(opts.root_scale);
  if (opts.include_exp)
    rhs = rhs * PowerSeries::exponential(Rational(-1), d);

  std::optional<Discrepancy> disc;
  for (int k = 0; k <= d && !disc; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      std::string mono = k == 0 ? "1"
                        : k == 1 ? "e1"
                                 : "e1^" + std::to_string(k);
      disc = Discrepancy{k, mono, lhs.coeff(k), rhs.coeff(k)};
    }
  }
  return make_report("per_root", 1, d, std::move(disc));
}

VerificationReport verify_product(int num_roots, int trunc_degree,
                                  ProductIdentityOptions opts) {
  const int m = num_roots, d = trunc_degree;
  SymSeries todd = todd_class(m, d);
  SymSeries lhs = todd * ch_exterior(m, d).reciprocal();
  SymSeries rhs =
      pow2_neg(opts.normalizer_factor * m) * todd.scale_roots(opts.root_scale);
  if (opts.include_exp_c1) rhs = rhs * exp_c1_multiple(Rational(-1), m, d);
  return make_report("product", m, d, first_discrepancy(lhs, rhs));
}

VerificationReport verify_top_degree(int num_roots) {
  const int m = num_roots;
  SymSeries todd = todd_class(m, m);
  SymSeries lhs = (pow2_neg(m) * todd.scale_roots(Rational(2)) *
                   exp_c1_multiple(Rational(-1), m, m))
                      .homogeneous_part(m);
  SymSeries rhs = ahat_integrand(m, m).homogeneous_part(m);
  return make_report("top_degree", m, m, first_discrepancy(lhs, rhs));
}

}  // namespace hsf
