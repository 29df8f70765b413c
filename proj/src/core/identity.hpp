#pragma once

#include <optional>
#include <string>

#include "core/rational.hpp"

namespace hsf {

/// Location and value of the first coefficient mismatch between the two
/// sides of an identity, in the Chern-class basis.
struct Discrepancy {
  int degree = 0;
  std::string monomial;
  Rational lhs = 0;
  Rational rhs = 0;

  bool operator==(const Discrepancy&) const = default;
};

struct VerificationReport {
  std::string check;
  int num_roots = 0;
  int trunc_degree = 0;
  bool passed = false;
  std::optional<Discrepancy> first_discrepancy;
};

/// Knobs on the product identity, exposed so tests can perturb a single
/// factor and watch the verifier fail. Defaults state the identity as it
/// holds.
struct ProductIdentityOptions {
  bool include_exp_c1 = true;  // the e^{-c1} factor on the right-hand side
  int normalizer_factor = 1;   // normalizer is 2^{-normalizer_factor * m}
  Rational root_scale = 2;     // substitution gamma_i -> root_scale*gamma_i
};

/// Per-root options mirror the product ones for the univariate check.
struct PerRootOptions {
  bool include_exp = true;     // the e^{-gamma} factor
  Rational root_scale = 2;
};

/// Univariate check: gamma / ((1 - e^{-gamma})(1 + e^{gamma})) equals
/// (1/2) e^{-gamma} * 2*gamma / (1 - e^{-2*gamma}), to degree d.
VerificationReport verify_per_root(int trunc_degree, PerRootOptions = {});

/// Product check in m roots: Td * (ch wedge T)^{-1} equals
/// 2^{-m} e^{-c1} * (Td with roots doubled), to degree d.
VerificationReport verify_product(int num_roots, int trunc_degree,
                                  ProductIdentityOptions = {});

/// Degree-m coefficient identity: the top-degree part of the right-hand side
/// above equals the top-degree part of Td * e^{-c1/2}.
VerificationReport verify_top_degree(int num_roots);

}  // namespace hsf
