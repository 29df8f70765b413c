#include "core/chern.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace hsf {

ChernPolynomial::ChernPolynomial(int num_roots) : num_roots_(num_roots) {
  if (num_roots < 1) throw Error(ErrorCode::argument, "need at least one root");
}

Rational ChernPolynomial::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChernPolynomial::add_term(const Key& key, const Rational& c) {
  if (static_cast<int>(key.size()) != num_roots_)
    throw Error(ErrorCode::argument, "exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ChernPolynomial::weighted_degree(const Key& key) {
  int deg = 0;
  for (size_t k = 0; k < key.size(); ++k)
    deg += static_cast<int>(k + 1) * key[k];
  return deg;
}

std::vector<std::pair<ChernPolynomial::Key, Rational>>
ChernPolynomial::sorted_terms() const {
  std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = weighted_degree(a.first), db = weighted_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;  // descending lex: e1-heavy monomials first
  });
  return out;
}

std::string ChernPolynomial::monomial_str(const Key& key) {
  std::string s;
  for (size_t k = 0; k < key.size(); ++k) {
    if (key[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(k + 1);
    if (key[k] > 1) s += "^" + std::to_string(key[k]);
  }
  return s.empty() ? "1" : s;
}

std::string ChernPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : sorted_terms()) {
    if (!s.empty()) s += " + ";
    std::string mono = monomial_str(key);
    if (mono == "1") {
      s += rational_str(c);
    } else if (c == 1) {
      s += mono;
    } else if (c == -1) {
      s += "-" + mono;
    } else {
      s += rational_str(c) + "*" + mono;
    }
  }
  return s;
}

namespace {

// prod_k e_k^{mu_k} as a series in the roots; homogeneous of the weighted
// degree of mu, so the truncation is exact as long as that degree fits.
SymSeries expand_e_monomial(const ChernPolynomial::Key& mu, int num_roots,
                            int trunc_degree) {
  SymSeries prod = SymSeries::constant(num_roots, trunc_degree, Rational(1));
  for (size_t k = 0; k < mu.size(); ++k)
    for (int rep = 0; rep < mu[k]; ++rep)
      prod = prod * SymSeries::elementary(num_roots, trunc_degree,
                                          static_cast<int>(k + 1));
  return prod;
}

}  // namespace

ChernPolynomial to_chern_basis(const SymSeries& a) {
  const int m = a.num_roots();
  ChernPolynomial out(m);
  SymSeries rem = a;
  // Leading-term elimination: the lex-greatest canonical exponent vector
  // lambda maps to the e-monomial with exponents lambda_k - lambda_{k+1}.
  while (!rem.is_zero()) {
    const auto& [lambda, c] = *rem.terms().rbegin();
    ChernPolynomial::Key mu(static_cast<size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      int next = (k + 1 < m) ? lambda[static_cast<size_t>(k + 1)] : 0;
      mu[static_cast<size_t>(k)] = lambda[static_cast<size_t>(k)] - next;
    }
    out.add_term(mu, c);
    rem = rem - (c * expand_e_monomial(mu, m, a.trunc_degree()));
  }
  return out;
}

SymSeries from_chern_basis(const ChernPolynomial& p, int trunc_degree) {
  SymSeries out(p.num_roots(), trunc_degree);
  for (const auto& [mu, c] : p.terms()) {
    if (ChernPolynomial::weighted_degree(mu) > trunc_degree) continue;
    out = out + c * expand_e_monomial(mu, p.num_roots(), trunc_degree);
  }
  return out;
}

Rational evaluate_surface(const SymSeries& a, long k2, long c2) {
  if (a.num_roots() != 2)
    throw Error(ErrorCode::argument,
                "surface evaluation needs exactly two roots");
  if (a.trunc_degree() < 2)
    throw Error(ErrorCode::argument,
                "surface evaluation needs truncation degree >= 2");
  ChernPolynomial part2 = to_chern_basis(a.homogeneous_part(2));
  Rational alpha = part2.coeff({2, 0});  // e1^2 -> K^2
  Rational beta = part2.coeff({0, 1});   // e2 -> e(F)
  return alpha * k2 + beta * c2;
}

}  // namespace hsf
