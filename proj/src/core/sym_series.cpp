#include "core/sym_series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "core/error.hpp"

namespace hsf {

namespace {

int key_degree(const SymSeries::Key& k) {
  return std::accumulate(k.begin(), k.end(), 0);
}

bool weakly_decreasing(const SymSeries::Key& k) {
  return std::is_sorted(k.begin(), k.end(), std::greater<int>());
}

void require_same_roots(const SymSeries& a, const SymSeries& b) {
  if (a.num_roots() != b.num_roots())
    throw Error(ErrorCode::argument, "mismatched root counts");
}

}  // namespace

SymSeries::SymSeries(int num_roots, int trunc_degree)
    : num_roots_(num_roots), trunc_(trunc_degree) {
  if (num_roots < 1) throw Error(ErrorCode::argument, "need at least one root");
  if (trunc_degree < 0)
    throw Error(ErrorCode::argument, "truncation degree must be >= 0");
}

SymSeries SymSeries::constant(int num_roots, int trunc_degree,
                              const Rational& c) {
  SymSeries s(num_roots, trunc_degree);
  s.add_term(Key(static_cast<size_t>(num_roots), 0), c);
  return s;
}

SymSeries SymSeries::elementary(int num_roots, int trunc_degree, int k) {
  if (k < 1 || k > num_roots)
    throw Error(ErrorCode::argument, "elementary index out of range");
  SymSeries s(num_roots, trunc_degree);
  Key key(static_cast<size_t>(num_roots), 0);
  std::fill(key.begin(), key.begin() + k, 1);
  s.add_term(key, Rational(1));
  return s;
}

Rational SymSeries::coeff(Key key) const {
  std::sort(key.begin(), key.end(), std::greater<int>());
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymSeries::add_term(Key key, const Rational& c) {
  if (static_cast<int>(key.size()) != num_roots_)
    throw Error(ErrorCode::argument, "exponent vector has wrong length");
  if (c == 0) return;
  std::sort(key.begin(), key.end(), std::greater<int>());
  if (key_degree(key) > trunc_) return;
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::map<SymSeries::Key, Rational> SymSeries::expanded() const {
  std::map<Key, Rational> dense;
  for (const auto& [rep, c] : terms_) {
    Key perm = rep;
    std::sort(perm.begin(), perm.end());
    do {
      dense.emplace(perm, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return dense;
}

SymSeries SymSeries::reciprocal() const {
  Rational a0 = coeff(Key(static_cast<size_t>(num_roots_), 0));
  if (a0 == 0)
    throw Error(ErrorCode::argument,
                "reciprocal of a series with zero constant term");
  std::vector<SymSeries> a_parts;
  a_parts.reserve(static_cast<size_t>(trunc_) + 1);
  for (int k = 0; k <= trunc_; ++k) a_parts.push_back(homogeneous_part(k));

  std::vector<SymSeries> b_parts;
  b_parts.push_back(constant(num_roots_, trunc_, Rational(1) / a0));
  SymSeries result = b_parts[0];
  for (int k = 1; k <= trunc_; ++k) {
    SymSeries acc(num_roots_, trunc_);
    for (int j = 1; j <= k; ++j)
      acc = acc + a_parts[static_cast<size_t>(j)] * b_parts[static_cast<size_t>(k - j)];
    b_parts.push_back((Rational(-1) / a0) * acc);
    result = result + b_parts.back();
  }
  return result;
}

SymSeries SymSeries::scale_roots(const Rational& c) const {
  SymSeries r(num_roots_, trunc_);
  std::vector<Rational> pow(static_cast<size_t>(trunc_) + 1);
  pow[0] = 1;
  for (int k = 1; k <= trunc_; ++k) pow[static_cast<size_t>(k)] = pow[static_cast<size_t>(k - 1)] * c;
  for (const auto& [key, v] : terms_)
    r.add_term(key, v * pow[static_cast<size_t>(key_degree(key))]);
  return r;
}

SymSeries SymSeries::homogeneous_part(int k) const {
  if (k < 0 || k > trunc_)
    throw Error(ErrorCode::argument, "homogeneous degree out of range");
  SymSeries r(num_roots_, trunc_);
  for (const auto& [key, v] : terms_)
    if (key_degree(key) == k) r.terms_.emplace(key, v);
  return r;
}

SymSeries SymSeries::truncated(int trunc_degree) const {
  if (trunc_degree > trunc_)
    throw Error(ErrorCode::argument, "cannot extend a truncated series");
  SymSeries r(num_roots_, trunc_degree);
  for (const auto& [key, v] : terms_)
    if (key_degree(key) <= trunc_degree) r.terms_.emplace(key, v);
  return r;
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
  require_same_roots(a, b);
  SymSeries r(a.num_roots_, std::min(a.trunc_, b.trunc_));
  for (const auto& [key, v] : a.terms_) r.add_term(key, v);
  for (const auto& [key, v] : b.terms_) r.add_term(key, v);
  return r;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
  return a + (Rational(-1) * b);
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  require_same_roots(a, b);
  SymSeries r(a.num_roots_, std::min(a.trunc_, b.trunc_));
  auto da = a.expanded();
  auto db = b.expanded();
  // The product is symmetric, so its coefficient at a canonical monomial is
  // the full convolution restricted to sums that land on that monomial.
  for (const auto& [ka, ca] : da) {
    int dega = key_degree(ka);
    for (const auto& [kb, cb] : db) {
      if (dega + key_degree(kb) > r.trunc_) continue;
      SymSeries::Key sum(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) sum[i] = ka[i] + kb[i];
      if (!weakly_decreasing(sum)) continue;
      auto [it, inserted] = r.terms_.emplace(std::move(sum), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

SymSeries operator*(const Rational& c, const SymSeries& a) {
  SymSeries r(a.num_roots_, a.trunc_);
  if (c == 0) return r;
  for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
  return r;
}

SymSeries per_root_product(const PowerSeries& f, int num_roots,
                           int trunc_degree) {
  if (num_roots < 1) throw Error(ErrorCode::argument, "need at least one root");
  if (f.trunc_degree() < trunc_degree)
    throw Error(ErrorCode::argument,
                "univariate factor supplied to insufficient degree");
  using Key = SymSeries::Key;
  std::map<Key, Rational> prod;
  prod.emplace(Key(static_cast<size_t>(num_roots), 0), Rational(1));
  for (int i = 0; i < num_roots; ++i) {
    std::map<Key, Rational> next;
    for (const auto& [key, c] : prod) {
      int deg = key_degree(key);
      for (int k = 0; deg + k <= trunc_degree; ++k) {
        if (f.coeff(k) == 0) continue;
        Key nk = key;
        nk[static_cast<size_t>(i)] += k;
        auto [it, inserted] = next.emplace(std::move(nk), c * f.coeff(k));
        if (!inserted) it->second += c * f.coeff(k);
      }
    }
    prod = std::move(next);
  }
  // The full product is symmetric; read off the canonical representatives.
  SymSeries out(num_roots, trunc_degree);
  for (const auto& [key, c] : prod)
    if (weakly_decreasing(key)) out.add_term(key, c);
  return out;
}

SymSeries exp_c1_multiple(const Rational& c, int num_roots, int trunc_degree) {
  SymSeries e1 = SymSeries::elementary(num_roots, trunc_degree, 1);
  SymSeries result = SymSeries::constant(num_roots, trunc_degree, Rational(1));
  SymSeries term = result;
  for (int k = 1; k <= trunc_degree; ++k) {
    term = (c / k) * (term * e1);
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

}  // namespace hsf
