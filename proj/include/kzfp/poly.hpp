// Copyright 2026 The kzfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KZFP_POLY_HPP
#define KZFP_POLY_HPP

// Sparse multivariate polynomials over an exact coefficient ring.
//
// A polynomial is a sorted vector of (exponent vector, coefficient) terms with
// no zero coefficients. The sort order is graded: ascending total degree, ties
// broken by descending lexicographic order of the exponent vector. Equal
// polynomials therefore have identical term vectors, and serialization is a
// straight walk over the terms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kzfp/error.hpp"
#include "kzfp/ring.hpp"

namespace kzfp {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : m) {
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Result of is_homogeneous. The zero polynomial is homogeneous of every degree.
struct Homogeneity {
  enum class Kind { kNotHomogeneous, kDegree, kAnyDegree };
  Kind kind = Kind::kNotHomogeneous;
  std::uint64_t degree = 0;

  bool homogeneous() const { return kind != Kind::kNotHomogeneous; }
  bool has_degree(std::uint64_t d) const {
    return kind == Kind::kAnyDegree || (kind == Kind::kDegree && degree == d);
  }
};

template <CoefficientRing R>
class SparsePoly {
 public:
  using Ring = R;
  using Coeff = typename R::value_type;

  struct Term {
    Monomial exps;
    Coeff coeff;
  };

  SparsePoly(R ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static SparsePoly constant(R ring, std::size_t nvars, Coeff c) {
    return monomial(std::move(ring), nvars, Monomial(nvars, 0), std::move(c));
  }

  static SparsePoly variable(R ring, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InvalidArgument("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    Coeff one = ring.one();
    return monomial(std::move(ring), nvars, std::move(m), std::move(one));
  }

  static SparsePoly monomial(R ring, std::size_t nvars, Monomial exps, Coeff c) {
    if (exps.size() != nvars) throw StructuralError("exponent vector length differs from nvars");
    SparsePoly f(std::move(ring), nvars);
    if (!f.ring_.is_zero(c)) f.terms_.push_back(Term{std::move(exps), std::move(c)});
    return f;
  }

  /// Builds a polynomial from arbitrary terms: duplicates are merged, zeros
  /// dropped, and the result sorted.
  static SparsePoly from_terms(R ring, std::size_t nvars, std::vector<Term> terms) {
    SparsePoly f(std::move(ring), nvars);
    for (const Term& t : terms) {
      if (t.exps.size() != nvars) throw StructuralError("exponent vector length differs from nvars");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GradedOrder{}(a.exps, b.exps); });
    for (Term& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().exps == t.exps) {
        f.terms_.back().coeff = f.ring_.add(f.terms_.back().coeff, t.coeff);
      } else {
        if (!f.terms_.empty() && f.ring_.is_zero(f.terms_.back().coeff)) f.terms_.pop_back();
        f.terms_.push_back(std::move(t));
      }
    }
    if (!f.terms_.empty() && f.ring_.is_zero(f.terms_.back().coeff)) f.terms_.pop_back();
    return f;
  }

  const R& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return GradedOrder{}(t.exps, key);
    });
    if (it != terms_.end() && it->exps == m) return it->coeff;
    return ring_.zero();
  }

  /// Maximum total degree over the terms; 0 for the zero polynomial.
  std::uint64_t total_degree() const {
    return terms_.empty() ? 0 : kzfp::total_degree(terms_.back().exps);
  }

  Exponent degree_in(std::size_t var) const {
    check_index(var);
    Exponent d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exps[var]);
    return d;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (Term& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  SparsePoly scaled(const Coeff& c) const {
    SparsePoly r(ring_, nvars_);
    if (ring_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      Coeff v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back(Term{t.exps, std::move(v)});
    }
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    return merge(a, b, false);
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    return merge(a, b, true);
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.require_compatible(b);
    if (a.is_zero() || b.is_zero()) return SparsePoly(a.ring_, a.nvars_);
    const R& ring = a.ring_;
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22));
    Monomial m(a.nvars_);
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = s.exps[i] + t.exps[i];
        Coeff c = ring.mul(s.coeff, t.coeff);
        auto [it, inserted] = acc.try_emplace(m, c);
        if (!inserted) it->second = ring.add(it->second, c);
      }
    }
    SparsePoly r(ring, a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [exps, c] : acc) {
      if (!ring.is_zero(c)) r.terms_.push_back(Term{exps, std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return GradedOrder{}(x.exps, y.exps); });
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exps != b.terms_[i].exps ||
          !a.ring_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  void check_index(std::size_t var) const {
    if (var >= nvars_) {
      throw InvalidArgument("variable index " + std::to_string(var) + " out of range for " +
                            std::to_string(nvars_) + " variables");
    }
  }

  void require_compatible(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) {
      throw StructuralError("polynomials have different numbers of variables (" +
                            std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
    }
    if (!(ring_ == o.ring_)) throw StructuralError("polynomials live over different coefficient rings");
  }

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    a.require_compatible(b);
    const R& ring = a.ring_;
    SparsePoly r(ring, a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    GradedOrder less;
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && less(i->exps, j->exps))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || less(j->exps, i->exps)) {
        r.terms_.push_back(Term{j->exps, subtract ? ring.neg(j->coeff) : j->coeff});
        ++j;
      } else {
        Coeff c = subtract ? ring.sub(i->coeff, j->coeff) : ring.add(i->coeff, j->coeff);
        if (!ring.is_zero(c)) r.terms_.push_back(Term{i->exps, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  R ring_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// An ordered tuple of polynomials sharing ring and variable count.
template <CoefficientRing R>
using VectorPoly = std::vector<SparsePoly<R>>;

using FpPoly = SparsePoly<FpRing>;
using FpVector = VectorPoly<FpRing>;
using IntPoly = SparsePoly<IntegerRing>;
using DyadicPoly = SparsePoly<DyadicRing>;

template <CoefficientRing R>
typename R::value_type ring_pow(const R& ring, typename R::value_type base, std::uint64_t e) {
  typename R::value_type result = ring.one();
  while (e > 0) {
    if (e & 1u) result = ring.mul(result, base);
    base = ring.mul(base, base);
    e >>= 1;
  }
  return result;
}

/// f^e by binary exponentiation; f^0 = 1.
template <CoefficientRing R>
SparsePoly<R> pow(const SparsePoly<R>& f, std::uint64_t e) {
  auto result = SparsePoly<R>::constant(f.ring(), f.nvars(), f.ring().one());
  SparsePoly<R> base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Formal partial derivative. Exponents enter as ring scalars, so over F_p the
/// derivative of z^p vanishes.
template <CoefficientRing R>
SparsePoly<R> partial_derivative(const SparsePoly<R>& f, std::size_t var) {
  f.check_index(var);
  const R& ring = f.ring();
  std::vector<typename SparsePoly<R>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.exps[var] == 0) continue;
    auto c = ring.mul(t.coeff, ring.from_int(t.exps[var]));
    if (ring.is_zero(c)) continue;
    Monomial m = t.exps;
    --m[var];
    out.push_back({std::move(m), std::move(c)});
  }
  return SparsePoly<R>::from_terms(ring, f.nvars(), std::move(out));
}

/// The coefficient of var^degree, as a polynomial with exponent 0 in var.
template <CoefficientRing R>
SparsePoly<R> coeff_of_power(const SparsePoly<R>& f, std::size_t var, Exponent degree) {
  f.check_index(var);
  std::vector<typename SparsePoly<R>::Term> out;
  for (const auto& t : f.terms()) {
    if (t.exps[var] != degree) continue;
    Monomial m = t.exps;
    m[var] = 0;
    out.push_back({std::move(m), t.coeff});
  }
  return SparsePoly<R>::from_terms(f.ring(), f.nvars(), std::move(out));
}

/// All coefficients of f viewed as a polynomial in var: entry d is
/// coeff_of_power(f, var, d).
template <CoefficientRing R>
std::vector<SparsePoly<R>> coefficients_in(const SparsePoly<R>& f, std::size_t var) {
  f.check_index(var);
  std::vector<std::vector<typename SparsePoly<R>::Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.exps;
    m[var] = 0;
    buckets[t.exps[var]].push_back({std::move(m), t.coeff});
  }
  std::vector<SparsePoly<R>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(SparsePoly<R>::from_terms(f.ring(), f.nvars(), std::move(b)));
  return out;
}

/// Composition f|_{var := replacement}, evaluated by Horner's rule in var.
template <CoefficientRing R>
SparsePoly<R> substitute(const SparsePoly<R>& f, std::size_t var, const SparsePoly<R>& replacement) {
  f.check_index(var);
  f.require_compatible(replacement);
  if (f.is_zero()) return f;
  const auto coeffs = coefficients_in(f, var);
  SparsePoly<R> result = coeffs.back();
  for (std::size_t d = coeffs.size() - 1; d-- > 0;) {
    result = result * replacement + coeffs[d];
  }
  return result;
}

template <CoefficientRing R>
Homogeneity is_homogeneous(const SparsePoly<R>& f) {
  if (f.is_zero()) return {Homogeneity::Kind::kAnyDegree, 0};
  const auto d = total_degree(f.terms().front().exps);
  // Terms are sorted by degree, so the first and last bound the range.
  if (total_degree(f.terms().back().exps) != d) return {};
  return {Homogeneity::Kind::kDegree, d};
}

/// Re-expresses f in a ring of new_nvars variables, sending variable i to
/// variable mapping[i]. Mapped targets must be distinct.
template <CoefficientRing R>
SparsePoly<R> embed(const SparsePoly<R>& f, std::size_t new_nvars, std::span<const std::size_t> mapping) {
  if (mapping.size() != f.nvars()) throw StructuralError("embedding map has wrong length");
  std::vector<typename SparsePoly<R>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(new_nvars, 0);
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      if (mapping[i] >= new_nvars) throw StructuralError("embedding target out of range");
      if (t.exps[i] != 0 && m[mapping[i]] != 0) throw StructuralError("embedding map is not injective");
      m[mapping[i]] = t.exps[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return SparsePoly<R>::from_terms(f.ring(), new_nvars, std::move(out));
}

/// Removes variable var, which must not occur in f.
template <CoefficientRing R>
SparsePoly<R> drop_variable(const SparsePoly<R>& f, std::size_t var) {
  f.check_index(var);
  std::vector<typename SparsePoly<R>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.exps[var] != 0) throw StructuralError("cannot drop a variable that occurs in the polynomial");
    Monomial m;
    m.reserve(f.nvars() - 1);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var) m.push_back(t.exps[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return SparsePoly<R>::from_terms(f.ring(), f.nvars() - 1, std::move(out));
}

/// Multiplies every exponent by factor (the substitution x_i -> x_i^factor for all i).
template <CoefficientRing R>
SparsePoly<R> inflate_exponents(const SparsePoly<R>& f, Exponent factor) {
  std::vector<typename SparsePoly<R>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.exps;
    for (auto& e : m) e *= factor;
    out.push_back({std::move(m), t.coeff});
  }
  return SparsePoly<R>::from_terms(f.ring(), f.nvars(), std::move(out));
}

/// Evaluates f at a point given as ring values.
template <CoefficientRing R>
typename R::value_type evaluate(const SparsePoly<R>& f, std::span<const typename R::value_type> point) {
  if (point.size() != f.nvars()) throw StructuralError("evaluation point has wrong dimension");
  const R& ring = f.ring();
  auto acc = ring.zero();
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exps[i] != 0) v = ring.mul(v, ring_pow(ring, point[i], t.exps[i]));
    }
    acc = ring.add(acc, v);
  }
  return acc;
}

/// Text form, e.g. "4*z1 + 3*z2 + z1^2*z3". Terms follow the graded order;
/// a coefficient of one is omitted, negative coefficients print as " - ".
template <CoefficientRing R>
std::string to_string(const SparsePoly<R>& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw StructuralError("variable name table has wrong length");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = f.ring().to_string(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

// Vector helpers.

template <CoefficientRing R>
bool is_zero_vector(const VectorPoly<R>& v) {
  return std::all_of(v.begin(), v.end(), [](const SparsePoly<R>& f) { return f.is_zero(); });
}

template <CoefficientRing R>
VectorPoly<R> add(const VectorPoly<R>& a, const VectorPoly<R>& b) {
  if (a.size() != b.size()) throw StructuralError("vector lengths differ");
  VectorPoly<R> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

template <CoefficientRing R>
VectorPoly<R> scale(const VectorPoly<R>& v, const SparsePoly<R>& c) {
  VectorPoly<R> out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(c * f);
  return out;
}

template <CoefficientRing R>
VectorPoly<R> scale(const VectorPoly<R>& v, const typename R::value_type& c) {
  VectorPoly<R> out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(f.scaled(c));
  return out;
}

template <CoefficientRing R>
std::size_t total_terms(const VectorPoly<R>& v) {
  std::size_t n = 0;
  for (const auto& f : v) n += f.size();
  return n;
}

/// Variable name tables used for serialization.
std::vector<std::string> z_names(unsigned points);
std::vector<std::string> tz_names(unsigned points);
std::vector<std::string> lambda_names(unsigned g);

}  // namespace kzfp

#endif  // KZFP_POLY_HPP
