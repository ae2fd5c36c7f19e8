#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plg/rational.hpp"

namespace plg {

// Exponent vector; all monomials of a context share the same arity.
using Mono = std::vector<uint32_t>;

inline uint32_t mono_total_degree(const Mono& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

// Graded lexicographic order, variable 0 most significant.
// This is the single global monomial order of the whole library.
inline std::strong_ordering mono_cmp(const Mono& a, const Mono& b) {
  uint32_t da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da <=> db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

// Sparse multivariate polynomial over Q. Terms are stored with the leading
// monomial first; the zero polynomial is the empty map.
class Poly {
 public:
  using Terms = std::map<Mono, Rat, MonoGreater>;

  Poly() = default;
  Poly(size_t nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_[Mono(nvars, 0)] = c;
  }
  static Poly variable(size_t nvars, size_t idx, uint32_t deg = 1) {
    Poly p;
    p.nvars_ = nvars;
    Mono m(nvars, 0);
    m[idx] = deg;
    p.terms_[m] = Rat(1);
    return p;
  }

  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_total_degree(terms_.begin()->first) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
  }
  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return (int)mono_total_degree(terms_.begin()->first);
  }
  int degree_in(size_t var) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, (int)m[var]);
    return d;
  }
  bool depends_on(size_t var) const {
    for (auto& [m, c] : terms_)
      if (m[var] > 0) return true;
    return false;
  }
  const Rat& leading_coeff() const;  // of the leading monomial; poly must be nonzero
  const Mono& leading_mono() const;

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly pow(uint32_t e) const;
  Poly derivative(size_t var) const;

  // Coefficient of var^k, as a polynomial in the remaining variables
  // (the slot for `var` is kept with exponent 0).
  Poly coeff_of(size_t var, uint32_t k) const;

  // f(var -> n/d): returns (numerator, d^{deg_var f}).
  std::pair<Poly, Poly> subst_fraction(size_t var, const Poly& n, const Poly& d) const;

  // Exact division; nullopt if o does not divide *this.
  std::optional<Poly> divide_exact(const Poly& o) const;

  // Deterministic total order used for canonical forms (term-sequence lex).
  std::strong_ordering cmp(const Poly& o) const;

  std::string str(std::span<const std::string> names) const;

 private:
  size_t nvars_ = 0;
  Terms terms_;
};

// Monic gcd (leading coefficient 1); gcd(0,0)=0.  Subresultant PRS with
// content extraction, recursing on the variable set.
Poly poly_gcd(const Poly& a, const Poly& b);

// lc(g,var)^(deg f - deg g + 1) * f = q*g + r with deg_var r < deg_var g.
std::pair<Poly, Poly> pseudo_divide(const Poly& f, const Poly& g, size_t var);

Poly poly_content(const Poly& f, size_t var);   // gcd of var-coefficients
Poly poly_primitive(const Poly& f, size_t var); // f / content

}  // namespace plg
