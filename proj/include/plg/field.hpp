#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plg/poly.hpp"

namespace plg {

class FactorContext;

// Shared arithmetic context: the variable list of F = Q(v1,...,vm), an
// optional cyclotomic extension Q(zeta_N), and the multiplicative factor
// base.  Variables are ordered as registered; the cyclotomic generator,
// when present, is the last variable.
class FieldCtx {
 public:
  explicit FieldCtx(std::vector<std::string> vars, unsigned cyclo_N = 1);
  ~FieldCtx();

  size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> var_index(const std::string& name) const;
  unsigned cyclo_N() const { return cyclo_N_; }
  bool has_zeta() const { return zvar_ >= 0; }
  size_t zeta_index() const { return (size_t)zvar_; }
  const Poly& phi() const { return phi_; }

  // Reduce exponents of the cyclotomic generator below deg(Phi_N).
  Poly reduce(Poly p) const;

  FactorContext& factors() const { return *factors_; }

 private:
  std::vector<std::string> names_;
  unsigned cyclo_N_ = 1;
  int zvar_ = -1;
  Poly phi_;
  std::unique_ptr<FactorContext> factors_;
};

// Cyclotomic polynomial Phi_N as a univariate exponent/coefficient list.
std::vector<Rat> cyclotomic_coeffs(unsigned N);

// Element of F = Q(zeta_N)(v1,...,vm) in canonical form: den != 0,
// gcd(num, den) = 1, den free of the cyclotomic generator with leading
// coefficient 1.  Equality is structural.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, const Rat& q)
      : ctx_(ctx), num_(ctx->nvars(), q), den_(ctx->nvars(), Rat(1)) {}
  static FieldElem make(const FieldCtx* ctx, Poly num, Poly den);
  static FieldElem variable(const FieldCtx* ctx, size_t idx);
  static FieldElem zeta(const FieldCtx* ctx, unsigned k = 1);

  const FieldCtx* ctx() const { return ctx_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rat rational_value() const { return num_.constant_value() / den_.constant_value(); }
  bool depends_on(size_t var) const { return num_.depends_on(var) || den_.depends_on(var); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // throws on division by zero
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;
  bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Global total order: (tdeg num, tdeg den, term sequence of num, of den).
  std::strong_ordering cmp(const FieldElem& o) const;
  bool operator<(const FieldElem& o) const { return cmp(o) < 0; }

  // f with `var` replaced by value (value must not depend on var).
  FieldElem substitute(size_t var, const FieldElem& value) const;

  // Is c^(lcm(2,N)) == 1, i.e. a root of unity of the field?
  bool is_torsion_unit() const;

  std::string str() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  Poly num_, den_;
};

// Discrete valuation nu_{var -> center} on F(var); center == nullopt is the
// place at infinity (uniformizer 1/var).  The center must not involve var.
struct Valuation {
  size_t var = 0;
  std::optional<FieldElem> center;
  bool at_infinity() const { return !center.has_value(); }
};

inline constexpr long VAL_INF = LONG_MAX;  // nu(0)

long valuation_of(const FieldElem& f, const Valuation& nu);

// Image of f in the residue field; requires valuation_of(f, nu) >= 0.
FieldElem residue(const FieldElem& f, const Valuation& nu);

// f / pi^{nu(f)} followed by residue: the leading coefficient of f at the
// place, a nonzero element of the residue field (f must be nonzero).
FieldElem unit_residue(const FieldElem& f, const Valuation& nu);

}  // namespace plg
