#include "plg/field.hpp"

#include <cassert>
#include <sstream>

#include "plg/factorbase.hpp"

namespace plg {

std::vector<Rat> cyclotomic_coeffs(unsigned N) {
  // Phi_N via repeated exact division of x^N - 1 by Phi_d, d | N, d < N.
  auto mul = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto divide = [](std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() - b.size() + 1, Rat(0));
    for (size_t k = a.size(); k-- >= b.size();) {
      Rat c = a[k] / b.back();
      q[k - b.size() + 1] = c;
      if (c != 0)
        for (size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= c * b[j];
      if (k == 0) break;
    }
    return q;
  };
  std::vector<std::vector<Rat>> phis(N + 1);
  for (unsigned n = 1; n <= N; ++n) {
    std::vector<Rat> xn(n + 1, Rat(0));
    xn[0] = Rat(-1);
    xn[n] = Rat(1);
    std::vector<Rat> acc{Rat(1)};
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) acc = mul(acc, phis[d]);
    phis[n] = divide(xn, acc);
  }
  return phis[N];
}

FieldCtx::FieldCtx(std::vector<std::string> vars, unsigned cyclo_N)
    : names_(std::move(vars)), cyclo_N_(cyclo_N) {
  if (cyclo_N_ == 0) throw Error("cyclotomic order must be positive");
  if (cyclo_N_ > 2) {
    zvar_ = (int)names_.size();
    names_.push_back("zeta");
    auto coeffs = cyclotomic_coeffs(cyclo_N_);
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      Mono m(names_.size(), 0);
      m[(size_t)zvar_] = (uint32_t)k;
      phi_.add_term(m, coeffs[k]);
    }
  }
  factors_ = std::make_unique<FactorContext>(this);
}

FieldCtx::~FieldCtx() = default;

std::optional<size_t> FieldCtx::var_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Poly FieldCtx::reduce(Poly p) const {
  if (zvar_ < 0) return p;
  size_t z = (size_t)zvar_;
  uint32_t D = (uint32_t)phi_.degree_in(z);
  // Phi_N is monic, so z^D = -(Phi_N - z^D).
  Poly tail;
  for (auto& [m, c] : phi_.terms()) {
    if (m[z] == D) continue;
    tail.add_term(m, -c);
  }
  while (p.degree_in(z) >= (int)D) {
    uint32_t dd = (uint32_t)p.degree_in(z);
    Poly lead = p.coeff_of(z, dd);
    Poly top;
    for (auto& [m, c] : lead.terms()) {
      Mono mm = m;
      mm[z] = dd;
      top.add_term(mm, c);
    }
    p = p - top + lead * tail * Poly::variable(names_.size(), z, dd - D) * Rat(1);
  }
  return p;
}

// --- extended Euclid against Phi in the cyclotomic variable -------------

// Returns (u, r) with u*f = r (mod Phi), r nonzero and free of zeta.
static std::pair<Poly, Poly> cyclo_invert(const FieldCtx* ctx, const Poly& f) {
  size_t z = ctx->zeta_index();
  Poly r0 = ctx->phi(), r1 = f;
  Poly u0(ctx->nvars(), Rat(0)), u1(ctx->nvars(), Rat(1));
  while (r1.degree_in(z) > 0) {
    auto [q, r2] = pseudo_divide(r0, r1, z);
    // scale factor applied to r0 by pseudo-division
    int d0 = r0.degree_in(z), d1 = r1.degree_in(z);
    Poly lc = r1.coeff_of(z, (uint32_t)d1);
    Poly scale = lc.pow((uint32_t)(d0 - d1 + 1));
    Poly u2 = u0 * scale - q * u1;
    r0 = r1;
    u0 = u1;
    r1 = r2;
    u1 = u2;
    if (r1.is_zero()) throw Error("cyclotomic inverse: unexpected common factor");
  }
  return {u1, r1};
}

FieldElem FieldElem::make(const FieldCtx* ctx, Poly num, Poly den) {
  if (den.is_zero()) throw Error("division by zero");
  num = ctx->reduce(num);
  den = ctx->reduce(den);
  FieldElem r;
  r.ctx_ = ctx;
  if (num.is_zero()) {
    r.num_ = Poly(ctx->nvars(), Rat(0));
    r.den_ = Poly(ctx->nvars(), Rat(1));
    return r;
  }
  if (ctx->has_zeta() && den.depends_on(ctx->zeta_index())) {
    auto [u, rr] = cyclo_invert(ctx, den);
    num = ctx->reduce(num * u);
    den = rr;
    if (num.is_zero()) {
      r.num_ = Poly(ctx->nvars(), Rat(0));
      r.den_ = Poly(ctx->nvars(), Rat(1));
      return r;
    }
  }
  Poly g = poly_gcd(num, den);
  if (!g.is_constant()) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  Rat lc = den.leading_coeff();
  num = num * (Rat(1) / lc);
  den = den * (Rat(1) / lc);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

FieldElem FieldElem::variable(const FieldCtx* ctx, size_t idx) {
  return make(ctx, Poly::variable(ctx->nvars(), idx), Poly(ctx->nvars(), Rat(1)));
}

FieldElem FieldElem::zeta(const FieldCtx* ctx, unsigned k) {
  if (ctx->cyclo_N() == 1) return FieldElem(ctx, Rat(1));
  if (ctx->cyclo_N() == 2) return FieldElem(ctx, Rat(k % 2 == 0 ? 1 : -1));
  return make(ctx, Poly::variable(ctx->nvars(), ctx->zeta_index(), k % ctx->cyclo_N()),
              Poly(ctx->nvars(), Rat(1)));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return make(ctx_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  return make(ctx_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return make(ctx_, num_ * o.num_, den_ * o.den_);
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return make(ctx_, num_ * o.den_, den_ * o.num_);
}
FieldElem FieldElem::operator-() const { return make(ctx_, -num_, den_); }
FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return make(ctx_, den_, num_);
}

FieldElem FieldElem::pow(long e) const {
  if (e == 0) return FieldElem(ctx_, Rat(1));
  FieldElem b = e > 0 ? *this : inverse();
  unsigned long n = (unsigned long)(e > 0 ? e : -e);
  FieldElem r(ctx_, Rat(1));
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::strong_ordering FieldElem::cmp(const FieldElem& o) const {
  if (auto c = num_.total_degree() <=> o.num_.total_degree(); c != 0) return c;
  if (auto c = den_.total_degree() <=> o.den_.total_degree(); c != 0) return c;
  if (auto c = num_.cmp(o.num_); c != 0) return c;
  return den_.cmp(o.den_);
}

FieldElem FieldElem::substitute(size_t var, const FieldElem& value) const {
  auto [nn, nd] = num_.subst_fraction(var, value.num(), value.den());
  auto [dn, dd] = den_.subst_fraction(var, value.num(), value.den());
  // f = (nn/nd) / (dn/dd) = nn*dd / (dn*nd)
  return make(ctx_, nn * dd, dn * nd);
}

bool FieldElem::is_torsion_unit() const {
  if (is_zero()) return false;
  for (size_t i = 0; i < ctx_->nvars(); ++i)
    if (ctx_->has_zeta() && i == ctx_->zeta_index()) {
      continue;
    } else if (depends_on(i)) {
      return false;
    }
  unsigned M = ctx_->cyclo_N() % 2 == 0 ? ctx_->cyclo_N() : 2 * ctx_->cyclo_N();
  return pow((long)M).is_one();
}

std::string FieldElem::str() const {
  std::string n = num_.str(ctx_->names());
  if (den_ == Poly(ctx_->nvars(), Rat(1))) return n;
  std::string d = den_.str(ctx_->names());
  bool nsimple = num_.terms().size() <= 1;
  bool dsimple = den_.terms().size() == 1 && den_.leading_coeff() == 1;
  std::ostringstream os;
  if (nsimple)
    os << n;
  else
    os << "(" << n << ")";
  os << "/";
  if (dsimple)
    os << d;
  else
    os << "(" << d << ")";
  return os.str();
}

// --- valuations -----------------------------------------------------------

// Order of vanishing of p at var = a (a free of var): the least k with
// (d/dvar)^k p nonzero at a.  Exact and characteristic-zero only.
static long poly_order_at(const Poly& p, size_t var, const FieldElem& a) {
  if (p.is_zero()) return VAL_INF;
  const FieldCtx* ctx = a.ctx();
  Poly cur = p;
  for (long k = 0;; ++k) {
    auto [n, d] = cur.subst_fraction(var, a.num(), a.den());
    FieldElem val = FieldElem::make(ctx, n, d);
    if (!val.is_zero()) return k;
    cur = cur.derivative(var);
    if (cur.is_zero()) return VAL_INF;  // p divisible by arbitrarily high power: impossible
  }
}

long valuation_of(const FieldElem& f, const Valuation& nu) {
  if (f.is_zero()) return VAL_INF;
  if (nu.at_infinity()) return (long)f.den().degree_in(nu.var) - (long)f.num().degree_in(nu.var);
  long kn = poly_order_at(f.num(), nu.var, *nu.center);
  long kd = poly_order_at(f.den(), nu.var, *nu.center);
  return kn - kd;
}

// k-th Taylor coefficient direction: p^{(k)}(a) (the k! factors cancel in
// the ratios we take).
static FieldElem poly_deriv_at(const Poly& p, size_t var, const FieldElem& a, long k) {
  Poly cur = p;
  for (long i = 0; i < k; ++i) cur = cur.derivative(var);
  auto [n, d] = cur.subst_fraction(var, a.num(), a.den());
  return FieldElem::make(a.ctx(), n, d);
}

FieldElem residue(const FieldElem& f, const Valuation& nu) {
  const FieldCtx* ctx = f.ctx();
  if (f.is_zero()) return FieldElem(ctx, Rat(0));
  if (nu.at_infinity()) {
    long v = valuation_of(f, nu);
    if (v < 0) throw Error("residue at a pole");
    if (v > 0) return FieldElem(ctx, Rat(0));
    int dn = f.num().degree_in(nu.var), dd = f.den().degree_in(nu.var);
    return FieldElem::make(ctx, f.num().coeff_of(nu.var, (uint32_t)dn),
                           f.den().coeff_of(nu.var, (uint32_t)dd));
  }
  long kn = poly_order_at(f.num(), nu.var, *nu.center);
  long kd = poly_order_at(f.den(), nu.var, *nu.center);
  if (kn < kd) throw Error("residue at a pole");
  if (kn > kd) return FieldElem(ctx, Rat(0));
  FieldElem top = poly_deriv_at(f.num(), nu.var, *nu.center, kn);
  FieldElem bot = poly_deriv_at(f.den(), nu.var, *nu.center, kd);
  // same k, so the k! normalizations cancel
  return top / bot;
}

FieldElem unit_residue(const FieldElem& f, const Valuation& nu) {
  if (f.is_zero()) throw Error("unit_residue of zero");
  const FieldCtx* ctx = f.ctx();
  long v = valuation_of(f, nu);
  FieldElem pi = nu.at_infinity()
                     ? FieldElem::variable(ctx, nu.var).inverse()
                     : FieldElem::variable(ctx, nu.var) - *nu.center;
  return residue(f * pi.pow(-v), nu);
}

}  // namespace plg
