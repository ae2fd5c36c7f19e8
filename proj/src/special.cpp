#include "plg/special.hpp"

namespace plg {

namespace {

// Specialize one canonical symbol.  Canonical tuples start at 0 and are not
// constant, so s = min_i nu(x_i) is finite.
LinComb specialize_sym(const FieldCtx* ctx, const CorrSym& sym, const SpecPoint& p) {
  FieldElem pi = p.nu.at_infinity()
                     ? FieldElem::variable(ctx, p.nu.var).inverse()
                     : FieldElem::variable(ctx, p.nu.var) - *p.nu.center;
  long s = VAL_INF;
  for (auto& x : sym.xs)
    if (!x.is_zero()) s = std::min(s, valuation_of(x, p.nu));
  FieldElem scale = pi.pow(-s);
  std::vector<FieldElem> ys(sym.xs.size());
  for (size_t i = 0; i < ys.size(); ++i)
    ys[i] = sym.xs[i].is_zero() ? sym.xs[i] : residue(sym.xs[i] * scale, p.nu);
  return normalize(ctx, ys);
}

}  // namespace

LinComb specialize(const FieldCtx* ctx, const LinComb& e, const SpecPoint& p) {
  LinComb out(e.weight());
  for (auto& [s, c] : e.terms()) out = out + specialize_sym(ctx, s, p) * c;
  return out;
}

MultWord specialize_weight1(const FieldCtx* ctx, const MultWord& w, const SpecPoint& p) {
  MultWord out;
  auto& fb = ctx->factors();
  for (auto& [key, e] : fb.resolve(w)) {
    FieldElem f = key.kind == 0
                      ? FieldElem(ctx, Rat(key.prime))
                      : FieldElem::make(ctx, key.poly, Poly(ctx->nvars(), Rat(1)));
    FieldElem r = unit_residue(f, p.nu);
    if (r.is_torsion_unit()) continue;
    out += fb.word_of(r) * e;
  }
  return out;
}

}  // namespace plg
