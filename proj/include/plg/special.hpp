#pragma once

#include "plg/corr.hpp"

namespace plg {

// Specialization point t -> a (a in F, or infinity) on the distinguished
// transcendental variable.  The uniformizer convention is (t - a), resp.
// 1/t; only weight one depends on it.
struct SpecPoint {
  Valuation nu;
  static SpecPoint at(size_t var, const FieldElem& center) { return {Valuation{var, center}}; }
  static SpecPoint at_infinity(size_t var) { return {Valuation{var, std::nullopt}}; }
};

// Specialization homomorphism A_n(F(t)) -> A_n(F), linearly extended.
LinComb specialize(const FieldCtx* ctx, const LinComb& e, const SpecPoint& p);

// Weight-one specialization in multiplicative coordinates: strip the
// uniformizer power of each base factor and take the residue of the unit.
MultWord specialize_weight1(const FieldCtx* ctx, const MultWord& w, const SpecPoint& p);

}  // namespace plg
