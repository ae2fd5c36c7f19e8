#pragma once

#include "plg/bloch.hpp"

namespace plg {

// Canonical derivation families over an auxiliary transcendental.  Every
// seeded generator enters the database through derive_relation, i.e. with a
// certified cobracket and a replayable provenance record.

// Li2(t^2) - 2 Li2(t) - 2 Li2(-t); deriving at (0, 1) yields
// Li2(1) + 2 Li2(-1).
LinComb family_duplication(const FieldCtx* ctx, size_t tvar);
// Li2(t) + Li2(1-t); deriving at (s, 0) yields Li2(s) + Li2(1-s) - Li2(1).
LinComb family_reflection(const FieldCtx* ctx, size_t tvar);
// Li2(t) + Li2(1/t); deriving at (x, 1) yields Li2(x) + Li2(1/x) - 2 Li2(1).
LinComb family_inversion(const FieldCtx* ctx, size_t tvar);
// The five-term family in t at fixed first argument a.
LinComb family_five_term(const FieldCtx* ctx, const FieldElem& a, size_t tvar);

// Base weight-2 constants: Li2(1) and Li2(-1) become zero in the quotient.
void seed_weight2_constants(RelationDB& db, size_t tvar);

// Registers Li2(x) + Li2(1/x) - 2 Li2(1).
void seed_inversion2(RelationDB& db, const FieldElem& x, size_t tvar);
// Registers the five-term relation instance at (a, b) (modulo previously
// seeded inversion and constant generators).
void seed_five_term(RelationDB& db, const FieldElem& a, const FieldElem& b, size_t tvar);

// Weight-2 shuffle / reversal / distribution instances (exact certificates).
void seed_shuffle2(RelationDB& db, const FieldElem& x0, const FieldElem& x1, const FieldElem& x2,
                   size_t tvar);
void seed_reversal2(RelationDB& db, const FieldElem& x0, const FieldElem& x1, const FieldElem& x2,
                    size_t tvar);
void seed_distribution2(RelationDB& db, unsigned N, std::span<const FieldElem> x, size_t tvar);

// Higher-weight instances; lower-weight prerequisites are seeded recursively
// using the given list of auxiliary variables (one per recursion level).
void seed_shuffle(RelationDB& db, std::span<const FieldElem> x, int n1, int n2,
                  std::span<const size_t> aux);
void seed_reversal(RelationDB& db, std::span<const FieldElem> x, std::span<const size_t> aux);
void seed_distribution(RelationDB& db, unsigned N, std::span<const FieldElem> x,
                       std::span<const size_t> aux);

// Tries to close the (1, n-1) components of a wedge by deriving five-term
// instances found by the span solver.  Returns true if the wedge certifies
// afterwards.
bool close_wedge_with_five_terms(RelationDB& db, const WedgeElem& w, size_t tvar,
                                 size_t candidate_budget);

}  // namespace plg
