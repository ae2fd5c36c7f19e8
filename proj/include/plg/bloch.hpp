#pragma once

#include "plg/relations.hpp"

namespace plg {

// Formal Q-combination of Bloch generators {a}_2, a not in {0, 1}.
struct BlochElem {
  std::map<FieldElem, Rat> terms;

  void add(const FieldElem& a, const Rat& c);
  BlochElem operator+(const BlochElem& o) const;
  BlochElem operator*(const Rat& c) const;
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

// {a}_2 -> log(a) /\ log(1-a), linearly extended.
WedgeElem bloch_delta(const FieldCtx* ctx, const BlochElem& e);

// {a}_2 -> Li_2 at the Lie level.
LinComb map_L2(const FieldCtx* ctx, const BlochElem& e);

// cor(x0,x1,x2) with distinct entries -> {(x2-x0)/(x1-x0)}_2, else 0.
BlochElem map_M2(const FieldCtx* ctx, const LinComb& e);

// The five-term vector [a]-[b]+[b/a]-[(1-1/a)/(1-1/b)]+[(1-a)/(1-b)].
BlochElem five_term_vector(const FieldCtx* ctx, const FieldElem& a, const FieldElem& b);

// Arguments of the 22-term element, with signs; throws on degenerate
// parameters, naming the vanishing expression.
std::vector<std::pair<FieldElem, Rat>> twenty_two_args(const FieldCtx* ctx, const FieldElem& a,
                                                       const FieldElem& b, const FieldElem& c);

struct TwentyTwoReport {
  bool stage1_zero = false;
  bool stage2_attempted = false;
  bool stage2_certified = false;
  size_t candidates = 0;
  std::string detail;
};

// Stage 1: the composite differential of the weight-3 element vanishes
// exactly in (wedge^2 F*) (x) F* coordinates.  Stage 2 (best effort):
// express the B_2 (x) F* part as a combination of five-term vectors with
// arguments from a bounded closure of the 22 arguments.
TwentyTwoReport verify_22_term(const FieldCtx* ctx, const FieldElem& a, const FieldElem& b,
                               const FieldElem& c, const RelationDB& db, size_t candidate_budget);

// Bounded multiplicative / cross-ratio closure used by stage 2 and by the
// five-term search helpers.
std::vector<FieldElem> argument_closure(const FieldCtx* ctx, std::vector<FieldElem> seeds,
                                        size_t budget);

// Decides membership of e in the Q-span of five-term vectors over the given
// candidate arguments; returns the witness combination if found.
std::optional<std::vector<std::tuple<FieldElem, FieldElem, Rat>>> five_term_span_solve(
    const FieldCtx* ctx, const BlochElem& e, std::span<const FieldElem> candidates,
    size_t pair_budget);

}  // namespace plg
