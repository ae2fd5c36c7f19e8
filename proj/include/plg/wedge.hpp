#pragma once

#include <variant>

#include "plg/corr.hpp"

namespace plg {

// One tensor leg: weight-1 content lives in F^x (x) Q coordinates, higher
// weight stays a canonical symbol.
struct Leg {
  int weight = 0;
  MultWord word;  // weight == 1
  CorrSym sym;    // weight >= 2

  static Leg from_word(MultWord w) { return Leg{1, std::move(w), {}}; }
  static Leg from_sym(CorrSym s) {
    Leg l;
    l.weight = s.weight();
    l.sym = std::move(s);
    return l;
  }
};

// Canonical (time-of-comparison) form of a leg: weight-1 content is a single
// basis generator of F^x (x) Q, so tensors expand multilinearly over leaves.
struct CanonLeg {
  int weight;
  BaseKey key;  // weight == 1
  CorrSym sym;  // weight >= 2
  std::strong_ordering cmp(const CanonLeg& o) const;
  bool operator<(const CanonLeg& o) const { return cmp(o) < 0; }
  bool operator==(const CanonLeg& o) const { return cmp(o) == 0; }
};

// Expansion of a leg over the canonical basis (a single entry for weight>=2).
std::vector<std::pair<CanonLeg, Rat>> expand_leg(const FieldCtx* ctx, const Leg& l);

// Element of /\^2 A in antisymmetric normal form.  Terms are accumulated
// raw; canonical() resolves weight-1 legs, orients every pair (lower weight
// left; equal weights sorted, equal legs dropped) and combines.
class WedgeElem {
 public:
  struct Term {
    Leg a, b;
    Rat c;
  };
  using Canon = std::map<std::pair<CanonLeg, CanonLeg>, Rat>;

  WedgeElem() = default;
  explicit WedgeElem(const FieldCtx* ctx) : ctx_(ctx) {}

  const FieldCtx* ctx() const { return ctx_; }
  void add(Leg a, Leg b, const Rat& c);
  void add_scaled(const WedgeElem& o, const Rat& c);
  WedgeElem operator+(const WedgeElem& o) const;
  WedgeElem operator-(const WedgeElem& o) const;
  WedgeElem operator*(const Rat& c) const;

  Canon canonical() const;
  bool exact_zero() const { return canonical().empty(); }
  bool equal(const WedgeElem& o) const { return ((*this) - o).exact_zero(); }
  WedgeElem swap_legs() const;  // tau

  // Keep only terms whose bigrading has both components >= 2.
  WedgeElem drop_weight1_component() const;

  const std::vector<Term>& raw() const { return terms_; }
  std::string str() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<Term> terms_;
};

// Cobracket of a raw tuple: legs normalized, weight-1 legs as words.
WedgeElem cobracket_tuple(const FieldCtx* ctx, std::span<const FieldElem> xs, const Rat& coeff);

WedgeElem cobracket(const FieldCtx* ctx, const LinComb& e);

// Cobracket with the L_1 /\ L_{n-1} component omitted.
WedgeElem truncated_cobracket(const FieldCtx* ctx, const LinComb& e);

// Element of A (x) A (x) A for the coJacobi check.
class Tensor3 {
 public:
  explicit Tensor3(const FieldCtx* ctx) : ctx_(ctx) {}
  void add(const Leg& a, const Leg& b, const Leg& c, const Rat& v);
  bool exact_zero() const;

  // (1 + eta + eta^2) (1 (x) delta) delta e, eta the cyclic rotation.
  static Tensor3 cojacobi(const FieldCtx* ctx, const LinComb& e);

 private:
  const FieldCtx* ctx_;
  struct T {
    Leg a, b, c;
    Rat v;
  };
  std::vector<T> terms_;
};

}  // namespace plg
