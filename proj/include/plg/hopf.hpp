#pragma once

#include "plg/relations.hpp"

namespace plg {

// Iterated-integral generator I(lo; mid...; up).  Only the equal-endpoints
// degeneracy is normalized away at storage time; everything else is kept
// structural.
struct IISym {
  FieldElem lo;
  std::vector<FieldElem> mid;
  FieldElem up;

  int weight() const { return (int)mid.size(); }
  bool is_unit() const { return mid.empty(); }
  bool is_degenerate() const { return !mid.empty() && lo == up; }
  std::strong_ordering cmp(const IISym& o) const;
  bool operator<(const IISym& o) const { return cmp(o) < 0; }
  bool operator==(const IISym& o) const { return cmp(o) == 0; }
  std::string str() const;
};

IISym make_ii(FieldElem lo, std::vector<FieldElem> mid, FieldElem up);

// Commutative monomial: structural factors of weight >= 2 and weight-one
// logarithm atoms over the factor base.
struct HMono {
  std::vector<IISym> syms;   // sorted
  std::vector<BaseKey> logs; // sorted multiset
  int weight() const;
  size_t factor_count() const { return syms.size() + logs.size(); }
  std::strong_ordering cmp(const HMono& o) const;
  bool operator<(const HMono& o) const { return cmp(o) < 0; }
  bool operator==(const HMono& o) const { return cmp(o) == 0; }
};

// Polynomial expression in iterated integrals.  Weight-one factors are kept
// in multiplicative coordinates; same-endpoint structural factors are merged
// through the shuffle product.
class HopfElem {
 public:
  HopfElem() = default;
  explicit HopfElem(const FieldCtx* ctx) : ctx_(ctx) {}
  static HopfElem one(const FieldCtx* ctx);
  static HopfElem make(const FieldCtx* ctx, const IISym& s);

  const FieldCtx* ctx() const { return ctx_; }
  const std::map<HMono, Rat>& terms() const { return terms_; }
  bool raw_empty() const { return terms_.empty(); }

  void add_mono(const HMono& m, const Rat& c);
  HopfElem operator+(const HopfElem& o) const;
  HopfElem operator-(const HopfElem& o) const;
  HopfElem operator*(const Rat& c) const;
  HopfElem operator-() const { return *this * Rat(-1); }

  // Canonical form with all logarithm atoms re-expressed over the current
  // factor base (stable under base refinement).
  std::map<HMono, Rat> canon() const;
  bool is_zero() const { return canon().empty(); }
  bool equal(const HopfElem& o) const { return ((*this) - o).is_zero(); }

  std::string str() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::map<HMono, Rat> terms_;
};

HopfElem hopf_mul(const HopfElem& a, const HopfElem& b);

// Shuffle product of two symbols sharing both endpoints.
HopfElem shuffle_product(const FieldCtx* ctx, const IISym& a, const IISym& b);

// Path composition through the point a.
HopfElem path_compose(const FieldCtx* ctx, const IISym& s, const FieldElem& a);

// Tensors over H (x) H and H (x) H (x) H.
class HTensor2 {
 public:
  explicit HTensor2(const FieldCtx* ctx) : ctx_(ctx) {}
  const FieldCtx* ctx() const { return ctx_; }
  void add(const HopfElem& a, const HopfElem& b, const Rat& c);
  HTensor2 operator+(const HTensor2& o) const;
  HTensor2 operator-(const HTensor2& o) const;
  HTensor2 operator*(const Rat& c) const;
  const std::vector<std::tuple<HopfElem, HopfElem, Rat>>& parts() const { return parts_; }

  std::map<std::pair<HMono, HMono>, Rat> canon() const;
  bool is_zero() const { return canon().empty(); }
  bool equal(const HTensor2& o) const { return ((*this) - o).is_zero(); }

  // Keep only terms with both legs of positive weight.
  HTensor2 reduced() const;
  std::string str() const;

 private:
  const FieldCtx* ctx_;
  std::vector<std::tuple<HopfElem, HopfElem, Rat>> parts_;
};

// Goncharov coproduct.
HTensor2 coproduct(const FieldCtx* ctx, const IISym& s);
HTensor2 coproduct(const HopfElem& e);
HTensor2 reduced_coproduct(const FieldCtx* ctx, const IISym& s);
HTensor2 reduced_coproduct(const HopfElem& e);

// Coassociativity probe: canonical triple-tensor forms of both associations.
bool coassociative(const FieldCtx* ctx, const IISym& s);

// Projection onto indecomposables: products and scalars die.
struct LieProj {
  std::map<int, LinComb> high;  // weight -> combination (weights >= 2)
  MultWord w1;                  // weight-one part
  LinComb at(int weight) const {
    auto it = high.find(weight);
    return it == high.end() ? LinComb(weight) : it->second;
  }
};
LieProj project_lie(const HopfElem& e);

// I^L: cor(x1..x_{n+1}) - cor(x0..xn); zero at weight 0.
LinComb ii_to_lie(const FieldCtx* ctx, const IISym& s);

// Telescoping expression of a correlator through iterated integrals.
std::vector<IISym> cor_to_ii(const FieldCtx* ctx, std::span<const FieldElem> x);

// Multiple polylogarithm index data.
struct LiSym {
  int n0 = 0;
  std::vector<int> ns;
  std::vector<FieldElem> args;
  int weight() const {
    int w = n0;
    for (int n : ns) w += n;
    return w;
  }
  int depth() const { return (int)ns.size(); }
};

// The iterated integral of a multiple polylogarithm, with its sign.
std::pair<IISym, Rat> li_expand(const FieldCtx* ctx, const LiSym& s);
HopfElem li_hopf(const FieldCtx* ctx, const LiSym& s);
LinComb li_lie(const FieldCtx* ctx, const LiSym& s);

// log^H(x)^n / n! = I(0; 0^n; x).
IISym log_power(const FieldCtx* ctx, const FieldElem& x, int n);

// Rewrites I(0; 0^j, y...; b), y != 0, through shuffle relations until no
// leading zeros remain.  Pure-zero middles are returned unchanged.
std::map<IISym, Rat> eliminate_leading_zeros(const FieldCtx* ctx, const IISym& s);

}  // namespace plg
