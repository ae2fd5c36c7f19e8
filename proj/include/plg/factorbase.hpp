#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "plg/field.hpp"

namespace plg {

// Element of F^x (x) Q as an exponent vector over the factor base.  Keys are
// node ids of the owning FactorContext; a word is meaningful only together
// with its context.  Torsion units never contribute.
struct MultWord {
  std::map<int, Rat> exps;  // node id -> exponent, no zeros stored

  MultWord& operator+=(const MultWord& o) {
    for (auto& [k, v] : o.exps) {
      auto it = exps.find(k);
      if (it == exps.end()) {
        exps.emplace(k, v);
      } else {
        it->second += v;
        if (it->second == 0) exps.erase(it);
      }
    }
    return *this;
  }
  MultWord operator+(const MultWord& o) const {
    MultWord r = *this;
    r += o;
    return r;
  }
  MultWord operator*(const Rat& c) const {
    MultWord r;
    if (c == 0) return r;
    r = *this;
    for (auto& [k, v] : r.exps) v *= c;
    return r;
  }
  MultWord operator-() const { return *this * Rat(-1); }
  bool raw_empty() const { return exps.empty(); }
};

// A leaf key after resolution: a rational prime or a normalized polynomial.
struct BaseKey {
  int kind;  // 0 = prime, 1 = polynomial (monic, possibly cyclotomic constant)
  Int prime;
  Poly poly;
  std::strong_ordering cmp(const BaseKey& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    if (kind == 0) return prime < o.prime    ? std::strong_ordering::less
                          : o.prime < prime ? std::strong_ordering::greater
                                            : std::strong_ordering::equal;
    return poly.cmp(o.poly);
  }
  bool operator<(const BaseKey& o) const { return cmp(o) < 0; }
  bool operator==(const BaseKey& o) const { return cmp(o) == 0; }
};

using ResolvedWord = std::map<BaseKey, Rat>;

// Multiplicative factor base with gcd refinement.  Nodes are immutable
// values; refinement only splits a leaf into children, so previously issued
// words stay valid and are re-expressed on resolution.  The polynomial
// leaves are pairwise coprime at all times.
class FactorContext {
 public:
  explicit FactorContext(const FieldCtx* ctx) : ctx_(ctx) {}

  // Word of a nonzero field element (torsion discarded, base refined).
  MultWord word_of(const FieldElem& f);

  ResolvedWord resolve(const MultWord& w) const;
  bool is_zero(const MultWord& w) const { return resolve(w).empty(); }
  bool equal(const MultWord& a, const MultWord& b) const {
    return resolve(a + (b * Rat(-1))).empty();
  }

  // All current polynomial leaves (for the pairwise-coprimality property).
  std::vector<Poly> poly_leaves() const;

  std::string str(const MultWord& w) const;  // "log(b1) + e*log(b2) + ..."
  std::string key_str(const BaseKey& k) const;

 private:
  struct Node {
    BaseKey key;
    std::vector<std::pair<int, uint32_t>> children;  // empty = leaf
  };

  int intern_prime(const Int& p);
  int intern_poly_node(const Poly& p);           // no refinement, exact key match
  void split(int node, const Poly& g, const Poly& h);
  bool refine_pair(int a, int b);
  void refine_all_pairs();
  // Factor monic polynomial p over the (refined) leaves; p must be reduced.
  void push_poly(MultWord& w, Poly p, const Rat& e);
  void push_rat(MultWord& w, const Rat& c, const Rat& e);
  void resolve_into(int node, const Rat& e, ResolvedWord& out) const;

  const FieldCtx* ctx_;
  std::vector<Node> nodes_;
  std::map<Int, int> prime_ids_;
  mutable std::shared_mutex mu_;
};

}  // namespace plg
