#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "plg/factorbase.hpp"
#include "plg/field.hpp"

namespace plg {

// Correlator generator symbol (x0,...,xn), stored in canonical form:
// first entry 0, first nonzero entry 1 (weight >= 2), lexicographically
// least cyclic rotation under the global order on field elements.
struct CorrSym {
  std::vector<FieldElem> xs;

  int weight() const { return (int)xs.size() - 1; }
  // Minimal number of nonzero entries over the translation orbit: translate
  // by the most frequent value.  This is the count depth arguments use.
  int nonzero_entries() const {
    size_t maxmult = 0;
    for (auto& x : xs) {
      size_t m = 0;
      for (auto& y : xs) m += (y == x);
      maxmult = std::max(maxmult, m);
    }
    return (int)(xs.size() - maxmult);
  }
  std::strong_ordering cmp(const CorrSym& o) const {
    if (xs.size() != o.xs.size()) return xs.size() <=> o.xs.size();
    for (size_t i = 0; i < xs.size(); ++i)
      if (auto c = xs[i].cmp(o.xs[i]); c != 0) return c;
    return std::strong_ordering::equal;
  }
  bool operator<(const CorrSym& o) const { return cmp(o) < 0; }
  bool operator==(const CorrSym& o) const { return cmp(o) == 0; }
  std::string str() const;
};

// Finite rational combination of canonical symbols of one weight.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(int weight) : weight_(weight) {}

  int weight() const { return weight_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<CorrSym, Rat>& terms() const { return terms_; }

  void add(const CorrSym& s, const Rat& c);
  LinComb operator+(const LinComb& o) const;
  LinComb operator-(const LinComb& o) const;
  LinComb operator*(const Rat& c) const;
  LinComb operator-() const { return *this * Rat(-1); }
  bool operator==(const LinComb& o) const { return weight_ == o.weight_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  int weight_ = 0;
  std::map<CorrSym, Rat> terms_;
};

// Canonical form of a raw tuple modulo (A1)-(A6): the zero combination or a
// single canonical symbol with coefficient 1.  Tuples of length < 2 are
// rejected.
LinComb normalize(const FieldCtx* ctx, std::span<const FieldElem> raw);

// Lemma: weight one is F^x (x) Q; the word of (x1 - x0).
MultWord weight1_value(const FieldElem& x0, const FieldElem& x1);

// Word of a weight-1 combination.
MultWord weight1_word(const FieldCtx* ctx, const LinComb& e);

// Max over terms of (nonzero entries - 1); 0 for the zero combination.
int depth_bound(const LinComb& e);

}  // namespace plg
