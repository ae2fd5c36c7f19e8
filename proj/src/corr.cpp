#include "plg/corr.hpp"

#include <sstream>

namespace plg {

std::string CorrSym::str() const {
  std::ostringstream os;
  os << "cor(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << xs[i].str();
  }
  os << ")";
  return os.str();
}

void LinComb::add(const CorrSym& s, const Rat& c) {
  if (c == 0) return;
  if (weight_ == 0) weight_ = s.weight();
  if (s.weight() != weight_) throw Error("mixed weights in a combination");
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb LinComb::operator+(const LinComb& o) const {
  LinComb r = *this;
  if (r.weight_ == 0) r.weight_ = o.weight_;
  for (auto& [s, c] : o.terms_) r.add(s, c);
  return r;
}

LinComb LinComb::operator-(const LinComb& o) const { return *this + o * Rat(-1); }

LinComb LinComb::operator*(const Rat& c) const {
  LinComb r(weight_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [s, v] : r.terms_) v *= c;
  return r;
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : terms_) {
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (ac != 1) os << ac.get_str() << "*";
    os << s.str();
  }
  return os.str();
}

LinComb normalize(const FieldCtx* ctx, std::span<const FieldElem> raw) {
  if (raw.size() < 2) throw Error("correlator needs at least two points");
  size_t n1 = raw.size();
  int weight = (int)n1 - 1;
  LinComb out(weight);

  bool all_equal = true;
  for (size_t i = 1; i < n1; ++i)
    if (!(raw[i] == raw[0])) {
      all_equal = false;
      break;
    }
  if (all_equal) return out;  // translation of (0,...,0)

  if (weight == 1) {
    // No scaling at weight 1; canonical representative of {(0, v), (0, -v)}.
    FieldElem v = raw[1] - raw[0];
    if (v.is_torsion_unit()) return out;
    FieldElem w = -v;
    CorrSym s;
    s.xs = {FieldElem(ctx, Rat(0)), v.cmp(w) <= 0 ? v : w};
    out.add(s, Rat(1));
    return out;
  }

  std::vector<FieldElem> best;
  for (size_t r = 0; r < n1; ++r) {
    std::vector<FieldElem> cand(n1);
    for (size_t i = 0; i < n1; ++i) cand[i] = raw[(r + i) % n1] - raw[r % n1];
    // scale so the first nonzero entry is 1
    FieldElem m(ctx, Rat(0));
    for (auto& x : cand)
      if (!x.is_zero()) {
        m = x;
        break;
      }
    for (auto& x : cand) x = x / m;
    if (best.empty()) {
      best = std::move(cand);
      continue;
    }
    for (size_t i = 0; i < n1; ++i) {
      auto c = cand[i].cmp(best[i]);
      if (c < 0) {
        best = std::move(cand);
        break;
      }
      if (c > 0) break;
    }
  }

  int nonzero = 0;
  for (auto& x : best) nonzero += !x.is_zero();
  if (nonzero <= 1) return out;  // the orbit of (1,0,...,0)

  CorrSym s;
  s.xs = std::move(best);
  out.add(s, Rat(1));
  return out;
}

MultWord weight1_value(const FieldElem& x0, const FieldElem& x1) {
  FieldElem v = x1 - x0;
  if (v.is_zero() || v.is_torsion_unit()) return MultWord{};
  return x0.ctx()->factors().word_of(v);
}

MultWord weight1_word(const FieldCtx* ctx, const LinComb& e) {
  if (!e.is_zero() && e.weight() != 1) throw Error("weight1_word needs weight 1");
  MultWord w;
  for (auto& [s, c] : e.terms()) w += weight1_value(s.xs[0], s.xs[1]) * c;
  return w;
}

int depth_bound(const LinComb& e) {
  int d = 0;
  for (auto& [s, c] : e.terms()) d = std::max(d, s.nonzero_entries() - 1);
  return d;
}

}  // namespace plg
