#include "plg/factorbase.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <sstream>

namespace plg {

namespace {

bool poly_is_vconst(const FieldCtx* ctx, const Poly& p) {
  // constant as a field element: depends on no variable except zeta
  for (size_t i = 0; i < ctx->nvars(); ++i) {
    if (ctx->has_zeta() && i == ctx->zeta_index()) continue;
    if (p.depends_on(i)) return false;
  }
  return true;
}

bool is_torsion_const(const FieldCtx* ctx, const Poly& p) {
  FieldElem e = FieldElem::make(ctx, p, Poly(ctx->nvars(), Rat(1)));
  return e.is_torsion_unit();
}

}  // namespace

int FactorContext::intern_prime(const Int& p) {
  auto it = prime_ids_.find(p);
  if (it != prime_ids_.end()) return it->second;
  Node n;
  n.key = BaseKey{0, p, Poly{}};
  nodes_.push_back(std::move(n));
  int id = (int)nodes_.size() - 1;
  prime_ids_.emplace(p, id);
  return id;
}

int FactorContext::intern_poly_node(const Poly& p) {
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].key.kind == 1 && nodes_[i].key.poly == p) return (int)i;
  Node n;
  n.key = BaseKey{1, Int(0), p};
  nodes_.push_back(std::move(n));
  return (int)nodes_.size() - 1;
}

void FactorContext::split(int node, const Poly& g, const Poly& h) {
  int gi = intern_poly_node(g);
  if (h == g) {
    nodes_[node].children = {{gi, 2}};
    return;
  }
  int hi = intern_poly_node(h);
  nodes_[node].children = {{gi, 1}, {hi, 1}};
}

// Splits both leaves along a common factor, if any.  Returns true if the
// base changed.
bool FactorContext::refine_pair(int a, int b) {
  auto leafp = [&](int i) {
    return nodes_[i].children.empty() && nodes_[i].key.kind == 1 &&
           !poly_is_vconst(ctx_, nodes_[i].key.poly);
  };
  if (a == b || !leafp(a) || !leafp(b)) return false;
  Poly g = poly_gcd(nodes_[a].key.poly, nodes_[b].key.poly);
  if (g.is_constant() || poly_is_vconst(ctx_, g)) return false;
  for (int n : {a, b}) {
    const Poly& p = nodes_[n].key.poly;
    if (p == g) continue;  // the other node will pick this one up as a child
    Poly h = *p.divide_exact(g);
    split(n, g, h);
  }
  return true;
}

void FactorContext::refine_all_pairs() {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> leaves;
    for (size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].children.empty() && nodes_[i].key.kind == 1 &&
          !poly_is_vconst(ctx_, nodes_[i].key.poly))
        leaves.push_back((int)i);
    for (size_t i = 0; i < leaves.size() && !changed; ++i)
      for (size_t j = i + 1; j < leaves.size() && !changed; ++j)
        changed = refine_pair(leaves[i], leaves[j]);
  }
}

void FactorContext::push_rat(MultWord& w, const Rat& c, const Rat& e) {
  if (c == 0) throw Error("word of zero");
  for (auto& [p, k] : factor_rational(c)) {
    int id = intern_prime(p);
    auto it = w.exps.find(id);
    Rat add = e * Rat(k);
    if (it == w.exps.end()) {
      if (add != 0) w.exps.emplace(id, add);
    } else {
      it->second += add;
      if (it->second == 0) w.exps.erase(it);
    }
  }
}

void FactorContext::push_poly(MultWord& w, Poly p, const Rat& e) {
  // p: nonzero polynomial, zeta-reduced.  Strip the rational leading
  // coefficient, factor it into primes, and factor the monic part against
  // the base.
  Rat lc = p.leading_coeff();
  if (lc != 1) {
    push_rat(w, lc, e);
    p = p * (Rat(1) / lc);
  }
  if (p.is_constant()) return;  // became 1
  if (poly_is_vconst(ctx_, p)) {
    if (is_torsion_const(ctx_, p)) return;
    int id = intern_poly_node(p);
    auto it = w.exps.find(id);
    if (it == w.exps.end())
      w.exps.emplace(id, e);
    else {
      it->second += e;
      if (it->second == 0) w.exps.erase(it);
    }
    return;
  }

  // factor against current leaves, refining as needed
  std::deque<std::pair<Poly, Rat>> work{{p, e}};
  while (!work.empty()) {
    auto [q, qe] = work.front();
    work.pop_front();
    if (q.is_constant()) {
      if (q.constant_value() != 1) push_rat(w, q.constant_value(), qe);
      continue;
    }
    if (poly_is_vconst(ctx_, q)) {
      push_poly(w, q, qe);  // constant path above
      continue;
    }
    bool reduced = false;
    for (size_t i = 0; i < nodes_.size() && !reduced; ++i) {
      if (!nodes_[i].children.empty() || nodes_[i].key.kind != 1) continue;
      const Poly& b = nodes_[i].key.poly;
      if (poly_is_vconst(ctx_, b)) continue;
      Poly g = poly_gcd(q, b);
      if (g.is_constant() || poly_is_vconst(ctx_, g)) continue;
      if (g == b) {
        // divide out the highest power of b
        long k = 0;
        while (true) {
          auto d = q.divide_exact(b);
          if (!d) break;
          q = *d;
          ++k;
        }
        auto it = w.exps.find((int)i);
        Rat add = qe * Rat(k);
        if (it == w.exps.end()) {
          if (add != 0) w.exps.emplace((int)i, add);
        } else {
          it->second += add;
          if (it->second == 0) w.exps.erase(it);
        }
        work.emplace_back(q, qe);
        reduced = true;
      } else {
        Poly h = *b.divide_exact(g);
        split((int)i, g, h);
        refine_all_pairs();
        work.emplace_back(q, qe);
        reduced = true;
      }
    }
    if (!reduced) {
      // coprime to every leaf: becomes a new leaf
      int id = intern_poly_node(q);
      auto it = w.exps.find(id);
      if (it == w.exps.end())
        w.exps.emplace(id, qe);
      else {
        it->second += qe;
        if (it->second == 0) w.exps.erase(it);
      }
      refine_all_pairs();
    }
  }
}

MultWord FactorContext::word_of(const FieldElem& f) {
  if (f.is_zero()) throw Error("word of zero");
  std::unique_lock lock(mu_);
  MultWord w;
  push_poly(w, f.num(), Rat(1));
  push_poly(w, f.den(), Rat(-1));
  return w;
}

void FactorContext::resolve_into(int node, const Rat& e, ResolvedWord& out) const {
  const Node& n = nodes_[node];
  if (n.children.empty()) {
    if (n.key.kind == 1 && poly_is_vconst(ctx_, n.key.poly) && is_torsion_const(ctx_, n.key.poly))
      return;  // a leaf that later turned out torsion cannot occur, but be safe
    auto it = out.find(n.key);
    if (it == out.end()) {
      if (e != 0) out.emplace(n.key, e);
    } else {
      it->second += e;
      if (it->second == 0) out.erase(it);
    }
    return;
  }
  for (auto& [child, mult] : n.children) resolve_into(child, e * Rat((long)mult), out);
}

ResolvedWord FactorContext::resolve(const MultWord& w) const {
  std::shared_lock lock(mu_);
  ResolvedWord out;
  for (auto& [id, e] : w.exps) resolve_into(id, e, out);
  return out;
}

std::vector<Poly> FactorContext::poly_leaves() const {
  std::shared_lock lock(mu_);
  std::vector<Poly> out;
  for (auto& n : nodes_)
    if (n.children.empty() && n.key.kind == 1 && !poly_is_vconst(ctx_, n.key.poly))
      out.push_back(n.key.poly);
  return out;
}

std::string FactorContext::key_str(const BaseKey& k) const {
  if (k.kind == 0) return k.prime.get_str();
  return k.poly.str(ctx_->names());
}

std::string FactorContext::str(const MultWord& w) const {
  ResolvedWord r = resolve(w);
  if (r.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, e] : r) {
    Rat ae = abs(e);
    if (first) {
      if (e < 0) os << "-";
      first = false;
    } else {
      os << (e < 0 ? " - " : " + ");
    }
    if (ae != 1) os << ae.get_str() << "*";
    os << "log(" << key_str(k) << ")";
  }
  return os.str();
}

}  // namespace plg
