#include "plg/relations.hpp"

#include <mutex>
#include <sstream>

namespace plg {

std::vector<RelationDB::Gen> RelationDB::generators() const {
  std::shared_lock lock(mu_);
  return gens_;
}

size_t RelationDB::size() const {
  std::shared_lock lock(mu_);
  return gens_.size();
}

LinComb RelationDB::reduce_unlocked(const LinComb& e) const {
  auto it = ech_.find(e.weight());
  if (it == ech_.end() || e.is_zero()) return e;
  auto residue = it->second.reduce(e.terms());
  LinComb out(e.weight());
  for (auto& [s, c] : residue) out.add(s, c);
  return out;
}

LinComb RelationDB::reduce(const LinComb& e) const {
  std::shared_lock lock(mu_);
  return reduce_unlocked(e);
}

void RelationDB::add_generator(const LinComb& g, const std::string& provenance) {
  if (g.is_zero()) return;
  if (g.weight() < 2) throw Error("weight-one relations are trivial");
  if (!wedge_is_zero(cobracket(ctx_, g), *this))
    throw Error("generator violates the coideal closure invariant");
  std::unique_lock lock(mu_);
  gens_.push_back(Gen{g.weight(), g, provenance});
  ech_[g.weight()].add(g.terms());
}

bool RelationDB::echelon_consistent() const {
  std::shared_lock lock(mu_);
  std::map<int, SparseEchelon<CorrSym>> fresh;
  for (auto& g : gens_) fresh[g.weight].add(g.lc.terms());
  if (fresh.size() != ech_.size()) return false;
  for (auto& [w, e] : ech_) {
    auto it = fresh.find(w);
    if (it == fresh.end()) return false;
    if (it->second.rows().size() != e.rows().size()) return false;
    auto a = e.rows().begin();
    auto b = it->second.rows().begin();
    for (; a != e.rows().end(); ++a, ++b)
      if (!(a->first == b->first) || a->second != b->second) return false;
  }
  return true;
}

std::map<std::pair<CanonLeg, CanonLeg>, Rat> wedge_residual(const WedgeElem& w,
                                                            const RelationDB& db) {
  std::shared_lock lock(db.mu_);
  auto canon = w.canonical();
  std::map<CorrSym, LinComb> memo;
  auto reduced = [&](const CorrSym& s) -> const LinComb& {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    LinComb lc(s.weight());
    lc.add(s, Rat(1));
    return memo.emplace(s, db.reduce_unlocked(lc)).first->second;
  };
  std::map<std::pair<CanonLeg, CanonLeg>, Rat> coords;
  auto put = [&](CanonLeg a, CanonLeg b, const Rat& c) {
    auto ord = a.cmp(b);
    if (ord == 0) return;
    Rat v = c;
    if (ord > 0) {
      std::swap(a, b);
      v = -v;
    }
    auto key = std::make_pair(std::move(a), std::move(b));
    auto it = coords.find(key);
    if (it == coords.end()) {
      coords.emplace(std::move(key), v);
    } else {
      it->second += v;
      if (it->second == 0) coords.erase(it);
    }
  };
  auto expand = [&](const CanonLeg& l) {
    std::vector<std::pair<CanonLeg, Rat>> out;
    if (l.weight == 1) {
      out.emplace_back(l, Rat(1));
      return out;
    }
    for (auto& [s, c] : reduced(l.sym).terms()) {
      CanonLeg nl;
      nl.weight = s.weight();
      nl.sym = s;
      out.emplace_back(std::move(nl), c);
    }
    return out;
  };
  for (auto& [key, c] : canon) {
    auto ea = expand(key.first);
    auto eb = expand(key.second);
    for (auto& [a, ca] : ea)
      for (auto& [b, cb] : eb) put(a, b, c * ca * cb);
  }
  return coords;
}

bool wedge_is_zero(const WedgeElem& w, const RelationDB& db) {
  return wedge_residual(w, db).empty();
}

LinComb derive_relation(RelationDB& db, const LinComb& family, const SpecPoint& from,
                        const SpecPoint& to, const std::string& label) {
  const FieldCtx* ctx = db.ctx();
  if (!wedge_is_zero(cobracket(ctx, family), db))
    throw Error("family cobracket is not certified zero; refusing to derive");
  LinComb r = specialize(ctx, family, from) - specialize(ctx, family, to);
  if (!r.is_zero()) db.add_generator(r, label);
  return r;
}

LinComb li2_lie(const FieldCtx* ctx, const FieldElem& x) { return lin_lie(ctx, 2, x); }

LinComb lin_lie(const FieldCtx* ctx, int n, const FieldElem& x) {
  std::vector<FieldElem> xs;
  xs.push_back(FieldElem(ctx, Rat(1)));
  for (int i = 0; i < n - 1; ++i) xs.push_back(FieldElem(ctx, Rat(0)));
  xs.push_back(x);
  return -normalize(ctx, xs);
}

std::vector<std::vector<int>> shuffle_perms(int n1, int n2) {
  // positions sigma(1..n): enumerate which slots carry the first block
  std::vector<std::vector<int>> out;
  int n = n1 + n2;
  std::vector<int> pick(n1);
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == n1) {
      std::vector<int> perm(n);
      std::vector<bool> used(n, false);
      for (int i = 0; i < n1; ++i) {
        perm[pick[i]] = i + 1;
        used[pick[i]] = true;
      }
      int next = n1 + 1;
      for (int i = 0; i < n; ++i)
        if (!used[i]) perm[i] = next++;
      out.push_back(perm);
      return;
    }
    for (int j = from; j < n; ++j) {
      pick[idx] = j;
      rec(idx + 1, j + 1);
    }
  };
  rec(0, 0);
  return out;
}

LinComb shuffle_element(const FieldCtx* ctx, std::span<const FieldElem> x, int n1, int n2) {
  int n = n1 + n2;
  if ((int)x.size() != n + 1) throw Error("shuffle: tuple size must be n1+n2+1");
  LinComb e(n);
  for (auto& perm : shuffle_perms(n1, n2)) {
    std::vector<FieldElem> xs;
    xs.push_back(x[0]);
    for (int i = 0; i < n; ++i) xs.push_back(x[(size_t)perm[i]]);
    e = e + normalize(ctx, xs);
  }
  return e;
}

LinComb reversal_element(const FieldCtx* ctx, std::span<const FieldElem> x) {
  int n = (int)x.size() - 1;
  std::vector<FieldElem> rev(x.rbegin(), x.rend());
  Rat sign = (n % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^(n+1)
  return normalize(ctx, x) - normalize(ctx, rev) * sign;
}

std::vector<FieldElem> roots_of_unity(const FieldCtx* ctx, unsigned N) {
  if (N == 1) return {FieldElem(ctx, Rat(1))};
  if (N == 2) return {FieldElem(ctx, Rat(1)), FieldElem(ctx, Rat(-1))};
  if (ctx->cyclo_N() % N != 0)
    throw Error("field context does not contain the required roots of unity");
  std::vector<FieldElem> out;
  unsigned step = ctx->cyclo_N() / N;
  for (unsigned k = 0; k < N; ++k) out.push_back(FieldElem::zeta(ctx, k * step));
  return out;
}

LinComb distribution_element(const FieldCtx* ctx, unsigned N, std::span<const FieldElem> x) {
  int n = (int)x.size() - 1;
  std::vector<FieldElem> zs = roots_of_unity(ctx, N);
  std::vector<FieldElem> pw;
  for (auto& xi : x) pw.push_back(xi.pow((long)N));
  LinComb e = normalize(ctx, pw);
  std::vector<size_t> idx((size_t)n, 0);
  while (true) {
    std::vector<FieldElem> xs;
    xs.push_back(x[0]);
    for (int i = 0; i < n; ++i) xs.push_back(zs[idx[(size_t)i]] * x[(size_t)i + 1]);
    e = e - normalize(ctx, xs);
    int p = 0;
    while (p < n && ++idx[(size_t)p] == zs.size()) idx[(size_t)p++] = 0;
    if (p == n) break;
  }
  return e;
}

Certificate verify_five_term(const FieldCtx* ctx, const FieldElem& a, const FieldElem& b) {
  FieldElem one(ctx, Rat(1)), zero(ctx, Rat(0));
  auto bad = [&](const FieldElem& v, const std::string& what) -> std::optional<std::string> {
    if (v.is_zero()) return what + " = 0";
    if (v == one) return what + " = 1";
    return std::nullopt;
  };
  if (auto e = bad(a, "a")) throw Error("five-term: " + *e);
  if (auto e = bad(b, "b")) throw Error("five-term: " + *e);
  if (a == b) throw Error("five-term: a = b");
  FieldElem u3 = b / a;
  FieldElem u4 = (one - a.inverse()) / (one - b.inverse());
  FieldElem u5 = (one - a) / (one - b);
  LinComb e = li2_lie(ctx, a) - li2_lie(ctx, b) + li2_lie(ctx, u3) - li2_lie(ctx, u4) +
              li2_lie(ctx, u5);
  bool ok = cobracket(ctx, e).exact_zero();
  return Certificate{ok, 1, ok ? "exact zero in wedge^2 of F* (x) Q" : "nonzero cobracket"};
}

namespace {

Certificate certify_element(const FieldCtx* ctx, const LinComb& e, const RelationDB& db) {
  if (e.is_zero()) return Certificate{true, 1, "vanishes identically"};
  if (e.weight() == 1) {
    bool ok = ctx->factors().is_zero(weight1_word(ctx, e));
    return Certificate{ok, 1, ok ? "exact weight-one identity" : "nonzero word"};
  }
  WedgeElem w = cobracket(ctx, e);
  if (e.weight() == 2) {
    bool ok = w.exact_zero();
    return Certificate{ok, 1, ok ? "exact zero in wedge^2 of F* (x) Q" : "nonzero cobracket"};
  }
  bool ok = wedge_is_zero(w, db);
  return Certificate{ok, 2,
                     ok ? "cobracket reduces to zero modulo the relation database"
                        : "cobracket residue nonzero modulo the database"};
}

}  // namespace

Certificate verify_shuffle(const FieldCtx* ctx, std::span<const FieldElem> x, int n1, int n2,
                           const RelationDB& db) {
  if (n1 < 1 || n2 < 1) throw Error("shuffle: n1, n2 >= 1");
  return certify_element(ctx, shuffle_element(ctx, x, n1, n2), db);
}

Certificate verify_reversal(const FieldCtx* ctx, std::span<const FieldElem> x,
                            const RelationDB& db) {
  if (x.size() < 3) {
    // weight one: exact by cyclic symmetry
    LinComb d = normalize(ctx, x) - normalize(ctx, std::vector<FieldElem>(x.rbegin(), x.rend()));
    bool ok = d.is_zero() || ctx->factors().is_zero(weight1_word(ctx, d));
    return Certificate{ok, 1, "weight one is cyclic"};
  }
  return certify_element(ctx, reversal_element(ctx, x), db);
}

Certificate verify_distribution(const FieldCtx* ctx, unsigned N, std::span<const FieldElem> x,
                                const RelationDB& db) {
  if (N == 1) return Certificate{true, 1, "N = 1 is the identity"};
  if (x.size() == 2) {
    // exact: x^N - y^N = prod over roots of unity
    std::vector<FieldElem> zs = roots_of_unity(ctx, N);
    MultWord lhs = weight1_value(x[0].pow((long)N), x[1].pow((long)N));
    MultWord rhs;
    for (auto& z : zs) rhs += weight1_value(x[0], z * x[1]);
    bool ok = ctx->factors().equal(lhs, rhs);
    return Certificate{ok, 1, ok ? "exact weight-one identity" : "weight-one mismatch"};
  }
  return certify_element(ctx, distribution_element(ctx, N, x), db);
}

}  // namespace plg
