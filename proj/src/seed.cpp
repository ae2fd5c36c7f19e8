#include "plg/seed.hpp"

#include <set>
#include <sstream>

#include "plg/dbfile.hpp"

namespace plg {

namespace {

FieldElem tv(const FieldCtx* ctx, size_t tvar) { return FieldElem::variable(ctx, tvar); }

std::string prov(const FieldCtx* ctx, const LinComb& fam, size_t tvar, const std::string& from,
                 const std::string& to) {
  std::ostringstream os;
  os << "family=" << serialize_lincomb(fam) << "|var=" << ctx->names()[tvar] << "|from=" << from
     << "|to=" << to;
  return os.str();
}

// derive Sp_from - Sp_to, skipping silently if the generator is already in
// the database span
LinComb derive_if_new(RelationDB& db, const LinComb& fam, size_t tvar, const SpecPoint& from,
                      const std::string& from_s, const SpecPoint& to, const std::string& to_s) {
  const FieldCtx* ctx = db.ctx();
  LinComb r = specialize(ctx, fam, from) - specialize(ctx, fam, to);
  if (r.is_zero() || db.contains(r)) return r;
  return derive_relation(db, fam, from, to, prov(ctx, fam, tvar, from_s, to_s));
}

}  // namespace

LinComb family_duplication(const FieldCtx* ctx, size_t tvar) {
  FieldElem t = tv(ctx, tvar);
  return li2_lie(ctx, t * t) - li2_lie(ctx, t) * Rat(2) - li2_lie(ctx, -t) * Rat(2);
}

LinComb family_reflection(const FieldCtx* ctx, size_t tvar) {
  FieldElem t = tv(ctx, tvar);
  return li2_lie(ctx, t) + li2_lie(ctx, FieldElem(ctx, Rat(1)) - t);
}

LinComb family_inversion(const FieldCtx* ctx, size_t tvar) {
  FieldElem t = tv(ctx, tvar);
  return li2_lie(ctx, t) + li2_lie(ctx, t.inverse());
}

LinComb family_five_term(const FieldCtx* ctx, const FieldElem& a, size_t tvar) {
  FieldElem t = tv(ctx, tvar);
  FieldElem one(ctx, Rat(1));
  return li2_lie(ctx, a) - li2_lie(ctx, t) + li2_lie(ctx, t / a) -
         li2_lie(ctx, (one - a.inverse()) / (one - t.inverse())) +
         li2_lie(ctx, (one - a) / (one - t));
}

void seed_weight2_constants(RelationDB& db, size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  FieldElem zero(ctx, Rat(0)), one(ctx, Rat(1)), mone(ctx, Rat(-1));
  derive_if_new(db, family_duplication(ctx, tvar), tvar, SpecPoint::at(tvar, zero), "0",
                SpecPoint::at(tvar, one), "1");
  derive_if_new(db, family_inversion(ctx, tvar), tvar, SpecPoint::at(tvar, mone), "-1",
                SpecPoint::at(tvar, one), "1");
}

void seed_inversion2(RelationDB& db, const FieldElem& x, size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  FieldElem one(ctx, Rat(1));
  if (x.is_zero() || x == one) return;
  derive_if_new(db, family_inversion(ctx, tvar), tvar, SpecPoint::at(tvar, x), x.str(),
                SpecPoint::at(tvar, one), "1");
}

void seed_five_term(RelationDB& db, const FieldElem& a, const FieldElem& b, size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  FieldElem one(ctx, Rat(1));
  if (a.is_zero() || a == one || b.is_zero() || b == one || a == b) return;
  seed_weight2_constants(db, tvar);
  seed_inversion2(db, a, tvar);
  derive_if_new(db, family_five_term(ctx, a, tvar), tvar, SpecPoint::at(tvar, b), b.str(),
                SpecPoint::at(tvar, one), "1");
}

namespace {

// Translation making the head entry nonzero (a no-op on the symbol class).
std::vector<FieldElem> head_nonzero(const FieldCtx* ctx, std::span<const FieldElem> x) {
  std::vector<FieldElem> y(x.begin(), x.end());
  if (y[0].is_zero()) {
    FieldElem one(ctx, Rat(1));
    for (auto& v : y) v = v + one;
  }
  return y;
}

}  // namespace

void seed_shuffle2(RelationDB& db, const FieldElem& x0, const FieldElem& x1, const FieldElem& x2,
                   size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  std::vector<FieldElem> y = head_nonzero(ctx, std::vector<FieldElem>{x0, x1, x2});
  FieldElem t = tv(ctx, tvar);
  std::vector<FieldElem> fam_tuple{t * y[0], y[1], y[2]};
  LinComb fam = shuffle_element(ctx, fam_tuple, 1, 1);
  if (fam.is_zero()) return;
  derive_if_new(db, fam, tvar, SpecPoint::at(tvar, FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(tvar), "inf");
}

void seed_reversal2(RelationDB& db, const FieldElem& x0, const FieldElem& x1, const FieldElem& x2,
                    size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  std::vector<FieldElem> y = head_nonzero(ctx, std::vector<FieldElem>{x0, x1, x2});
  FieldElem t = tv(ctx, tvar);
  std::vector<FieldElem> fam_tuple{t * y[0], y[1], y[2]};
  LinComb fam = reversal_element(ctx, fam_tuple);
  if (fam.is_zero()) return;
  derive_if_new(db, fam, tvar, SpecPoint::at(tvar, FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(tvar), "inf");
}

void seed_distribution2(RelationDB& db, unsigned N, std::span<const FieldElem> x, size_t tvar) {
  const FieldCtx* ctx = db.ctx();
  std::vector<FieldElem> y = head_nonzero(ctx, x);
  FieldElem t = tv(ctx, tvar);
  y[0] = t * y[0];
  LinComb fam = distribution_element(ctx, N, y);
  if (fam.is_zero()) return;
  derive_if_new(db, fam, tvar, SpecPoint::at(tvar, FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(tvar), "inf");
}

bool close_wedge_with_five_terms(RelationDB& db, const WedgeElem& w, size_t tvar,
                                 size_t candidate_budget) {
  const FieldCtx* ctx = db.ctx();
  auto residual = wedge_residual(w, db);
  if (residual.empty()) return true;

  // Collect the (1, 2) residual grouped by the weight-1 leaf, plus the
  // cross-ratio seeds of every weight-2 symbol involved.
  std::map<BaseKey, LinComb> per_leaf;
  std::vector<FieldElem> seeds;
  for (auto& [key, c] : residual) {
    const CanonLeg *lo = &key.first, *hi = &key.second;
    Rat cc = c;
    if (lo->weight != 1 || hi->weight != 2) return false;  // only weight-3 wedges here
    LinComb& acc = per_leaf.try_emplace(lo->key, LinComb(2)).first->second;
    acc.add(hi->sym, cc);
    seeds.push_back(hi->sym.xs[2]);
  }
  std::vector<FieldElem> cands = argument_closure(ctx, seeds, candidate_budget);

  // Rows: db-reduced five-term images under L2.
  TrackedSolver<CorrSym, std::pair<FieldElem, FieldElem>> solver;
  FieldElem one(ctx, Rat(1));
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = 0; j < cands.size(); ++j) {
      if (i == j) continue;
      const FieldElem& a = cands[i];
      const FieldElem& b = cands[j];
      LinComb row = db.reduce(map_L2(ctx, five_term_vector(ctx, a, b)));
      if (row.is_zero()) continue;
      solver.add_row(row.terms(), {a, b});
    }

  std::set<std::pair<std::string, std::string>> used;
  std::vector<std::pair<FieldElem, FieldElem>> to_seed;
  for (auto& [leaf, e] : per_leaf) {
    auto sol = solver.solve(db.reduce(e).terms());
    if (!sol) return false;
    for (auto& [tag, coef] : *sol) {
      if (coef == 0) continue;
      if (used.emplace(tag.first.str(), tag.second.str()).second) to_seed.push_back(tag);
    }
  }
  for (auto& [a, b] : to_seed) seed_five_term(db, a, b, tvar);
  return wedge_is_zero(w, db);
}

namespace {

std::vector<CorrSym> residual_syms(const WedgeElem& w, const RelationDB& db) {
  std::set<CorrSym> syms;
  for (auto& [key, c] : wedge_residual(w, db)) {
    if (key.first.weight >= 2) syms.insert(key.first.sym);
    if (key.second.weight >= 2) syms.insert(key.second.sym);
  }
  return {syms.begin(), syms.end()};
}

// Ensures the family cobracket certifies, seeding reversal instances of the
// residual legs and closing weight-2 residue with five-term derivations.
bool ensure_family_certified(RelationDB& db, const LinComb& fam, std::span<const size_t> aux) {
  const FieldCtx* ctx = db.ctx();
  WedgeElem w = cobracket(ctx, fam);
  if (wedge_is_zero(w, db)) return true;
  if (aux.size() >= 2) {
    for (int round = 0; round < 2; ++round) {
      auto syms = residual_syms(w, db);
      if (syms.empty()) break;
      for (auto& s : syms)
        if (s.weight() >= 3) seed_reversal(db, s.xs, aux.subspan(1));
      for (auto& s : syms)
        if (s.weight() == 2) seed_reversal2(db, s.xs[0], s.xs[1], s.xs[2], aux[1]);
      if (wedge_is_zero(w, db)) return true;
    }
  }
  if (fam.weight() == 3 && close_wedge_with_five_terms(db, w, aux.size() >= 2 ? aux[1] : aux[0], 64))
    return true;
  return wedge_is_zero(w, db);
}

}  // namespace

void seed_reversal(RelationDB& db, std::span<const FieldElem> x, std::span<const size_t> aux) {
  const FieldCtx* ctx = db.ctx();
  int n = (int)x.size() - 1;
  if (n < 2 || aux.empty()) return;
  if (n == 2) {
    seed_reversal2(db, x[0], x[1], x[2], aux[0]);
    return;
  }
  std::vector<FieldElem> y = head_nonzero(ctx, x);
  FieldElem t = tv(ctx, aux[0]);
  y[0] = t * y[0];
  LinComb fam = reversal_element(ctx, y);
  if (fam.is_zero()) return;
  // already derivable?
  LinComb inst = specialize(ctx, fam, SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))));
  if (db.contains(inst)) return;
  if (!ensure_family_certified(db, fam, aux)) return;
  derive_if_new(db, fam, aux[0], SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(aux[0]), "inf");
}

void seed_shuffle(RelationDB& db, std::span<const FieldElem> x, int n1, int n2,
                  std::span<const size_t> aux) {
  const FieldCtx* ctx = db.ctx();
  int n = n1 + n2;
  if (aux.empty()) return;
  if (n == 2) {
    seed_shuffle2(db, x[0], x[1], x[2], aux[0]);
    return;
  }
  std::vector<FieldElem> y = head_nonzero(ctx, x);
  FieldElem t = tv(ctx, aux[0]);
  y[0] = t * y[0];
  LinComb fam = shuffle_element(ctx, y, n1, n2);
  if (fam.is_zero()) return;
  LinComb inst = specialize(ctx, fam, SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))));
  if (db.contains(inst)) return;
  if (!ensure_family_certified(db, fam, aux)) {
    // fall back: seed shuffle sub-instances on entry triples, then retry
    if (aux.size() >= 2) {
      for (size_t i = 1; i < y.size(); ++i)
        for (size_t j = 1; j < y.size(); ++j) {
          if (i == j) continue;
          seed_shuffle2(db, y[0], y[i], y[j], aux[1]);
          for (size_t k = 1; k < y.size(); ++k)
            if (k != i && k != j) seed_shuffle2(db, y[k], y[i], y[j], aux[1]);
        }
      ensure_family_certified(db, fam, aux);
    }
  }
  derive_if_new(db, fam, aux[0], SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(aux[0]), "inf");
}

void seed_distribution(RelationDB& db, unsigned N, std::span<const FieldElem> x,
                       std::span<const size_t> aux) {
  const FieldCtx* ctx = db.ctx();
  int n = (int)x.size() - 1;
  if (aux.empty()) return;
  if (n == 2) {
    seed_distribution2(db, N, x, aux[0]);
    return;
  }
  std::vector<FieldElem> y = head_nonzero(ctx, x);
  FieldElem t = tv(ctx, aux[0]);
  y[0] = t * y[0];
  LinComb fam = distribution_element(ctx, N, y);
  if (fam.is_zero()) return;
  LinComb inst = specialize(ctx, fam, SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))));
  if (db.contains(inst)) return;
  if (!ensure_family_certified(db, fam, aux)) {
    if (aux.size() >= 2) {
      // distribution at lower weight on sub-tuples
      for (size_t i = 1; i < y.size(); ++i)
        for (size_t j = 1; j < y.size(); ++j) {
          if (i == j) continue;
          seed_distribution2(db, N, std::vector<FieldElem>{y[0], y[i], y[j]}, aux[1]);
        }
      ensure_family_certified(db, fam, aux);
    }
  }
  derive_if_new(db, fam, aux[0], SpecPoint::at(aux[0], FieldElem(ctx, Rat(1))), "1",
                SpecPoint::at_infinity(aux[0]), "inf");
}

}  // namespace plg
