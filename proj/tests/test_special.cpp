#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plg/special.hpp"
#include "plg/wedge.hpp"

using namespace plg;

namespace {

struct Fx {
  FieldCtx ctx{{"t", "s"}};
  FieldElem t = FieldElem::variable(&ctx, 0);
  FieldElem s = FieldElem::variable(&ctx, 1);
  FieldElem q(long n, long d = 1) { return FieldElem(&ctx, rat_of(n, d)); }
  LinComb N(std::vector<FieldElem> xs) { return normalize(&ctx, xs); }
};

std::vector<FieldElem> random_tuple(Fx& F, std::mt19937_64& rng, int weight) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, 2), kind(0, 2);
  std::vector<FieldElem> xs;
  for (int i = 0; i <= weight; ++i) {
    if (kind(rng) == 0)
      xs.push_back(F.q(c(rng)));
    else
      xs.push_back(F.t.pow(d(rng)) * F.q(c(rng) == 0 ? 2 : c(rng)) + F.q(c(rng)) * F.s);
  }
  return xs;
}

WedgeElem specialize_wedge(Fx& F, const WedgeElem& w, const SpecPoint& p) {
  WedgeElem out(&F.ctx);
  for (auto& t : w.raw()) {
    auto spec_leg = [&](const Leg& l, Leg& res) -> bool {
      if (l.weight == 1) {
        MultWord mw = specialize_weight1(&F.ctx, l.word, p);
        if (F.ctx.factors().is_zero(mw)) return false;
        res = Leg::from_word(std::move(mw));
        return true;
      }
      LinComb lc(l.weight);
      lc.add(l.sym, Rat(1));
      LinComb sp = specialize(&F.ctx, lc, p);
      if (sp.is_zero()) return false;
      if (sp.weight() == 1) {
        MultWord mw = weight1_word(&F.ctx, sp);
        if (F.ctx.factors().is_zero(mw)) return false;
        res = Leg::from_word(std::move(mw));
        return true;
      }
      res = Leg::from_sym(sp.terms().begin()->first);
      return true;
    };
    Leg a, b;
    if (!spec_leg(t.a, a) || !spec_leg(t.b, b)) continue;
    out.add(a, b, t.c);
  }
  return out;
}

}  // namespace

TEST_CASE("specialization examples") {
  Fx F;
  SpecPoint p0 = SpecPoint::at(0, F.q(0));
  SpecPoint p1 = SpecPoint::at(0, F.q(1));
  SpecPoint pinf = SpecPoint::at_infinity(0);

  // Sp_{t->0} cor(0, t, t^2) = cor(0, 1, 0) = 0
  CHECK(specialize(&F.ctx, F.N({F.q(0), F.t, F.t * F.t}), p0).is_zero());
  // Sp_{t->inf} cor(t*x0, 0, 0) with x0 = 3: becomes cor(1,0,0) = 0
  CHECK(specialize(&F.ctx, F.N({F.t * F.q(3), F.q(0), F.q(0)}), pinf).is_zero());
  // Sp_{t->1} cor(1, 0, t^2) = cor(1, 0, 1)
  CHECK(specialize(&F.ctx, F.N({F.q(1), F.q(0), F.t * F.t}), p1) ==
        F.N({F.q(1), F.q(0), F.q(1)}));
}

TEST_CASE("weight-1 specialization examples") {
  Fx F;
  auto& fb = F.ctx.factors();
  SpecPoint p0 = SpecPoint::at(0, F.q(0));
  SpecPoint p1 = SpecPoint::at(0, F.q(1));
  // Sp_{t->0} log(t) = 0
  CHECK(fb.is_zero(specialize_weight1(&F.ctx, fb.word_of(F.t), p0)));
  // Sp_{t->0} log(1-t) = 0
  CHECK(fb.is_zero(specialize_weight1(&F.ctx, fb.word_of(F.q(1) - F.t), p0)));
  // Sp_{t->1} log(2t) = log 2
  CHECK(fb.equal(specialize_weight1(&F.ctx, fb.word_of(F.q(2) * F.t), p1), fb.word_of(F.q(2))));
}

TEST_CASE("weight-1 agreement: symbol route vs multiplicative route") {
  Fx F;
  auto& fb = F.ctx.factors();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto xs = random_tuple(F, rng, 1);
    if ((xs[1] - xs[0]).is_zero()) continue;
    std::uniform_int_distribution<int> cc(-1, 2);
    int c = cc(rng);
    SpecPoint p = c == 2 ? SpecPoint::at_infinity(0) : SpecPoint::at(0, F.q(c));
    LinComb e = F.N(xs);
    if (e.is_zero()) continue;
    LinComb sp = specialize(&F.ctx, e, p);
    MultWord via_sym = weight1_word(&F.ctx, sp);
    MultWord via_word = specialize_weight1(&F.ctx, weight1_word(&F.ctx, e), p);
    CHECK(fb.equal(via_sym, via_word));
  }
}

TEST_CASE("specialization commutes with the cobracket") {
  Fx F;
  std::mt19937_64 rng(29);
  int done = 0;
  for (int i = 0; i < 200 && done < 100; ++i) {
    int w = 2 + (int)(rng() % 3);
    LinComb e = F.N(random_tuple(F, rng, w));
    if (e.is_zero()) continue;
    std::uniform_int_distribution<int> cc(-1, 2);
    int c = cc(rng);
    SpecPoint p = c == 2 ? SpecPoint::at_infinity(0) : SpecPoint::at(0, F.q(c));
    WedgeElem lhs = cobracket(&F.ctx, specialize(&F.ctx, e, p));
    WedgeElem rhs = specialize_wedge(F, cobracket(&F.ctx, e), p);
    CHECK(lhs.equal(rhs));
    ++done;
  }
}

TEST_CASE("linearity and the section property") {
  Fx F;
  std::mt19937_64 rng(43);
  SpecPoint p0 = SpecPoint::at(0, F.q(0));
  for (int i = 0; i < 25; ++i) {
    LinComb a = F.N(random_tuple(F, rng, 2)), b = F.N(random_tuple(F, rng, 2));
    CHECK(specialize(&F.ctx, a + b * rat_of(3, 2), p0) ==
          specialize(&F.ctx, a, p0) + specialize(&F.ctx, b, p0) * rat_of(3, 2));
  }
  // constants over F lift and specialize back to themselves
  for (int i = 0; i < 25; ++i) {
    std::vector<FieldElem> xs;
    std::uniform_int_distribution<int> c(-4, 4);
    for (int j = 0; j < 4; ++j) xs.push_back(F.s * F.q(c(rng)) + F.q(c(rng)));
    LinComb e = F.N(xs);
    std::uniform_int_distribution<int> cc(-1, 2);
    int cv = cc(rng);
    SpecPoint p = cv == 2 ? SpecPoint::at_infinity(0) : SpecPoint::at(0, F.q(cv));
    CHECK(specialize(&F.ctx, e, p) == e);
  }
}

TEST_CASE("uniformizer independence at weight >= 2") {
  Fx F;
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    LinComb e = F.N(random_tuple(F, rng, 2 + (int)(rng() % 2)));
    if (e.is_zero()) continue;
    // specializing after scaling the variable by c in Q^x changes the
    // uniformizer t-a to c(t-a'); results at matching centers must agree
    std::uniform_int_distribution<int> cd(1, 4);
    long c = cd(rng);
    LinComb scaled(e.weight());
    for (auto& [sym, co] : e.terms()) {
      std::vector<FieldElem> ys;
      for (auto& x : sym.xs) ys.push_back(x.substitute(0, F.t * F.q(c)));
      scaled = scaled + normalize(&F.ctx, ys) * co;
    }
    SpecPoint p = SpecPoint::at(0, F.q(2));
    SpecPoint pc = SpecPoint::at(0, F.q(2, c));
    CHECK(specialize(&F.ctx, e, p) == specialize(&F.ctx, scaled, pc));
  }
}
