#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plg/wedge.hpp"

using namespace plg;

namespace {

struct Fx {
  FieldCtx ctx{{"t"}};
  FieldElem t = FieldElem::variable(&ctx, 0);
  FieldElem q(long n, long d = 1) { return FieldElem(&ctx, rat_of(n, d)); }
  LinComb N(std::vector<FieldElem> xs) { return normalize(&ctx, xs); }
  WedgeElem wedge1(const FieldElem& a, const FieldElem& b) {
    // log(a) /\ log(b)
    WedgeElem w(&ctx);
    w.add(Leg::from_word(ctx.factors().word_of(a)), Leg::from_word(ctx.factors().word_of(b)),
          Rat(1));
    return w;
  }
};

std::vector<FieldElem> random_tuple(Fx& F, std::mt19937_64& rng, int weight) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, 2), kind(0, 3);
  std::vector<FieldElem> xs;
  for (int i = 0; i <= weight; ++i) {
    if (kind(rng) == 0) {
      xs.push_back(F.q(c(rng)));
    } else {
      FieldElem v = F.t.pow(d(rng)) * F.q(c(rng) == 0 ? 1 : c(rng)) + F.q(c(rng));
      xs.push_back(v);
    }
  }
  return xs;
}

}  // namespace

TEST_CASE("normalize: degenerate tuples vanish") {
  Fx F;
  CHECK(F.N({F.q(0), F.q(0), F.q(0)}).is_zero());
  CHECK(F.N({F.q(1), F.q(0), F.q(0)}).is_zero());
  CHECK(F.N({F.q(5), F.q(5), F.q(5)}).is_zero());
  CHECK(F.N({F.q(0), F.t, F.t}).is_zero());  // orbit of (1,0,...,0)
  CHECK_THROWS_AS(F.N({F.q(1)}), Error);
}

TEST_CASE("normalize: rotation-translation-scaling orbit of (3,5,7)") {
  Fx F;
  LinComb n = F.N({F.q(3), F.q(5), F.q(7)});
  REQUIRE(n.terms().size() == 1);
  const CorrSym& s = n.terms().begin()->first;
  // orbit candidates are (0,1,2), (0,1,-1), (0,1,1/2); least is (0,1,-1)
  CHECK(s.xs[0] == F.q(0));
  CHECK(s.xs[1] == F.q(1));
  CHECK(s.xs[2] == F.q(-1));
  CHECK(n.terms().begin()->second == 1);
}

TEST_CASE("normalize: cyclic rotations agree, idempotent") {
  Fx F;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto xs = random_tuple(F, rng, 2 + (int)(rng() % 3));
    auto rot = xs;
    std::rotate(rot.begin(), rot.begin() + 1 + (int)(rng() % xs.size() - 1), rot.end());
    CHECK(F.N(xs) == F.N(rot));
    LinComb n = F.N(xs);
    if (!n.is_zero()) {
      CHECK(F.N(n.terms().begin()->first.xs) == n);
    }
  }
}

TEST_CASE("weight-1 values") {
  Fx F;
  auto& fb = F.ctx.factors();
  // (0, x) -> log x
  CHECK(fb.equal(weight1_value(F.q(0), F.t), fb.word_of(F.t)));
  // (5, 3) -> {2:1}
  CHECK(fb.equal(weight1_value(F.q(5), F.q(3)), fb.word_of(F.q(2))));
  // (0, -1) -> empty
  CHECK(fb.is_zero(weight1_value(F.q(0), F.q(-1))));
  // ((mx,my)) = log(m) + ((x,y))
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    FieldElem m = F.t + F.q((long)(rng() % 5) + 1);
    FieldElem x = F.q((long)(rng() % 7) - 3), y = F.t * F.q((long)(rng() % 5) + 1);
    if ((y - x).is_zero()) continue;
    CHECK(fb.equal(weight1_value(m * x, m * y), fb.word_of(m) + weight1_value(x, y)));
  }
}

TEST_CASE("cobracket examples") {
  Fx F;
  // cor(0,1,t) -> log(t) /\ log(t-1)
  WedgeElem d = cobracket(&F.ctx, F.N({F.q(0), F.q(1), F.t}));
  CHECK(d.equal(F.wedge1(F.t, F.t - F.q(1))));
  // cor(0,1,0) = 0 as a symbol
  CHECK(F.N({F.q(0), F.q(1), F.q(0)}).is_zero());
  // -cor(1,0,x): delta = log(x) /\ log(x-1)
  LinComb li2 = F.N({F.q(1), F.q(0), F.t}) * Rat(-1);
  CHECK(cobracket(&F.ctx, li2).equal(F.wedge1(F.t, F.t - F.q(1))));
  // log(t) /\ log(t) = 0
  CHECK(F.wedge1(F.t, F.t).exact_zero());
}

TEST_CASE("antisymmetry of the cobracket") {
  Fx F;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    LinComb e = F.N(random_tuple(F, rng, 2 + (int)(rng() % 3)));
    WedgeElem d = cobracket(&F.ctx, e);
    CHECK(d.swap_legs().equal(d * Rat(-1)));
  }
}

TEST_CASE("coJacobi identity on random symbols") {
  Fx F;
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    int w = 2 + (int)(rng() % 4);
    LinComb e = F.N(random_tuple(F, rng, w));
    CHECK(Tensor3::cojacobi(&F.ctx, e).exact_zero());
  }
}

TEST_CASE("well-definedness under A-moves") {
  Fx F;
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    auto xs = random_tuple(F, rng, 2 + (int)(rng() % 3));
    auto moved = xs;
    switch (rng() % 3) {
      case 0:  // rotation
        std::rotate(moved.begin(), moved.begin() + 1, moved.end());
        break;
      case 1: {  // translation
        FieldElem b = F.t + F.q((long)(rng() % 5) - 2);
        for (auto& x : moved) x = x + b;
        break;
      }
      default: {  // scaling
        FieldElem m = F.q((long)(rng() % 4) + 2);
        for (auto& x : moved) x = x * m;
        break;
      }
    }
    CHECK(F.N(xs) == F.N(moved));
    WedgeElem da = cobracket_tuple(&F.ctx, xs, Rat(1));
    WedgeElem db = cobracket_tuple(&F.ctx, moved, Rat(1));
    CHECK(da.equal(db));
  }
}

TEST_CASE("truncated cobracket") {
  Fx F;
  // weight 2: everything is (1,1)
  CHECK(truncated_cobracket(&F.ctx, F.N({F.q(0), F.q(1), F.t})).exact_zero());
  // weight 3: both (1,2) and (2,1) are omitted, so 0
  CHECK(truncated_cobracket(&F.ctx, F.N({F.q(0), F.q(1), F.t, F.t * F.t})).exact_zero());
  // shuffle sum at weight 2
  LinComb sh = F.N({F.q(2), F.q(3), F.t}) + F.N({F.q(2), F.t, F.q(3)});
  CHECK(truncated_cobracket(&F.ctx, sh).exact_zero());
}

TEST_CASE("depth additivity of the truncated cobracket") {
  Fx F;
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int i = 0; i < 200 && seen < 30; ++i) {
    int w = 4 + (int)(rng() % 2);
    LinComb e = F.N(random_tuple(F, rng, w));
    if (e.is_zero()) continue;
    int k = e.terms().begin()->first.nonzero_entries() - 1;
    WedgeElem tr = truncated_cobracket(&F.ctx, e);
    for (auto& [key, c] : tr.canonical()) {
      ++seen;
      int k1 = key.first.sym.nonzero_entries() - 1;
      int k2 = key.second.sym.nonzero_entries() - 1;
      CHECK(k1 + k2 <= k);
    }
  }
}

TEST_CASE("depth bound") {
  Fx F;
  CHECK(depth_bound(F.N({F.q(1), F.q(0), F.t})) == 1);
  CHECK(F.N({F.q(0), F.q(0), F.q(0), F.t}).is_zero());
  LinComb all = F.N({F.q(2), F.q(3), F.q(5), F.t});
  CHECK(depth_bound(all) <= 3);
}
