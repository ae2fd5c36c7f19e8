#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plg/factorbase.hpp"
#include "plg/field.hpp"

using namespace plg;

namespace {

struct Q_t {
  FieldCtx ctx{{"t", "s"}};
  FieldElem t = FieldElem::variable(&ctx, 0);
  FieldElem s = FieldElem::variable(&ctx, 1);
  FieldElem q(long n, long d = 1) { return FieldElem(&ctx, rat_of(n, d)); }
};

FieldElem random_fe(Q_t& F, std::mt19937_64& rng, int maxdeg = 2) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, maxdeg);
  auto rand_poly = [&]() {
    Poly p(F.ctx.nvars(), Rat(0));
    for (int k = 0; k <= maxdeg; ++k) {
      int c = coef(rng);
      if (c == 0) continue;
      Mono m(F.ctx.nvars(), 0);
      m[0] = (uint32_t)deg(rng);
      p.add_term(m, Rat(c));
    }
    return p;
  };
  Poly n = rand_poly(), d = rand_poly();
  if (d.is_zero()) d = Poly(F.ctx.nvars(), Rat(1));
  return FieldElem::make(&F.ctx, n, d);
}

}  // namespace

TEST_CASE("rational arithmetic canonical") {
  CHECK(rat_of(2, 4) == rat_of(1, 2));
  CHECK(rat_pow(rat_of(2, 3), -2) == rat_of(9, 4));
  auto f = factor_rational(rat_of(-12, 35));
  CHECK(f[Int(2)] == 2);
  CHECK(f[Int(3)] == 1);
  CHECK(f[Int(5)] == -1);
  CHECK(f[Int(7)] == -1);
}

TEST_CASE("field arithmetic examples") {
  Q_t F;
  // (t) + (1-t) = 1
  CHECK(F.t + (F.q(1) - F.t) == F.q(1));
  // t/(t-1) * (t-1) = t
  CHECK((F.t / (F.t - F.q(1))) * (F.t - F.q(1)) == F.t);
  // (t^2-1)/(t+1) = t-1 via gcd
  FieldElem e = (F.t * F.t - F.q(1)) / (F.t + F.q(1));
  CHECK(e == F.t - F.q(1));
  CHECK_THROWS_AS(F.q(1) / F.q(0), Error);
}

TEST_CASE("canonical form equals evaluation at random points") {
  Q_t F;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pt(2, 40);
  for (int i = 0; i < 20; ++i) {
    FieldElem a = random_fe(F, rng), b = random_fe(F, rng);
    FieldElem sum = a + b, prod = a * b;
    for (int j = 0; j < 20; ++j) {
      FieldElem x = F.q(pt(rng), pt(rng) + 41);
      FieldElem an = a.substitute(0, x), bn = b.substitute(0, x);
      if (a.den().subst_fraction(0, x.num(), x.den()).first.is_zero()) continue;
      if (b.den().subst_fraction(0, x.num(), x.den()).first.is_zero()) continue;
      if (sum.den().subst_fraction(0, x.num(), x.den()).first.is_zero()) continue;
      if (prod.den().subst_fraction(0, x.num(), x.den()).first.is_zero()) continue;
      CHECK(sum.substitute(0, x) == an + bn);
      CHECK(prod.substitute(0, x) == an * bn);
    }
  }
}

TEST_CASE("valuations") {
  Q_t F;
  Valuation v0{0, F.q(0)};
  Valuation v1{0, F.q(1)};
  Valuation vinf{0, std::nullopt};
  CHECK(valuation_of(F.t * F.t, v0) == 2);
  CHECK(valuation_of(F.t / (F.t - F.q(1)), v1) == -1);
  CHECK(valuation_of(F.t, vinf) == -1);
  CHECK(valuation_of(F.q(0), v0) == VAL_INF);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    FieldElem a = random_fe(F, rng), b = random_fe(F, rng);
    if (a.is_zero() || b.is_zero()) continue;
    std::uniform_int_distribution<int> c(-1, 2);
    int cc = c(rng);
    Valuation nu = cc == 2 ? vinf : Valuation{0, F.q(cc)};
    CHECK(valuation_of(a * b, nu) == valuation_of(a, nu) + valuation_of(b, nu));
    if (!(a + b).is_zero())
      CHECK(valuation_of(a + b, nu) >= std::min(valuation_of(a, nu), valuation_of(b, nu)));
  }
}

TEST_CASE("residues") {
  Q_t F;
  Valuation v0{0, F.q(0)};
  Valuation v1{0, F.q(1)};
  Valuation vinf{0, std::nullopt};
  CHECK(residue(F.t + F.q(3), v0) == F.q(3));
  // (t^2+s)/(t+1) at t=1 -> (1+s)/2
  FieldElem e = (F.t * F.t + F.s) / (F.t + F.q(1));
  CHECK(residue(e, v1) == (F.q(1) + F.s) / F.q(2));
  // (2t+1)/t at infinity -> 2
  CHECK(residue((F.q(2) * F.t + F.q(1)) / F.t, vinf) == F.q(2));
  CHECK_THROWS_AS(residue(F.t.inverse(), v0), Error);
}

TEST_CASE("mult words") {
  Q_t F;
  auto& fb = F.ctx.factors();
  // 4 -> {2:2}
  MultWord w4 = fb.word_of(F.q(4));
  ResolvedWord r4 = fb.resolve(w4);
  REQUIRE(r4.size() == 1);
  CHECK(r4.begin()->first.kind == 0);
  CHECK(r4.begin()->first.prime == 2);
  CHECK(r4.begin()->second == 2);
  // -(1-t): the sign is torsion
  MultWord wt = fb.word_of(-(F.q(1) - F.t));
  ResolvedWord rt = fb.resolve(wt);
  REQUIRE(rt.size() == 1);
  CHECK(rt.begin()->second == 1);
  // t^2 (t-1) / s -> {t:2, t-1:1, s:-1}
  MultWord w = fb.word_of(F.t * F.t * (F.t - F.q(1)) / F.s);
  CHECK(fb.resolve(w).size() == 3);
  CHECK_THROWS_AS(fb.word_of(F.q(0)), Error);
}

TEST_CASE("word_of is multiplicative and base stays coprime") {
  Q_t F;
  auto& fb = F.ctx.factors();
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    FieldElem a = random_fe(F, rng), b = random_fe(F, rng);
    if (a.is_zero() || b.is_zero()) continue;
    MultWord wa = fb.word_of(a), wb = fb.word_of(b), wab = fb.word_of(a * b);
    CHECK(fb.equal(wa + wb, wab));
  }
  auto leaves = fb.poly_leaves();
  for (size_t i = 0; i < leaves.size(); ++i)
    for (size_t j = i + 1; j < leaves.size(); ++j)
      CHECK(poly_gcd(leaves[i], leaves[j]).is_constant());
}

TEST_CASE("refinement keeps earlier words valid") {
  Q_t F;
  auto& fb = F.ctx.factors();
  // t^2-1 enters whole, then t-1 splits it
  MultWord w = fb.word_of(F.t * F.t - F.q(1));
  MultWord w1 = fb.word_of(F.t - F.q(1));
  MultWord w2 = fb.word_of(F.t + F.q(1));
  CHECK(fb.equal(w, w1 + w2));
}

TEST_CASE("cyclotomic context") {
  FieldCtx C({"x"}, 5);
  FieldElem z = FieldElem::zeta(&C);
  FieldElem one(&C, Rat(1));
  CHECK(z.pow(5) == one);
  CHECK(z.is_torsion_unit());
  // inverse of (1 - zeta) exists and multiplies back
  FieldElem u = one - z;
  CHECK(u * u.inverse() == one);
  // norm fact: product of (1 - zeta^k), k=1..4, equals 5
  FieldElem prod = one;
  for (unsigned k = 1; k < 5; ++k) prod = prod * (one - FieldElem::zeta(&C, k));
  CHECK(prod == FieldElem(&C, Rat(5)));
  // x^5 - 1 factors into the five linear pieces
  FieldElem x = FieldElem::variable(&C, 0);
  FieldElem lhs = x.pow(5) - one;
  FieldElem rhs = one;
  for (unsigned k = 0; k < 5; ++k) rhs = rhs * (x - FieldElem::zeta(&C, k));
  CHECK(lhs == rhs);
}

TEST_CASE("global order on field elements") {
  Q_t F;
  CHECK(F.q(0) < F.q(1));
  CHECK(F.q(-1) < F.q(1, 2));
  CHECK(F.q(1, 2) < F.q(2));
  CHECK(F.q(5) < F.t);
  CHECK(F.t.cmp(F.t) == std::strong_ordering::equal);
}
