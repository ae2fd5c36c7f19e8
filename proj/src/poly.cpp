#include "plg/poly.hpp"

#include <cassert>
#include <sstream>

namespace plg {

const Rat& Poly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

const Mono& Poly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  if (nvars_ == 0) nvars_ = m.size();
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  if (r.nvars_ == 0) r.nvars_ = o.nvars_;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  if (r.nvars_ == 0) r.nvars_ = o.nvars_;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  r.nvars_ = nvars_ ? nvars_ : o.nvars_;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(nvars_, Rat(0));
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::pow(uint32_t e) const {
  Poly r(nvars_, Rat(1));
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(size_t var) const {
  Poly r;
  r.nvars_ = nvars_;
  for (auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * Rat((long)m[var]));
  }
  return r;
}

Poly Poly::coeff_of(size_t var, uint32_t k) const {
  Poly r;
  r.nvars_ = nvars_;
  for (auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Mono d = m;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

std::pair<Poly, Poly> Poly::subst_fraction(size_t var, const Poly& n, const Poly& d) const {
  int deg = degree_in(var);
  if (deg <= 0) return {*this, Poly(nvars_, Rat(1))};
  // Horner in var: sum coeff_k * n^k * d^(deg-k)
  Poly acc;
  acc.nvars_ = nvars_;
  for (int k = deg; k >= 0; --k) {
    acc = acc * n + coeff_of(var, (uint32_t)k) * d.pow((uint32_t)(deg - k));
  }
  return {acc, d.pow((uint32_t)deg)};
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  if (o.is_zero()) return std::nullopt;
  Poly rem = *this;
  Poly q;
  q.nvars_ = nvars_;
  const Mono& lmo = o.leading_mono();
  const Rat& lco = o.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& lm = rem.leading_mono();
    Mono t(lm.size());
    for (size_t i = 0; i < lm.size(); ++i) {
      if (lm[i] < lmo[i]) return std::nullopt;
      t[i] = lm[i] - lmo[i];
    }
    Rat tc = rem.leading_coeff() / lco;
    Poly term;
    term.nvars_ = nvars_;
    term.add_term(t, tc);
    q.add_term(t, tc);
    rem = rem - term * o;
  }
  return q;
}

std::strong_ordering Poly::cmp(const Poly& o) const {
  if (int c = total_degree(); c != o.total_degree()) return c <=> o.total_degree();
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (auto c = mono_cmp(it->first, jt->first); c != 0) return c;
    if (it->second != jt->second)
      return it->second < jt->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (it != terms_.end()) return std::strong_ordering::greater;
  if (jt != o.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (ac != 1 || mono_total_degree(m) == 0) {
      os << ac.get_str();
      printed = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> pseudo_divide(const Poly& f, const Poly& g, size_t var) {
  int df = f.degree_in(var), dg = g.degree_in(var);
  assert(dg >= 0);
  if (df < dg) return {Poly(f.nvars(), Rat(0)), f};
  Poly lcg = g.coeff_of(var, (uint32_t)dg);
  Poly r = f;
  Poly q;
  int steps = df - dg + 1;
  for (int k = 0; k < steps; ++k) {
    int dr = r.degree_in(var);
    if (dr < dg) {
      // multiply through remaining factors of lcg to honor the contract
      for (int j = k; j < steps; ++j) {
        q = q * lcg;
        r = r * lcg;
      }
      break;
    }
    Poly lcr = r.coeff_of(var, (uint32_t)dr);
    Poly shift = Poly::variable(f.nvars(), var, (uint32_t)(dr - dg));
    q = q * lcg + lcr * shift;
    r = r * lcg - lcr * shift * g;
  }
  return {q, r};
}

Poly poly_content(const Poly& f, size_t var) {
  Poly c;
  int d = f.degree_in(var);
  for (int k = 0; k <= d; ++k) {
    Poly ck = f.coeff_of(var, (uint32_t)k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : poly_gcd(c, ck);
    if (c.is_constant()) break;
  }
  if (c.is_zero()) return Poly(f.nvars(), Rat(0));
  return c;
}

Poly poly_primitive(const Poly& f, size_t var) {
  Poly c = poly_content(f, var);
  if (c.is_zero()) return f;
  return *f.divide_exact(c);
}

static Poly make_monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * (Rat(1) / f.leading_coeff());
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(a.nvars(), Rat(1));

  // main variable: lowest index occurring in either
  size_t var = a.nvars();
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.depends_on(i) || b.depends_on(i)) {
      var = i;
      break;
    }
  assert(var < a.nvars());
  if (!a.depends_on(var)) return poly_gcd(a, poly_content(b, var));
  if (!b.depends_on(var)) return poly_gcd(poly_content(a, var), b);

  Poly ca = poly_content(a, var), cb = poly_content(b, var);
  Poly d = poly_gcd(ca, cb);
  Poly F = *a.divide_exact(ca);
  Poly G = *b.divide_exact(cb);
  if (F.degree_in(var) < G.degree_in(var)) std::swap(F, G);

  // subresultant PRS
  Poly g(a.nvars(), Rat(1)), h(a.nvars(), Rat(1));
  Poly gcd_pp;
  while (true) {
    int delta = F.degree_in(var) - G.degree_in(var);
    Poly R = pseudo_divide(F, G, var).second;
    if (R.is_zero()) {
      gcd_pp = poly_primitive(G, var);
      break;
    }
    if (R.degree_in(var) == 0) {
      gcd_pp = Poly(a.nvars(), Rat(1));
      break;
    }
    F = G;
    Poly divisor = g * h.pow((uint32_t)delta);
    G = *R.divide_exact(divisor);
    g = F.coeff_of(var, (uint32_t)F.degree_in(var));
    if (delta > 0) {
      Poly num = g.pow((uint32_t)delta);
      h = *num.divide_exact(h.pow((uint32_t)(delta - 1)));
    }
  }
  return make_monic(d * gcd_pp);
}

std::map<Int, long> factor_integer(Int n) {
  std::map<Int, long> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  auto add = [&](const Int& p, long e) { out[p] += e; };
  // trial division
  for (Int p = 2; p * p <= n && p < 100000; p = (p == 2 ? Int(3) : p + 2)) {
    while (n % p == 0) {
      add(p, 1);
      n /= p;
    }
  }
  if (n == 1) return out;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    add(n, 1);
    return out;
  }
  // Pollard rho for the rare large composite cofactor
  std::vector<Int> stack{n};
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
      add(m, 1);
      continue;
    }
    Int d = m;
    while (d == m) {
      Int x = rng.get_z_range(m - 2) + 2, y = x, c = rng.get_z_range(m - 1) + 1;
      d = 1;
      while (d == 1) {
        x = (x * x + c) % m;
        y = (y * y + c) % m;
        y = (y * y + c) % m;
        Int diff = x > y ? x - y : y - x;
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return out;
}

}  // namespace plg
