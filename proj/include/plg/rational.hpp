#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace plg {

// Exact rational coefficients. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalization, which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat out;
  if (e > 0) {
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), b.get_num().get_mpz_t(), (unsigned long)e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), b.get_den().get_mpz_t(), (unsigned long)e);
  } else {
    if (b == 0) throw Error("rat_pow: zero to negative power");
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), b.get_den().get_mpz_t(), (unsigned long)(-e));
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), b.get_num().get_mpz_t(), (unsigned long)(-e));
  }
  out.canonicalize();
  return out;
}

// Prime factorization of a nonzero integer (sign ignored).
// Trial division, then Pollard rho for any stubborn cofactor.
std::map<Int, long> factor_integer(Int n);

// Factorization of |q| as a signed-exponent prime map.
inline std::map<Int, long> factor_rational(const Rat& q) {
  if (q == 0) throw Error("factor_rational: zero");
  std::map<Int, long> out = factor_integer(q.get_num());
  for (auto& [p, e] : factor_integer(q.get_den())) out[p] -= e;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace plg
