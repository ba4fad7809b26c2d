#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace solvzeta {

// Exact scalars. Everything in this library computes over these; there is
// no floating point anywhere in core.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long lcm_long(long a, long b) {
  Int r = int_lcm(Int(a), Int(b));
  return r.get_si();
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// mpq_class arithmetic keeps values canonical; direct construction does not.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Requires is_integer(q).
inline Int to_int(const Rat& q) { return q.get_num(); }

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace solvzeta
