// Factorization over Q: squarefree decomposition, cyclotomic extraction,
// rational roots, then Zassenhaus (factor mod p, Hensel lift, recombine) for
// what remains. Degrees stay small here, so naive recombination is fine.

#include <algorithm>
#include <random>

#include "solvzeta/errors.hpp"
#include "solvzeta/polynomial.hpp"

namespace solvzeta {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd word-size prime. Coefficients in [0, p).
// ---------------------------------------------------------------------------

using ModPoly = std::vector<long>;  // ascending, normalized

long mod_pow(long base, long exp, long p) {
  long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long>((static_cast<__int128>(r) * base) % p);
    base = static_cast<long>((static_cast<__int128>(base) * base) % p);
    exp >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) { return mod_pow(a, p - 2, p); }

void mp_normalize(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mp_deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<long>((r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p);
  }
  mp_normalize(r);
  return r;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  mp_normalize(a);
  return a;
}

// Remainder of a modulo monic-or-not b (b nonzero).
ModPoly mp_rem(ModPoly a, const ModPoly& b, long p) {
  long inv_lead = mod_inv(b.back(), p);
  while (mp_deg(a) >= mp_deg(b)) {
    long c = static_cast<long>((static_cast<__int128>(a.back()) * inv_lead) % p);
    int shift = mp_deg(a) - mp_deg(b);
    for (size_t i = 0; i < b.size(); ++i) {
      size_t k = i + shift;
      a[k] = static_cast<long>(((a[k] - static_cast<__int128>(c) * b[i]) % p + p) % p);
    }
    mp_normalize(a);
    if (a.empty()) break;
  }
  return a;
}

ModPoly mp_monic(ModPoly f, long p) {
  if (f.empty()) return f;
  long inv = mod_inv(f.back(), p);
  for (auto& c : f) c = static_cast<long>((static_cast<__int128>(c) * inv) % p);
  return f;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), p);
}

ModPoly mp_derivative(const ModPoly& f, long p) {
  if (f.size() <= 1) return {};
  ModPoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i)
    r[i - 1] = static_cast<long>((static_cast<__int128>(f[i]) * (i % p)) % p);
  mp_normalize(r);
  return r;
}

ModPoly mp_powmod(ModPoly base, Int exp, const ModPoly& mod, long p) {
  ModPoly r{1};
  base = mp_rem(std::move(base), mod, p);
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = mp_rem(mp_mul(r, base, p), mod, p);
    base = mp_rem(mp_mul(base, base, p), mod, p);
    exp >>= 1;
  }
  return r;
}

// Quotient of a by b; remainder must vanish.
ModPoly mp_divexact(const ModPoly& a, const ModPoly& b, long p) {
  ModPoly q;
  ModPoly rem = a;
  long inv_lead = mod_inv(b.back(), p);
  while (mp_deg(rem) >= mp_deg(b) && !rem.empty()) {
    long c = static_cast<long>((static_cast<__int128>(rem.back()) * inv_lead) % p);
    int shift = mp_deg(rem) - mp_deg(b);
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
    q[shift] = (q[shift] + c) % p;
    for (size_t i = 0; i < b.size(); ++i) {
      size_t k = i + shift;
      rem[k] = static_cast<long>(((rem[k] - static_cast<__int128>(c) * b[i]) % p + p) % p);
    }
    mp_normalize(rem);
  }
  if (!rem.empty()) throw InternalInconsistency("expected exact division mod p");
  mp_normalize(q);
  return q;
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree d.
void mp_equal_degree(const ModPoly& f, int d, long p, std::mt19937_64& rng,
                     std::vector<ModPoly>& out) {
  if (mp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent = (int_pow(Int(p), d) - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  while (true) {
    ModPoly a(mp_deg(f), 0);
    for (auto& c : a) c = dist(rng);
    mp_normalize(a);
    if (mp_deg(a) < 1) continue;
    ModPoly g = mp_gcd(a, f, p);
    if (mp_deg(g) == 0) {
      ModPoly b = mp_powmod(a, exponent, f, p);
      if (!b.empty()) b[0] = (b[0] - 1 + p) % p;
      mp_normalize(b);
      g = mp_gcd(b, f, p);
    }
    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
      mp_equal_degree(g, d, p, rng, out);
      mp_equal_degree(mp_divexact(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x] with big modulus m for Hensel lifting.
// Coefficients kept in [0, m).
// ---------------------------------------------------------------------------

using ZmPoly = std::vector<Int>;

void zm_normalize(ZmPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZmPoly zm_reduce(const ZmPoly& f, const Int& m) {
  ZmPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  }
  zm_normalize(r);
  return r;
}

ZmPoly zm_add(ZmPoly a, const ZmPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) {
    a[i] += b[i];
    if (a[i] >= m) a[i] -= m;
  }
  zm_normalize(a);
  return a;
}

ZmPoly zm_sub(ZmPoly a, const ZmPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) {
    a[i] -= b[i];
    if (a[i] < 0) a[i] += m;
  }
  zm_normalize(a);
  return a;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZmPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zm_reduce(r, m);
}

// divrem by a monic divisor.
std::pair<ZmPoly, ZmPoly> zm_divrem_monic(ZmPoly a, const ZmPoly& b, const Int& m) {
  ZmPoly q;
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    Int c = a.back();
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Int(0));
    q[shift] = (q[shift] + c) % m;
    for (int i = 0; i <= db; ++i) {
      Int& t = a[i + shift];
      t -= c * b[i];
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
    zm_normalize(a);
  }
  zm_normalize(q);
  return {std::move(q), std::move(a)};
}

// One quadratic Hensel step: f = g*h, s*g + t*h = 1 (mod m) lift to mod m^2.
// f, g, h monic.
struct HenselPair {
  ZmPoly g, h, s, t;
};

HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  ZmPoly e = zm_sub(zm_reduce(f, m2), zm_mul(in.g, in.h, m2), m2);
  auto [q, r] = zm_divrem_monic(zm_mul(in.s, e, m2), in.h, m2);
  ZmPoly g2 = zm_add(zm_add(in.g, zm_mul(in.t, e, m2), m2), zm_mul(q, in.g, m2), m2);
  ZmPoly h2 = zm_add(in.h, r, m2);
  ZmPoly b = zm_sub(zm_add(zm_mul(in.s, g2, m2), zm_mul(in.t, h2, m2), m2), ZmPoly{Int(1)}, m2);
  auto [c, d] = zm_divrem_monic(zm_mul(in.s, b, m2), h2, m2);
  ZmPoly s2 = zm_sub(in.s, d, m2);
  ZmPoly t2 = zm_sub(zm_sub(in.t, zm_mul(in.t, b, m2), m2), zm_mul(c, g2, m2), m2);
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// Bezout cofactors mod p for coprime g, h.
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& g, const ModPoly& h, long p) {
  ModPoly r0 = g, r1 = h;
  ModPoly s0{1}, s1{};
  ModPoly t0{}, t1{1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    ModPoly q;
    ModPoly rem = r0;
    long inv_lead = mod_inv(r1.back(), p);
    while (mp_deg(rem) >= mp_deg(r1) && !rem.empty()) {
      long c = static_cast<long>((static_cast<__int128>(rem.back()) * inv_lead) % p);
      int shift = mp_deg(rem) - mp_deg(r1);
      if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
      q[shift] = (q[shift] + c) % p;
      for (size_t i = 0; i < r1.size(); ++i) {
        size_t k = i + shift;
        rem[k] = static_cast<long>(((rem[k] - static_cast<__int128>(c) * r1[i]) % p + p) % p);
      }
      mp_normalize(rem);
    }
    mp_normalize(q);
    r0 = std::exchange(r1, rem);
    ModPoly qs = mp_mul(q, s1, p);
    ModPoly qt = mp_mul(q, t1, p);
    s0 = std::exchange(s1, mp_sub(std::move(s0), qs, p));
    t0 = std::exchange(t1, mp_sub(std::move(t0), qt, p));
  }
  // r0 is a nonzero constant for coprime inputs; scale to 1.
  long inv = mod_inv(r0[0], p);
  for (auto& c : s0) c = static_cast<long>((static_cast<__int128>(c) * inv) % p);
  for (auto& c : t0) c = static_cast<long>((static_cast<__int128>(c) * inv) % p);
  return {s0, t0};
}

ZmPoly zm_from_mod(const ModPoly& f) {
  ZmPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  return r;
}

// Lift the monic mod-p factors of monic f to factors mod target = p^l.
std::vector<ZmPoly> hensel_lift_tree(const ZmPoly& f, const std::vector<ModPoly>& factors,
                                     long p, const Int& target) {
  if (factors.size() == 1) return {zm_reduce(f, target)};
  size_t half = factors.size() / 2;
  ModPoly g_p{1}, h_p{1};
  for (size_t i = 0; i < half; ++i) g_p = mp_mul(g_p, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h_p = mp_mul(h_p, factors[i], p);
  auto [s_p, t_p] = mp_bezout(g_p, h_p, p);

  HenselPair pair{zm_from_mod(g_p), zm_from_mod(h_p), zm_from_mod(s_p), zm_from_mod(t_p)};
  Int m(p);
  while (m < target) {
    pair = hensel_step(zm_reduce(f, m * m), pair, m);
    m *= m;
  }
  pair.g = zm_reduce(pair.g, target);
  pair.h = zm_reduce(pair.h, target);

  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  auto lifted_left = hensel_lift_tree(pair.g, left, p, target);
  auto lifted_right = hensel_lift_tree(pair.h, right, p, target);
  lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
  return lifted_left;
}

// ---------------------------------------------------------------------------
// Zassenhaus driver on a primitive squarefree integer polynomial with no
// rational roots, degree >= 2.
// ---------------------------------------------------------------------------

UniPoly unipoly_from_ints(const IntVec& v) {
  RatVec c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
  return UniPoly(std::move(c));
}

std::vector<UniPoly> zassenhaus(const IntVec& f_in) {
  const int n = static_cast<int>(f_in.size()) - 1;

  // Prime with f squarefree mod p and lc not divisible by p.
  long p = 0;
  ModPoly f_p;
  for (long candidate = 3;; candidate += 2) {
    bool prime = candidate >= 2;
    for (long q = 3; q * q <= candidate; q += 2)
      if (candidate % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (mpz_divisible_ui_p(f_in.back().get_mpz_t(), candidate)) continue;
    ModPoly reduced(f_in.size());
    for (size_t i = 0; i < f_in.size(); ++i) {
      Int r;
      mpz_mod_ui(r.get_mpz_t(), f_in[i].get_mpz_t(), candidate);
      reduced[i] = r.get_si();
    }
    mp_normalize(reduced);
    if (mp_deg(mp_gcd(reduced, mp_derivative(reduced, candidate), candidate)) == 0) {
      p = candidate;
      f_p = mp_monic(std::move(reduced), candidate);
      break;
    }
  }

  // Factor mod p.
  std::mt19937_64 rng(0x5eedf00dULL + static_cast<unsigned long long>(p));
  std::vector<ModPoly> modular;
  {
    // distinct-degree, dividing out as we go
    ModPoly remaining = f_p;
    ModPoly x{0, 1};
    ModPoly xp = x;
    for (int d = 1; mp_deg(remaining) >= 2 * d; ++d) {
      xp = mp_powmod(std::move(xp), Int(p), remaining, p);
      ModPoly g = mp_gcd(mp_sub(xp, x, p), remaining, p);
      if (mp_deg(g) > 0) {
        mp_equal_degree(g, d, p, rng, modular);
        remaining = mp_monic(mp_divexact(remaining, g, p), p);
      }
    }
    if (mp_deg(remaining) > 0) modular.push_back(remaining);
  }
  if (modular.size() == 1) return {unipoly_from_ints(f_in).monic()};

  // Mignotte-style bound: any factor of f has coefficients bounded by
  // 2^n * sqrt(n+1) * |f|_inf * |lc(f)|. Lift to p^l > 2 * bound.
  Int max_coeff(0);
  for (const auto& c : f_in) max_coeff = std::max(max_coeff, int_abs(c));
  Int bound = int_pow(Int(2), n) * (static_cast<long>(n) + 1) * max_coeff * int_abs(f_in.back());
  Int target(p);
  while (target <= 2 * bound) target *= p;

  // Lift monic factors of f/lc.
  const Int& lc = f_in.back();
  Int lc_inv_mod;
  {
    Int lc_mod = lc % target;
    if (lc_mod < 0) lc_mod += target;
    if (mpz_invert(lc_inv_mod.get_mpz_t(), lc_mod.get_mpz_t(), target.get_mpz_t()) == 0)
      throw InternalInconsistency("leading coefficient not invertible mod p^l");
  }
  ZmPoly f_monic(f_in.size());
  for (size_t i = 0; i < f_in.size(); ++i) {
    Int t = f_in[i] * lc_inv_mod;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), target.get_mpz_t());
    f_monic[i] = t;
  }
  std::vector<ZmPoly> lifted = hensel_lift_tree(f_monic, modular, p, target);

  // Recombination: try subsets in increasing cardinality; a candidate is
  // lc * prod of lifted factors, coefficients in the symmetric range, then
  // the primitive part is trial-divided into what remains of f.
  std::vector<UniPoly> result;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
  UniPoly remaining = unipoly_from_ints(f_in);

  auto symmetric = [&](const ZmPoly& g) {
    IntVec out(g.size());
    for (size_t i = 0; i < g.size(); ++i)
      out[i] = g[i] > target / 2 ? Int(g[i] - target) : g[i];
    return out;
  };

  for (size_t take = 1; 2 * take <= alive.size();) {
    bool found = false;
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    while (true) {
      ZmPoly prod{Int(1)};
      for (size_t i : idx) prod = zm_mul(prod, lifted[alive[i]], target);
      // scale by lc and take the primitive part
      ZmPoly scaled(prod.size());
      for (size_t i = 0; i < prod.size(); ++i) {
        Int t = prod[i] * lc;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), target.get_mpz_t());
        scaled[i] = t;
      }
      UniPoly candidate = unipoly_from_ints(symmetric(scaled));
      if (!candidate.is_zero()) {
        auto prim = candidate.primitive_integer_form();
        candidate = unipoly_from_ints(prim.coeffs);
        auto [q, r] = divmod(remaining, candidate);
        if (r.is_zero()) {
          result.push_back(candidate.monic());
          remaining = q;
          std::vector<int> next_alive;
          for (size_t i = 0, k = 0; i < alive.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            next_alive.push_back(alive[i]);
          }
          alive = std::move(next_alive);
          found = true;
          break;
        }
      }
      // next subset of the same cardinality
      int pos = static_cast<int>(take) - 1;
      while (pos >= 0 && idx[pos] == alive.size() - take + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (remaining.degree() > 0) result.push_back(remaining.monic());
  return result;
}

// Monic irreducible factors of a squarefree monic polynomial.
std::vector<UniPoly> factor_squarefree(const UniPoly& q_in) {
  std::vector<UniPoly> out;
  UniPoly q = q_in.monic();
  if (q.degree() < 1) return out;

  // x factor (the only possible zero root in a squarefree polynomial).
  if (q.coeff(0) == 0) {
    out.push_back(UniPoly{0, 1});
    q = div_exact(q, UniPoly{0, 1});
  }

  // Cyclotomic factors are irreducible and cheap to detect.
  CyclotomicSplit split = cyclotomic_part(q);
  for (size_t i = 0; i < split.orders.size();) {
    size_t j = i;
    while (j < split.orders.size() && split.orders[j] == split.orders[i]) ++j;
    for (size_t k = i; k < j; ++k) out.push_back(cyclotomic(split.orders[i]));
    i = j;
  }
  q = split.rest;
  if (q.degree() < 1) return out;

  // Rational roots of the primitive integer form.
  auto prim = q.primitive_integer_form();
  {
    IntVec& c = prim.coeffs;
    std::vector<Rat> roots;
    Int a0 = int_abs(c.front()), an = int_abs(c.back());
    for (Int num(1); num <= a0; ++num) {
      if (!mpz_divisible_p(a0.get_mpz_t(), num.get_mpz_t())) continue;
      for (Int den(1); den <= an; ++den) {
        if (!mpz_divisible_p(an.get_mpz_t(), den.get_mpz_t())) continue;
        for (int sign : {1, -1}) {
          Rat root = make_rat(sign * num, den);
          if (q.eval(root) == 0) roots.push_back(root);
        }
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rat& r : roots) {
      UniPoly lin = UniPoly{0, 1} - UniPoly::constant(r);
      out.push_back(lin);
      q = div_exact(q, lin);
    }
  }
  if (q.degree() < 1) return out;
  if (q.degree() <= 3) {  // no rational roots left: degree 2 and 3 are irreducible
    out.push_back(q.monic());
    return out;
  }

  auto rest = zassenhaus(q.primitive_integer_form().coeffs);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& factor : factor_squarefree(part)) out.emplace_back(factor, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = 0; i <= a.first.degree(); ++i) {
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    }
    return a.second < b.second;
  });
  return out;
}

}  // namespace solvzeta
