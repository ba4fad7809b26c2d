#include "solvzeta/spectral.hpp"

#include <algorithm>

#include "solvzeta/errors.hpp"
#include "solvzeta/polynomial.hpp"

namespace solvzeta {

namespace {

void require_invertible(const RatMatrix& a) {
  if (a.det() == 0) throw SingularMatrix("spectral predicates require an invertible matrix");
}

std::vector<long> divisors_ascending(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<long> unity_orders(const RatMatrix& a) {
  require_invertible(a);
  if (a.dim() == 0) return {};
  return cyclotomic_part(char_poly(a)).orders;
}

bool is_nr(const RatMatrix& a) {
  auto orders = unity_orders(a);
  return std::all_of(orders.begin(), orders.end(), [](long n) { return n == 1; });
}

bool is_nr(const IntMatrix& a) { return is_nr(a.to_rat()); }

long minimal_nr_exponent(const RatMatrix& a) {
  long d = 1;
  for (long n : unity_orders(a)) d = lcm_long(d, n);
  // lcm of the orders is minimal; check it anyway, d is load-bearing for the
  // decomposition and averaging formulas downstream.
  if (!is_nr(a.pow_signed(d)))
    throw InternalInconsistency("A^d not NR for d = lcm of unity orders");
  for (long e : divisors_ascending(d))
    if (e < d && is_nr(a.pow_signed(e)))
      throw InternalInconsistency("unity-order lcm is not the minimal NR exponent");
  return d;
}

long minimal_nr_exponent(const IntMatrix& a) { return minimal_nr_exponent(a.to_rat()); }

bool is_type_r(const RatMatrix& a) {
  require_invertible(a);
  if (a.dim() == 0) return true;
  // All eigenvalues real positive iff the squarefree part of the
  // characteristic polynomial has deg-many distinct roots in (0, +inf).
  UniPoly sf = squarefree_part(char_poly(a));
  return sturm_count(sf, Rat(0), std::nullopt) == sf.degree();
}

bool is_type_r(const IntMatrix& a) { return is_type_r(a.to_rat()); }

std::optional<long> type_r_power(const RatMatrix& a) {
  require_invertible(a);
  if (a.dim() == 0) return 1;
  UniPoly p = char_poly(a);
  UniPoly ratios = ratio_poly(squarefree_part(p));

  long bound = 2;
  for (long n : cyclotomic_part(ratios).orders) bound = lcm_long(bound, 2 * n);
  for (long n : cyclotomic_part(p).orders) bound = lcm_long(bound, 2 * n);

  // An eigenvalue ratio that is not a root of unity never becomes real under
  // powers, so A^bound of type (R) is equivalent to some power being so; the
  // minimal power divides every type-(R) power, hence divides the bound.
  if (!is_type_r(a.pow_signed(bound))) return std::nullopt;
  for (long k : divisors_ascending(bound))
    if (is_type_r(a.pow_signed(k))) return k;
  throw InternalInconsistency("type_r_power bound certified but no divisor passed");
}

std::optional<long> type_r_power(const IntMatrix& a) { return type_r_power(a.to_rat()); }

SpectralClassification classify_spectrum(const RatMatrix& a) {
  SpectralClassification out;
  out.unity_orders = unity_orders(a);
  out.is_nr = std::all_of(out.unity_orders.begin(), out.unity_orders.end(),
                          [](long n) { return n == 1; });
  out.minimal_nr_exponent = 1;
  for (long n : out.unity_orders) out.minimal_nr_exponent = lcm_long(out.minimal_nr_exponent, n);
  out.is_type_r = is_type_r(a);
  out.type_r_power = type_r_power(a);
  return out;
}

SpectralClassification classify_spectrum(const IntMatrix& a) {
  return classify_spectrum(a.to_rat());
}

}  // namespace solvzeta
