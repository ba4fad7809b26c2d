#include "solvzeta/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "solvzeta/errors.hpp"

namespace solvzeta {

UniPoly::UniPoly(std::initializer_list<long> coeffs_ascending) {
  c_.reserve(coeffs_ascending.size());
  for (long v : coeffs_ascending) c_.emplace_back(v);
  strip();
}

UniPoly::UniPoly(RatVec coeffs_ascending) : c_(std::move(coeffs_ascending)) { strip(); }

UniPoly UniPoly::constant(const Rat& c) {
  UniPoly p;
  p.c_.push_back(c);
  p.strip();
  return p;
}

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = c;
  }
  return p;
}

void UniPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::leading() const {
  static const Rat kZero(0);
  return c_.empty() ? kZero : c_.back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  RatVec r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rat(Rat(1) / leading());
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly acc = UniPoly::constant(Rat(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

UniPoly::PrimitiveForm UniPoly::primitive_integer_form() const {
  if (is_zero()) return {IntVec{}, Rat(0)};
  Int den_lcm(1);
  for (const auto& v : c_) den_lcm = int_lcm(den_lcm, v.get_den());
  IntVec ints(c_.size());
  Int content_gcd(0);
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
    content_gcd = int_gcd(content_gcd, ints[i]);
  }
  if (ints.back() < 0) content_gcd = -content_gcd;
  for (auto& v : ints) v /= content_gcd;
  return {std::move(ints), make_rat(content_gcd, den_lcm)};
}

bool UniPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return is_integer(v); });
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (a != 1 || i == 0) out << solvzeta::to_string(a);
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InternalInconsistency("polynomial division by zero");
  UniPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat c = r.leading() / b.leading();
    int d = r.degree() - b.degree();
    UniPoly t = UniPoly::monomial(c, d);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalInconsistency("expected exact polynomial division");
  return q;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd poly_extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(Rat(1)), u1;
  UniPoly v0, v1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat s = Rat(1) / r0.leading();
  return {r0 * s, u0 * s, v0 * s};
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = poly_gcd(p, p.derivative());
  return div_exact(p, g).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  // Yun's algorithm on the monic normalization.
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = poly_gcd(f, fp);
  UniPoly b = div_exact(f, a);
  UniPoly c = div_exact(fp, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    UniPoly t = poly_gcd(b, d);
    if (t.degree() > 0) out.emplace_back(t, i);
    b = div_exact(b, t);
    c = div_exact(d, t);
    d = c - b.derivative();
  }
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

UniPoly cyclotomic_uncached(long order, std::map<long, UniPoly>& cache) {
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  RatVec xn(order + 1, Rat(0));
  xn[0] = -1;
  xn[order] = 1;
  UniPoly phi{UniPoly(std::move(xn))};
  for (long d = 1; d < order; ++d)
    if (order % d == 0) phi = div_exact(phi, cyclotomic_uncached(d, cache));
  cache[order] = phi;
  return phi;
}

}  // namespace

UniPoly cyclotomic(long order) {
  if (order < 1) throw InvalidInput("cyclotomic order must be positive");
  static std::mutex cache_mutex;
  static std::map<long, UniPoly> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cyclotomic_uncached(order, cache);
}

CyclotomicSplit cyclotomic_part(const UniPoly& p) {
  if (p.is_zero()) throw InternalInconsistency("cyclotomic_part of zero polynomial");
  CyclotomicSplit out;
  out.cyclotomic_product = UniPoly::constant(Rat(1));
  out.rest = p.monic();
  const int deg = p.degree();
  // Any cyclotomic factor Phi_n of p needs phi(n) <= deg(p), and
  // phi(n) >= sqrt(n/2) bounds the search to n <= 2 deg^2.
  const long bound = 2L * deg * deg + 1;
  for (long n = 1; n <= bound; ++n) {
    if (euler_phi(n) > deg) continue;
    UniPoly phi = cyclotomic(n);
    while (out.rest.degree() >= phi.degree()) {
      auto [q, r] = divmod(out.rest, phi);
      if (!r.is_zero()) break;
      out.rest = q;
      out.cyclotomic_product = out.cyclotomic_product * phi;
      out.orders.push_back(n);
    }
  }
  std::sort(out.orders.begin(), out.orders.end());
  return out;
}

namespace {

// Sign of the chain values at a point dropping exact zeros; -infinity and
// +infinity are evaluated from leading coefficients.
int sign_at(const UniPoly& p, const std::optional<Rat>& x, bool plus_infinity) {
  if (p.is_zero()) return 0;
  if (!x.has_value()) {
    int lead = sgn(p.leading());
    if (plus_infinity) return lead;
    return p.degree() % 2 == 0 ? lead : -lead;
  }
  return sgn(p.eval(*x));
}

long sign_variations(const std::vector<UniPoly>& chain, const std::optional<Rat>& x,
                     bool plus_infinity) {
  long variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x, plus_infinity);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

long sturm_count(const UniPoly& p, const std::optional<Rat>& a,
                 const std::optional<Rat>& b) {
  if (p.is_zero() || p.degree() == 0) return 0;
  if (poly_gcd(p, p.derivative()).degree() > 0)
    throw NonSquarefreeInput("sturm_count requires a squarefree polynomial");
  if (a.has_value() && b.has_value() && !(*a < *b))
    throw InvalidInput("sturm_count requires a < b");

  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  // Distinct roots in (a, b]: V(a) - V(b) with the zero-skipping convention.
  return sign_variations(chain, a, false) - sign_variations(chain, b, true);
}

namespace {

// Fraction-free Bareiss determinant of a square matrix with polynomial
// entries; all divisions are exact in Q[x].
UniPoly poly_matrix_determinant(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rat(1));
  UniPoly prev_pivot = UniPoly::constant(Rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return UniPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = div_exact(num, prev_pivot);
      }
      m[i][k] = UniPoly();
    }
    prev_pivot = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

UniPoly ratio_poly(const UniPoly& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw ZeroRoot("ratio_poly requires a nonzero constant term");
  const int n = p.degree();
  if (n == 0) return UniPoly::constant(Rat(1));

  // Res_y(p(y), p(x*y)) via the Sylvester matrix in y, entries in Q[x].
  // Row layout: n rows of p(x*y) shifted, then n rows of p(y) shifted,
  // highest power of y in the first column.
  std::vector<std::vector<UniPoly>> syl(2 * n, std::vector<UniPoly>(2 * n));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= n; ++k)
      syl[row][row + k] = UniPoly::monomial(p.coeff(n - k), n - k);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= n; ++k)
      syl[n + row][row + k] = UniPoly::constant(p.coeff(n - k));

  UniPoly res = poly_matrix_determinant(std::move(syl));
  if (res.is_zero()) throw InternalInconsistency("vanishing ratio resultant");
  auto prim = res.primitive_integer_form();
  RatVec coeffs(prim.coeffs.size());
  for (size_t i = 0; i < prim.coeffs.size(); ++i) coeffs[i] = Rat(prim.coeffs[i]);
  return UniPoly(std::move(coeffs));
}

}  // namespace solvzeta
