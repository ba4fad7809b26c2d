#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "solvzeta/rational.hpp"

namespace solvzeta {

/// Exact univariate polynomial over Q. Coefficients ascending by degree,
/// trailing zeros stripped; the zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long> coeffs_ascending);
  explicit UniPoly(RatVec coeffs_ascending);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);
  /// x^n
  static UniPoly power_of_x(int n) { return monomial(Rat(1), n); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const Rat& leading() const;
  Rat coeff(int i) const;
  const RatVec& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const = default;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;

  /// Content-free integer coefficients plus the extracted rational content:
  /// *this = content * sum coeffs[i] x^i, with positive leading integer coeff.
  struct PrimitiveForm {
    IntVec coeffs;
    Rat content;
  };
  PrimitiveForm primitive_integer_form() const;

  bool has_integer_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void strip();
  RatVec c_;
};

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact division; throws InternalInconsistency if the remainder is nonzero.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);

/// Monic gcd over Q (gcd of zero polynomials is zero).
UniPoly poly_gcd(UniPoly a, UniPoly b);
/// g = gcd(a, b) monic together with u, v such that u*a + v*b = g.
struct ExtendedGcd {
  UniPoly g, u, v;
};
ExtendedGcd poly_extended_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: p = content * prod parts[i].first ^ parts[i].second with
/// the parts squarefree, monic and pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Euler totient.
long euler_phi(long n);

/// The order-th cyclotomic polynomial, monic with integer coefficients.
UniPoly cyclotomic(long order);

/// Split off every cyclotomic irreducible factor of p (to full multiplicity).
struct CyclotomicSplit {
  UniPoly cyclotomic_product;  // monic product of the removed factors
  std::vector<long> orders;    // multiset, ascending, one entry per factor copy
  UniPoly rest;                // monic; no root of unity is a root
};
CyclotomicSplit cyclotomic_part(const UniPoly& p);

/// Number of distinct real roots of squarefree p in (a, b], with nullopt
/// meaning -infinity / +infinity. Throws NonSquarefreeInput.
long sturm_count(const UniPoly& p, const std::optional<Rat>& a,
                 const std::optional<Rat>& b);

/// Resultant-based polynomial whose roots are all ratios alpha_i/alpha_j of
/// roots of p; returned in primitive integer form with positive leading
/// coefficient. Throws ZeroRoot if p(0) = 0.
UniPoly ratio_poly(const UniPoly& p);

/// Irreducible monic factors over Q with multiplicities, sorted by degree then
/// lexicographically by coefficients. Product of factors^multiplicity equals
/// p up to rational content.
std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& p);

}  // namespace solvzeta
