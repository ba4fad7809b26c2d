#pragma once

#include <optional>
#include <vector>

#include "solvzeta/matrix.hpp"

namespace solvzeta {

/// Exact spectral predicates: roots of unity among the eigenvalues and the
/// all-real-positive ("type (R)") condition.
struct SpectralClassification {
  bool is_nr = false;
  bool is_type_r = false;
  std::vector<long> unity_orders;  // multiset, ascending, order-1 included
  long minimal_nr_exponent = 1;    // lcm of unity_orders
  std::optional<long> type_r_power;  // smallest k with A^k of type (R), if any
};

/// True iff no eigenvalue is a nontrivial root of unity (eigenvalue 1 is the
/// trivial root and is allowed). Throws SingularMatrix.
bool is_nr(const RatMatrix& a);
bool is_nr(const IntMatrix& a);

/// Orders (with multiplicity) of all root-of-unity eigenvalues.
std::vector<long> unity_orders(const RatMatrix& a);

/// Smallest d > 0 with A^d NR; equals lcm of the unity orders.
long minimal_nr_exponent(const RatMatrix& a);
long minimal_nr_exponent(const IntMatrix& a);

/// True iff every eigenvalue is real and positive.
bool is_type_r(const RatMatrix& a);
bool is_type_r(const IntMatrix& a);

/// Decides exactly whether some positive power of A has all eigenvalues real
/// and positive; returns the smallest such power, or nullopt when no power
/// can ever be of type (R). The decision reduces to root-of-unity detection
/// on the eigenvalue-ratio polynomial: A^k can be of type (R) for some k iff
/// A^b is, for b = 2 * lcm of every unity order found in the ratio polynomial
/// and in the characteristic polynomial.
std::optional<long> type_r_power(const RatMatrix& a);
std::optional<long> type_r_power(const IntMatrix& a);

SpectralClassification classify_spectrum(const RatMatrix& a);
SpectralClassification classify_spectrum(const IntMatrix& a);

}  // namespace solvzeta
