#pragma once

#include <optional>
#include <utility>

#include "solvzeta/matrix.hpp"

namespace solvzeta {

/// A = U * S with U unipotent, S semisimple, U S = S U, both rational.
struct JordanChevalley {
  RatMatrix unipotent;
  RatMatrix semisimple;
};
JordanChevalley jordan_chevalley(const RatMatrix& a);

/// Conjugation P S P^-1 = diag(S_b, S_g) where S_b (dimension k) has
/// all-cyclotomic characteristic polynomial (finite order once semisimple)
/// and S_g has no root of unity as an eigenvalue.
struct CyclotomicBlockSplit {
  RatMatrix p;        // change of basis
  RatMatrix finite;   // S_b, k x k
  RatMatrix nr_part;  // S_g, (n-k) x (n-k)
  int finite_dim = 0;
};
CyclotomicBlockSplit split_cyclotomic(const RatMatrix& s);

/// Multiplicative decomposition A = B * C with C^d = I, B NR, B C = C B; with
/// constraints (M, m) additionally M B = B^m M and M C = C^m M. All the
/// properties are verified by exact identities before returning.
struct DecompositionResult {
  RatMatrix b;
  RatMatrix c;
  long d = 1;
  RatMatrix unipotent;
  RatMatrix semisimple;
  RatMatrix p;
  int cyclotomic_block_dim = 0;
};

struct MapConstraint {
  IntMatrix m_matrix;
  long m_exponent;
};

DecompositionResult nr_finite_decomposition(
    const IntMatrix& a, const std::optional<MapConstraint>& constraint = std::nullopt);

}  // namespace solvzeta
