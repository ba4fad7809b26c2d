#pragma once

#include <vector>

#include "solvzeta/lattice.hpp"
#include "solvzeta/matrix.hpp"

namespace solvzeta {

/// The group Z^n x|_psi Z^m given by the commuting unimodular action matrices
/// psi(e_1), ..., psi(e_m) on the fiber Z^n.
class ModelSolvmanifold {
 public:
  /// Validates unimodularity and commutativity; throws NotUnimodular or
  /// NotCommuting.
  ModelSolvmanifold(int n, int m, std::vector<IntMatrix> action);

  int fiber_rank() const { return n_; }
  int base_rank() const { return m_; }
  const std::vector<IntMatrix>& action() const { return action_; }
  const IntMatrix& action_of(int j) const { return action_[j]; }

  /// alpha(v) = prod psi(e_i)^{v_i}; negative exponents via exact inverses.
  IntMatrix alpha(const std::vector<long>& v) const;

  bool operator==(const ModelSolvmanifold& o) const = default;

 private:
  int n_, m_;
  std::vector<IntMatrix> action_;
};

/// Diagonal self-map (X, Y): fiber matrix X and base matrix Y subject to the
/// compatibility law X alpha(z) = alpha(Y z) X for every generator z.
class DiagonalMap {
 public:
  /// Validates the compatibility law; throws IncompatiblePair naming the
  /// violating generator.
  DiagonalMap(const ModelSolvmanifold& s, IntMatrix x, IntMatrix y);

  const IntMatrix& fiber() const { return x_; }
  const IntMatrix& base() const { return y_; }

  bool operator==(const DiagonalMap& o) const = default;

 private:
  IntMatrix x_, y_;
};

DiagonalMap validate_diagonal_map(const ModelSolvmanifold& s, const IntMatrix& x,
                                  const IntMatrix& y);

/// f^k = (X^k, Y^k).
DiagonalMap iterate_map(const ModelSolvmanifold& s, const DiagonalMap& f, long k);

/// Data of the two-step filtration 1 < N < K with N the isolator of the
/// commutator sublattice: F1 is X restricted to N (in the N basis) and F0 the
/// block-diagonal map induced on (Z^n / N) + Z^m.
struct Linearization {
  Lattice commutator_isolator;  // N, saturated sublattice of Z^n
  IntMatrix f1;                 // rank(N) x rank(N)
  IntMatrix f0;                 // (n - rank(N) + m) square
};

/// N itself, independent of any map.
Lattice commutator_isolator(const ModelSolvmanifold& s);

Linearization linearization(const ModelSolvmanifold& s, const DiagonalMap& f);

}  // namespace solvzeta
