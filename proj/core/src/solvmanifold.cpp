#include "solvzeta/solvmanifold.hpp"

#include <string>

#include "solvzeta/errors.hpp"

namespace solvzeta {

ModelSolvmanifold::ModelSolvmanifold(int n, int m, std::vector<IntMatrix> action)
    : n_(n), m_(m), action_(std::move(action)) {
  if (n_ < 0 || m_ < 0) throw InvalidInput("ranks must be nonnegative");
  if (static_cast<int>(action_.size()) != m_)
    throw InvalidInput("need one action matrix per base generator");
  for (int j = 0; j < m_; ++j) {
    if (action_[j].dim() != n_)
      throw InvalidInput("action matrix " + std::to_string(j + 1) + " has wrong dimension");
    if (!action_[j].is_unimodular())
      throw NotUnimodular("action matrix " + std::to_string(j + 1) +
                          " is not invertible over Z");
  }
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (!(action_[i] * action_[j] == action_[j] * action_[i]))
        throw NotCommuting("action matrices " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " do not commute");
}

IntMatrix ModelSolvmanifold::alpha(const std::vector<long>& v) const {
  if (static_cast<int>(v.size()) != m_) throw InvalidInput("exponent vector has wrong length");
  IntMatrix acc = IntMatrix::identity(n_);
  for (int i = 0; i < m_; ++i) {
    if (v[i] == 0) continue;
    acc = acc * action_[i].pow_signed(v[i]);
  }
  return acc;
}

DiagonalMap::DiagonalMap(const ModelSolvmanifold& s, IntMatrix x, IntMatrix y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.dim() != s.fiber_rank() || y_.dim() != s.base_rank())
    throw InvalidInput("map matrices have wrong dimensions");
  for (int j = 0; j < s.base_rank(); ++j) {
    std::vector<long> y_col(s.base_rank());
    for (int i = 0; i < s.base_rank(); ++i) {
      if (!y_.at(i, j).fits_slong_p())
        throw InvalidInput("base matrix entry out of supported range");
      y_col[i] = y_.at(i, j).get_si();
    }
    if (!(x_ * s.action_of(j) == s.alpha(y_col) * x_))
      throw IncompatiblePair("X alpha(e_" + std::to_string(j + 1) +
                             ") != alpha(Y e_" + std::to_string(j + 1) + ") X");
  }
}

DiagonalMap validate_diagonal_map(const ModelSolvmanifold& s, const IntMatrix& x,
                                  const IntMatrix& y) {
  return DiagonalMap(s, x, y);
}

DiagonalMap iterate_map(const ModelSolvmanifold& s, const DiagonalMap& f, long k) {
  if (k < 1) throw InvalidInput("iterate_map requires k >= 1");
  return DiagonalMap(s, f.fiber().pow(static_cast<unsigned>(k)),
                     f.base().pow(static_cast<unsigned>(k)));
}

Lattice commutator_isolator(const ModelSolvmanifold& s) {
  const int n = s.fiber_rank();
  // [K, K] contains (psi(e_j) - I) Z^n for every generator, and the isolator
  // of their sum is all the downstream formulas consume.
  IntTable gens(n, n * s.base_rank());
  for (int j = 0; j < s.base_rank(); ++j) {
    IntMatrix delta = s.action_of(j) - IntMatrix::identity(n);
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) gens.at(row, j * n + col) = delta.at(row, col);
  }
  return saturate(gens, n);
}

Linearization linearization(const ModelSolvmanifold& s, const DiagonalMap& f) {
  const int n = s.fiber_rank();
  const int m = s.base_rank();
  Lattice nlat = commutator_isolator(s);
  const int rank = nlat.rank();

  IntMatrix f1 = lattice_restriction(nlat, f.fiber());

  // Quotient block of X on Z^n / N via a unimodular completion [T | Q]:
  // coordinates of X Q in the completed basis; the bottom block is the
  // induced map.
  IntMatrix quotient(n - rank);
  if (rank < n) {
    IntMatrix full = unimodular_completion(nlat);
    IntMatrix inv = full.inverse_unimodular();
    IntMatrix coords = inv * f.fiber() * full;
    for (int i = 0; i < n - rank; ++i)
      for (int j = 0; j < n - rank; ++j) quotient.at(i, j) = coords.at(rank + i, rank + j);
  }

  return {std::move(nlat), std::move(f1), block_diag(quotient, f.base())};
}

}  // namespace solvzeta
