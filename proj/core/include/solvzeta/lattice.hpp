#pragma once

#include <optional>
#include <vector>

#include "solvzeta/matrix.hpp"
#include "solvzeta/rational.hpp"

namespace solvzeta {

/// Rectangular integer matrix, row-major; workhorse for lattice computations.
struct IntTable {
  int rows = 0, cols = 0;
  IntVec e;

  IntTable() = default;
  IntTable(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntTable& o) const = default;

  IntTable transpose() const;
  IntTable operator*(const IntTable& o) const;
  IntVec column(int j) const;

  static IntTable from_matrix(const IntMatrix& m);
  static IntTable from_columns(const std::vector<IntVec>& cols, int ambient_dim);
  static IntTable concat_cols(const IntTable& a, const IntTable& b);
  IntMatrix to_square() const;  // throws unless rows == cols
};

/// Column echelon via unimodular column operations: input * transform =
/// [0 | basis] with basis of full column rank. Pivot rows are ascending with
/// the column index inside `basis`.
struct ColumnEchelon {
  IntTable basis;      // rows x rank
  IntTable transform;  // cols x cols, unimodular
  std::vector<int> pivot_rows;
};
ColumnEchelon column_echelon(const IntTable& input);

/// Canonical column-style Hermite normal form of the lattice generated by the
/// input columns: pivots positive and bottommost in their column, zeros below
/// each pivot, entries in a pivot row to the right of the pivot reduced into
/// [0, pivot).
struct HnfBasis {
  IntTable basis;  // rows x rank
  std::vector<int> pivot_rows;
};
HnfBasis hnf_columns(const IntTable& generators);

/// Basis of { x : input * x = 0 } over Z, HNF-canonical.
IntTable int_kernel(const IntTable& input);

/// Sublattice of (1/denom) Z^ambient_dim with HNF-canonical integer basis of
/// denom * L. Saturated lattices have denom = 1. Equality of lattices is
/// equality of the canonical representations.
class Lattice {
 public:
  Lattice(int ambient_dim, IntTable scaled_basis, Int denom);

  static Lattice zero(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return basis_.cols; }
  const Int& denom() const { return denom_; }
  const IntTable& scaled_basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  bool operator==(const Lattice& o) const;

  /// Rational basis as columns (scaled_basis / denom).
  std::vector<RatVec> basis_columns() const;
  /// Square lattices only: the basis matrix T with columns the basis vectors.
  RatMatrix basis_matrix() const;

  bool contains(const RatVec& v) const;
  bool contains(const IntVec& v) const;

 private:
  int ambient_dim_;
  IntTable basis_;
  Int denom_;
  std::vector<int> pivot_rows_;
};

/// Smallest saturated sublattice of Z^ambient_dim containing the span of the
/// given integer columns (the isolator of the span).
Lattice saturate(const IntTable& generator_columns, int ambient_dim);
Lattice saturate(const std::vector<IntVec>& generator_columns, int ambient_dim);

/// Extends the basis of a saturated lattice to a basis of Z^n: returns
/// [basis | complement] in GL_n(Z). Throws InternalInconsistency if the
/// lattice is not saturated (denom != 1).
IntMatrix unimodular_completion(const Lattice& saturated);

/// Matrix of x -> X x restricted to an X-invariant saturated lattice, in the
/// lattice basis. Throws IntegralityFailure if the lattice is not invariant.
IntMatrix lattice_restriction(const Lattice& lattice, const IntMatrix& X);

}  // namespace solvzeta
