#pragma once

#include <initializer_list>
#include <vector>

#include "solvzeta/polynomial.hpp"
#include "solvzeta/rational.hpp"

namespace solvzeta {

class RatMatrix;

/// Square matrix over Z, row-major. Dimension 0 is allowed and behaves as the
/// empty block (determinant 1, characteristic polynomial 1).
class IntMatrix {
 public:
  explicit IntMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int dim);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int dim() const { return dim_; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;

  IntMatrix transpose() const;
  IntMatrix pow(unsigned e) const;
  bool is_zero() const;
  bool is_identity() const;

  Int det() const;  // fraction-free Bareiss
  bool is_unimodular() const { return int_abs(det()) == 1; }
  /// Exact integer inverse; throws NotUnimodular unless det = +-1.
  IntMatrix inverse_unimodular() const;
  /// A^k for any integer k; negative powers require det = +-1.
  IntMatrix pow_signed(long k) const;

  RatMatrix to_rat() const;

 private:
  int dim_;
  IntVec e_;
};

/// Square matrix over Q, row-major; entries kept canonical (lowest terms,
/// positive denominators) by mpq_class arithmetic.
class RatMatrix {
 public:
  explicit RatMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, Rat(0)) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(int dim);

  int dim() const { return dim_; }
  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const Rat& s) const;

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Rat det() const;  // denominators cleared per row, then integer Bareiss
  /// Gauss-Jordan inverse; throws SingularMatrix.
  RatMatrix inverse() const;
  /// A^k for any integer k (inverse powers for negative k).
  RatMatrix pow_signed(long k) const;

  bool is_integral() const;
  IntMatrix to_int() const;  // throws InternalInconsistency unless integral

 private:
  int dim_;
  RatVec e_;
};

/// Exact determinant (spec operation; same as M.det()).
Rat determinant(const RatMatrix& m);
Int determinant(const IntMatrix& m);

/// Monic characteristic polynomial det(xI - M) via Faddeev-LeVerrier.
UniPoly char_poly(const RatMatrix& m);
UniPoly char_poly(const IntMatrix& m);  // integer coefficients

/// p(M).
RatMatrix eval_poly(const UniPoly& p, const RatMatrix& m);

/// Columns spanning ker(M) over Q, one column per kernel dimension.
/// Returned as a dim x k column list.
std::vector<RatVec> rat_kernel(const RatMatrix& m);

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);

}  // namespace solvzeta
