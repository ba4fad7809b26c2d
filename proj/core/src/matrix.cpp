#include "solvzeta/matrix.hpp"

#include <algorithm>

#include "solvzeta/errors.hpp"

namespace solvzeta {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(static_cast<int>(rows.size())) {
  e_.reserve(static_cast<size_t>(dim_) * dim_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_)
      throw InvalidInput("IntMatrix initializer must be square");
    for (long v : row) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.dim())
      throw InvalidInput("matrix rows must be square");
    for (int j = 0; j < m.dim(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::pow(unsigned e) const {
  IntMatrix acc = identity(dim_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const { return *this == identity(dim_); }

Int IntMatrix::det() const {
  // Bareiss: every division is exact, intermediate entries are minors.
  const int n = dim_;
  if (n == 0) return Int(1);
  IntMatrix m = *this;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign == 1 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse_unimodular() const {
  Int d = det();
  if (int_abs(d) != 1) throw NotUnimodular("integer inverse requires det = +-1");
  RatMatrix inv = to_rat().inverse();
  return inv.to_int();
}

IntMatrix IntMatrix::pow_signed(long k) const {
  if (k >= 0) return pow(static_cast<unsigned>(k));
  return inverse_unimodular().pow(static_cast<unsigned>(-k));
}

RatMatrix IntMatrix::to_rat() const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = Rat(at(i, j));
  return r;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(static_cast<int>(rows.size())) {
  e_.reserve(static_cast<size_t>(dim_) * dim_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_)
      throw InvalidInput("RatMatrix initializer must be square");
    for (long v : row) e_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(int dim) {
  RatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  RatMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& v) { return v == 0; });
}

bool RatMatrix::is_identity() const { return *this == identity(dim_); }

Rat RatMatrix::det() const {
  const int n = dim_;
  if (n == 0) return Rat(1);
  // Clear denominators row by row, then run integer Bareiss.
  IntMatrix m(n);
  Rat scale(1);
  for (int i = 0; i < n; ++i) {
    Int row_lcm(1);
    for (int j = 0; j < n; ++j) row_lcm = int_lcm(row_lcm, at(i, j).get_den());
    scale *= make_rat(Int(1), row_lcm);
    for (int j = 0; j < n; ++j) {
      const Rat& v = at(i, j);
      m.at(i, j) = v.get_num() * (row_lcm / v.get_den());
    }
  }
  return Rat(m.det()) * scale;
}

RatMatrix RatMatrix::inverse() const {
  const int n = dim_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is not invertible over Q");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    Rat p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMatrix RatMatrix::pow_signed(long k) const {
  RatMatrix base = k >= 0 ? *this : inverse();
  unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  RatMatrix acc = identity(dim_);
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool RatMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& v) { return is_integer(v); });
}

IntMatrix RatMatrix::to_int() const {
  if (!is_integral()) throw InternalInconsistency("matrix has non-integer entries");
  IntMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j).get_num();
  return r;
}

Rat determinant(const RatMatrix& m) { return m.det(); }
Int determinant(const IntMatrix& m) { return m.det(); }

UniPoly char_poly(const RatMatrix& m) {
  // Faddeev-LeVerrier: M_{k+1} = M (M_k + c_k I), c_{k+1} = -tr(M_{k+1})/(k+1).
  const int n = m.dim();
  RatVec coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  RatMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += coeffs[n - k + 1];
      mk = m * shifted;
    }
    Rat trace(0);
    for (int i = 0; i < n; ++i) trace += mk.at(i, i);
    coeffs[n - k] = -trace / Rat(k);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly char_poly(const IntMatrix& m) {
  UniPoly p = char_poly(m.to_rat());
  if (!p.has_integer_coeffs())
    throw InternalInconsistency("integer matrix with non-integer characteristic polynomial");
  return p;
}

RatMatrix eval_poly(const UniPoly& p, const RatMatrix& m) {
  RatMatrix acc(m.dim());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    Rat c = p.coeff(i);
    for (int d = 0; d < m.dim(); ++d) acc.at(d, d) += c;
  }
  return acc;
}

std::vector<RatVec> rat_kernel(const RatMatrix& m) {
  const int n = m.dim();
  RatMatrix a = m;
  // Row echelon with full normalization; record pivot columns.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = row;
    while (p < n && a.at(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != row)
      for (int j = 0; j < n; ++j) std::swap(a.at(row, j), a.at(p, j));
    Rat pv = a.at(row, col);
    for (int j = 0; j < n; ++j) a.at(row, j) /= pv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<RatVec> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(n, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a.at(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r.at(a.dim() + i, a.dim() + j) = b.at(i, j);
  return r;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r.at(a.dim() + i, a.dim() + j) = b.at(i, j);
  return r;
}

}  // namespace solvzeta
