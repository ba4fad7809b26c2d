#include "solvzeta/lattice.hpp"

#include <algorithm>

#include "solvzeta/errors.hpp"

namespace solvzeta {

IntTable IntTable::transpose() const {
  IntTable r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntTable IntTable::operator*(const IntTable& o) const {
  IntTable r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntVec IntTable::column(int j) const {
  IntVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

IntTable IntTable::from_matrix(const IntMatrix& m) {
  IntTable t(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) t.at(i, j) = m.at(i, j);
  return t;
}

IntTable IntTable::from_columns(const std::vector<IntVec>& cols_in, int ambient_dim) {
  IntTable t(ambient_dim, static_cast<int>(cols_in.size()));
  for (int j = 0; j < t.cols; ++j) {
    if (static_cast<int>(cols_in[j].size()) != ambient_dim)
      throw InvalidInput("column has wrong dimension");
    for (int i = 0; i < ambient_dim; ++i) t.at(i, j) = cols_in[j][i];
  }
  return t;
}

IntTable IntTable::concat_cols(const IntTable& a, const IntTable& b) {
  IntTable t(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) t.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) t.at(i, a.cols + j) = b.at(i, j);
  }
  return t;
}

IntMatrix IntTable::to_square() const {
  if (rows != cols) throw InternalInconsistency("table is not square");
  IntMatrix m(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
  return m;
}

namespace {

void add_column_multiple(IntTable& w, int target, int source, const Int& factor) {
  if (factor == 0) return;
  for (int i = 0; i < w.rows; ++i) w.at(i, target) += factor * w.at(i, source);
}

void swap_columns(IntTable& w, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, a), w.at(i, b));
}

void negate_column(IntTable& w, int j) {
  for (int i = 0; i < w.rows; ++i) w.at(i, j) = -w.at(i, j);
}

}  // namespace

ColumnEchelon column_echelon(const IntTable& input) {
  const int n = input.rows, k = input.cols;
  IntTable w = input;
  IntTable u(k, k);
  for (int j = 0; j < k; ++j) u.at(j, j) = 1;

  // Bottom-up row sweep assigning pivot columns from the right; columns left
  // of `next` end up identically zero, so input * u = [0 | basis].
  int next = k - 1;
  std::vector<int> pivot_rows;
  for (int r = n - 1; r >= 0 && next >= 0; --r) {
    while (true) {
      int best = -1;
      for (int j = 0; j <= next; ++j) {
        if (w.at(r, j) == 0) continue;
        if (best == -1 || int_abs(w.at(r, j)) < int_abs(w.at(r, best))) best = j;
      }
      if (best == -1) break;
      bool lone = true;
      for (int j = 0; j <= next; ++j) {
        if (j == best || w.at(r, j) == 0) continue;
        lone = false;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, best).get_mpz_t());
        add_column_multiple(w, j, best, -q);
        add_column_multiple(u, j, best, -q);
      }
      if (lone) {
        swap_columns(w, best, next);
        swap_columns(u, best, next);
        if (w.at(r, next) < 0) {
          negate_column(w, next);
          negate_column(u, next);
        }
        pivot_rows.push_back(r);
        --next;
        break;
      }
    }
  }
  std::reverse(pivot_rows.begin(), pivot_rows.end());

  const int rank = k - 1 - next;
  IntTable basis(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) basis.at(i, j) = w.at(i, next + 1 + j);
  return {std::move(basis), std::move(u), std::move(pivot_rows)};
}

HnfBasis hnf_columns(const IntTable& generators) {
  ColumnEchelon ech = column_echelon(generators);
  IntTable& h = ech.basis;
  const auto& pivots = ech.pivot_rows;
  // Reduce entries in earlier pivot rows into [0, pivot). Working s downward
  // keeps already-reduced rows intact because column s only touches rows
  // <= pivots[s].
  for (int t = 1; t < h.cols; ++t) {
    for (int s = t - 1; s >= 0; --s) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(pivots[s], t).get_mpz_t(),
                 h.at(pivots[s], s).get_mpz_t());
      for (int i = 0; i < h.rows; ++i) h.at(i, t) -= q * h.at(i, s);
    }
  }
  return {std::move(h), pivots};
}

IntTable int_kernel(const IntTable& input) {
  ColumnEchelon ech = column_echelon(input);
  const int k = input.cols;
  const int rank = ech.basis.cols;
  IntTable kernel(k, k - rank);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k - rank; ++j) kernel.at(i, j) = ech.transform.at(i, j);
  return hnf_columns(kernel).basis;
}

Lattice::Lattice(int ambient_dim, IntTable scaled_basis, Int denom)
    : ambient_dim_(ambient_dim), denom_(std::move(denom)) {
  if (denom_ <= 0) throw InternalInconsistency("lattice denominator must be positive");
  HnfBasis h = hnf_columns(scaled_basis);
  basis_ = std::move(h.basis);
  pivot_rows_ = std::move(h.pivot_rows);
  // Canonical scale: gcd of all entries and the denominator is 1.
  Int g = denom_;
  for (const auto& v : basis_.e) g = int_gcd(g, v);
  if (g > 1) {
    for (auto& v : basis_.e) v /= g;
    denom_ /= g;
  }
}

Lattice Lattice::zero(int ambient_dim) {
  return Lattice(ambient_dim, IntTable(ambient_dim, 0), Int(1));
}

bool Lattice::operator==(const Lattice& o) const {
  return ambient_dim_ == o.ambient_dim_ && denom_ == o.denom_ && basis_ == o.basis_;
}

std::vector<RatVec> Lattice::basis_columns() const {
  std::vector<RatVec> cols(basis_.cols, RatVec(ambient_dim_));
  for (int j = 0; j < basis_.cols; ++j)
    for (int i = 0; i < ambient_dim_; ++i) cols[j][i] = make_rat(basis_.at(i, j), denom_);
  return cols;
}

RatMatrix Lattice::basis_matrix() const {
  if (rank() != ambient_dim_)
    throw InternalInconsistency("basis_matrix requires a full-rank lattice");
  RatMatrix t(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i)
    for (int j = 0; j < ambient_dim_; ++j) t.at(i, j) = make_rat(basis_.at(i, j), denom_);
  return t;
}

bool Lattice::contains(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) return false;
  // Solve basis * c = denom * v by back-substitution on pivot rows.
  RatVec target(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i) target[i] = v[i] * Rat(denom_);
  IntVec c(basis_.cols);
  for (int t = basis_.cols - 1; t >= 0; --t) {
    Rat value = target[pivot_rows_[t]];
    if (!is_integer(value)) return false;
    Int num = to_int(value);
    const Int& piv = basis_.at(pivot_rows_[t], t);
    if (!mpz_divisible_p(num.get_mpz_t(), piv.get_mpz_t())) return false;
    c[t] = num / piv;
    if (c[t] != 0)
      for (int i = 0; i < ambient_dim_; ++i) target[i] -= Rat(c[t] * basis_.at(i, t));
  }
  return std::all_of(target.begin(), target.end(), [](const Rat& x) { return x == 0; });
}

bool Lattice::contains(const IntVec& v) const {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return contains(r);
}

Lattice saturate(const IntTable& generator_columns, int ambient_dim) {
  if (generator_columns.rows != ambient_dim)
    throw InvalidInput("generator columns must live in the ambient space");
  // Saturation = double orthogonal complement: both kernels are computed over
  // Z and integer kernels are automatically saturated.
  IntTable complement = int_kernel(generator_columns.transpose());
  IntTable sat = int_kernel(complement.transpose());
  return Lattice(ambient_dim, std::move(sat), Int(1));
}

Lattice saturate(const std::vector<IntVec>& generator_columns, int ambient_dim) {
  return saturate(IntTable::from_columns(generator_columns, ambient_dim), ambient_dim);
}

IntMatrix unimodular_completion(const Lattice& saturated) {
  if (saturated.denom() != 1)
    throw InternalInconsistency("completion requires a saturated lattice");
  const int n = saturated.ambient_dim();
  const int r = saturated.rank();
  const IntTable& b = saturated.scaled_basis();
  if (r == n) return b.to_square();

  // B^T * U = [0 | E]; the first n-r columns of (U^-1)^T complete B.
  ColumnEchelon ech = column_echelon(b.transpose());
  IntMatrix u_inv_t = ech.transform.to_square().inverse_unimodular().transpose();
  IntMatrix full(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) full.at(i, j) = b.at(i, j);
    for (int j = 0; j < n - r; ++j) full.at(i, r + j) = u_inv_t.at(i, j);
  }
  if (!full.is_unimodular())
    throw InternalInconsistency("completion of a saturated basis must be unimodular");
  return full;
}

IntMatrix lattice_restriction(const Lattice& lattice, const IntMatrix& X) {
  const int n = lattice.ambient_dim();
  const int r = lattice.rank();
  if (X.dim() != n) throw InvalidInput("dimension mismatch in lattice restriction");
  const IntTable& h = lattice.scaled_basis();
  IntTable xh = IntTable::from_matrix(X) * h;

  // Solve h * F = xh column by column on the pivot rows, then verify all rows.
  RatMatrix hp(r), xp(r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      hp.at(a, b) = Rat(h.at(lattice.pivot_rows()[a], b));
      xp.at(a, b) = Rat(xh.at(lattice.pivot_rows()[a], b));
    }
  RatMatrix f = hp.inverse() * xp;
  if (!f.is_integral())
    throw IntegralityFailure("lattice is not X-invariant over Z");
  IntMatrix fi = f.to_int();
  IntTable check = h * IntTable::from_matrix(fi);
  if (!(check == xh)) throw IntegralityFailure("lattice is not X-invariant");
  return fi;
}

}  // namespace solvzeta
