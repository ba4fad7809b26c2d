#include "solvzeta/decomposition.hpp"

#include "solvzeta/errors.hpp"
#include "solvzeta/polynomial.hpp"
#include "solvzeta/spectral.hpp"

namespace solvzeta {

JordanChevalley jordan_chevalley(const RatMatrix& a) {
  const int n = a.dim();
  if (a.det() == 0) throw SingularMatrix("Jordan decomposition of a singular matrix");
  if (n == 0) return {RatMatrix(0), RatMatrix(0)};

  // Newton iteration X <- X - q(X) q'(X)^-1 against the squarefree part q of
  // the characteristic polynomial converges to the semisimple summand; q'(X)
  // stays invertible because q(X) is nilpotent along the way.
  UniPoly q = squarefree_part(char_poly(a));
  UniPoly dq = q.derivative();
  RatMatrix s = a;
  int guard = 0;
  while (true) {
    RatMatrix qs = eval_poly(q, s);
    if (qs.is_zero()) break;
    if (++guard > n + 2)
      throw InternalInconsistency("Newton iteration for the semisimple part did not settle");
    s = s - qs * eval_poly(dq, s).inverse();
  }

  RatMatrix u = a * s.inverse();
  RatMatrix nil = u - RatMatrix::identity(n);
  RatMatrix power = nil;
  for (int i = 1; i < n; ++i) power = power * nil;
  if (!power.is_zero())
    throw InternalInconsistency("multiplicative Jordan part is not unipotent");
  if (!(u * s == s * u))
    throw InternalInconsistency("Jordan factors do not commute");
  return {std::move(u), std::move(s)};
}

namespace {

// Columns (as a dim x k matrix stack) of a kernel basis.
RatMatrix columns_matrix(const std::vector<RatVec>& cols, int dim) {
  RatMatrix m(dim);
  if (static_cast<int>(cols.size()) != dim)
    throw InternalInconsistency("kernel columns do not fill the space");
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace

CyclotomicBlockSplit split_cyclotomic(const RatMatrix& s) {
  const int n = s.dim();
  if (s.det() == 0) throw SingularMatrix("cyclotomic split of a singular matrix");
  UniPoly p = char_poly(s);
  if (!eval_poly(squarefree_part(p), s).is_zero())
    throw NotSemisimple("cyclotomic split requires a semisimple matrix");

  CyclotomicSplit split = cyclotomic_part(p);
  const int k = split.cyclotomic_product.degree();
  if (k == 0) {
    return {RatMatrix::identity(n), RatMatrix(0), s, 0};
  }
  if (k == n) {
    return {RatMatrix::identity(n), s, RatMatrix(0), n};
  }

  // Q^n = ker(cyc(S)) + ker(rest(S)); stack both kernel bases as columns of
  // P^-1 so that conjugation by P block-diagonalizes S.
  std::vector<RatVec> cols = rat_kernel(eval_poly(split.cyclotomic_product, s));
  if (static_cast<int>(cols.size()) != k)
    throw InternalInconsistency("cyclotomic kernel has unexpected dimension");
  std::vector<RatVec> rest_cols = rat_kernel(eval_poly(split.rest, s));
  cols.insert(cols.end(), rest_cols.begin(), rest_cols.end());

  RatMatrix p_inv = columns_matrix(cols, n);
  RatMatrix p_mat = p_inv.inverse();
  RatMatrix block = p_mat * s * p_inv;

  RatMatrix s_b(k), s_g(n - k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool in_b = i < k && j < k;
      bool in_g = i >= k && j >= k;
      if (in_b)
        s_b.at(i, j) = block.at(i, j);
      else if (in_g)
        s_g.at(i - k, j - k) = block.at(i, j);
      else if (block.at(i, j) != 0)
        throw InternalInconsistency("conjugated matrix is not block-diagonal");
    }
  return {std::move(p_mat), std::move(s_b), std::move(s_g), k};
}

DecompositionResult nr_finite_decomposition(const IntMatrix& a,
                                            const std::optional<MapConstraint>& constraint) {
  const int n = a.dim();
  if (!a.is_unimodular()) throw NotUnimodular("decomposition requires A in GL_n(Z)");
  if (constraint) {
    if (constraint->m_exponent == 0)
      throw ConstraintViolated("constraint exponent m must be nonzero");
    RatMatrix ma = constraint->m_matrix.to_rat() * a.to_rat();
    RatMatrix am = a.to_rat().pow_signed(constraint->m_exponent) * constraint->m_matrix.to_rat();
    if (!(ma == am)) throw ConstraintViolated("M A != A^m M");
  }

  const long d = minimal_nr_exponent(a.to_rat());
  auto [u, s] = jordan_chevalley(a.to_rat());
  CyclotomicBlockSplit split = split_cyclotomic(s);

  RatMatrix s1 = split.p.inverse() *
                 block_diag(split.finite, RatMatrix::identity(n - split.finite_dim)) * split.p;
  RatMatrix s2 = split.p.inverse() *
                 block_diag(RatMatrix::identity(split.finite_dim), split.nr_part) * split.p;

  DecompositionResult out{u * s2, s1, d, u, s, split.p, split.finite_dim};

  // Verify every promised identity exactly; a failure here is a bug, not bad
  // input.
  if (!(out.b * out.c == a.to_rat()))
    throw PropertyCheckFailed("B C != A");
  if (!out.c.pow_signed(d).is_identity())
    throw PropertyCheckFailed("C^d != I");
  if (!is_nr(out.b))
    throw PropertyCheckFailed("B is not NR");
  if (!(out.b * out.c == out.c * out.b))
    throw PropertyCheckFailed("B C != C B");
  if (constraint) {
    RatMatrix m = constraint->m_matrix.to_rat();
    long e = constraint->m_exponent;
    if (!(m * out.b == out.b.pow_signed(e) * m))
      throw PropertyCheckFailed("M B != B^m M");
    if (!(m * out.c == out.c.pow_signed(e) * m))
      throw PropertyCheckFailed("M C != C^m M");
  }
  return out;
}

}  // namespace solvzeta
