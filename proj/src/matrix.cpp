#include "bipknot/matrix.hpp"

#include <algorithm>

namespace bipknot {

namespace {

// Exact polynomial division in Z[t] (nonnegative exponents); Bareiss
// guarantees divisibility, so every long-division step is exact.
LaurentPoly poly_divexact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("poly_divexact: zero divisor");
  if (num.is_zero()) return LaurentPoly();
  LaurentPoly rem = num;
  LaurentPoly quot;
  int dd = den.highest_exp();
  Int lead = den.coeff(dd);
  while (!rem.is_zero()) {
    int rd = rem.highest_exp();
    if (rd < dd || rem.coeff(rd) % lead != 0)
      throw std::domain_error("poly_divexact: not divisible");
    LaurentPoly term = LaurentPoly::monomial(rem.coeff(rd) / lead, rd - dd);
    quot += term;
    rem -= term * den;
  }
  return quot;
}

IntPoly poly_divexact(const IntPoly& num, const IntPoly& den) { return num.divexact(den); }

Int poly_divexact(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::domain_error("divexact: not divisible");
  return q;
}

template <class T>
T det_bareiss(Mat<T> m) {
  int n = m.rows();
  if (n == 0) return T(1);
  int sign = 1;
  T prev = T(1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!(m.at(r, k) == T())) {
        pivot = r;
        break;
      }
    if (pivot < 0) return T();
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = poly_divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return sign < 0 ? T() - d : d;
}

}  // namespace

LaurentPoly det(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  int n = m.rows();
  if (n == 0) return LaurentPoly::constant(1);
  // Clear t^-k so Bareiss runs in Z[t]; the determinant picks up t^(shift*n).
  int min_exp = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) min_exp = std::min(min_exp, m.at(i, j).lowest_exp());
  LaurentMatrix shifted = m;
  if (min_exp < 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shifted.at(i, j) = m.at(i, j).shifted(-min_exp);
  LaurentPoly d = det_bareiss(shifted);
  return min_exp < 0 ? d.shifted(min_exp * n) : d;
}

IntPoly det(const IntPolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  return det_bareiss(m);
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  return det_bareiss(m);
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<LaurentPoly> minors(const LaurentMatrix& m, int k) {
  if (k < 1 || k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minors: size out of range");
  std::vector<LaurentPoly> out;
  auto row_sets = index_subsets(m.rows(), k);
  auto col_sets = index_subsets(m.cols(), k);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      LaurentPoly d = det(m.submatrix(rs, cs));
      out.push_back(d.is_zero() ? d : canonical_unit_form(d));
    }
  return out;
}

LaurentMatrix assemble_alexander(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("assemble_alexander: non-square");
  int n = m.rows();
  LaurentMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = m.at(i, j).shifted(1) - m.at(j, i);
  return a;
}

LaurentMatrix assemble_alexander(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("assemble_alexander: non-square");
  int n = m.rows();
  LaurentMatrix l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l.at(i, j) = LaurentPoly::monomial(m.at(i, j), 0);
  return assemble_alexander(l);
}

IntMatrix lemma2_reduce(const IntMatrix& E, const IntMatrix& F) {
  if (E.rows() != E.cols() || F.rows() != F.cols() || E.rows() != F.rows())
    throw std::invalid_argument("lemma2_reduce: E, F must be square of equal size");
  if (!(E == E.transpose()) || !(F == F.transpose()))
    throw std::invalid_argument("lemma2_reduce: E, F must be symmetric");
  return E * F;
}

}  // namespace bipknot
