#pragma once

#include <stdexcept>
#include <vector>

#include "bipknot/laurent.hpp"

namespace bipknot {

// Row-major dense matrix over an exact ring.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, T fill = T())
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k)
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Mat m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
      for (size_t j = 0; j < col_idx.size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IntMatrix = Mat<Int>;
using LaurentMatrix = Mat<LaurentPoly>;
using IntPolyMatrix = Mat<IntPoly>;

// Exact determinants, fraction-free (Bareiss).  Laurent entries are
// cleared to nonnegative exponents first and the introduced unit is
// divided out at the end.
LaurentPoly det(const LaurentMatrix& m);
IntPoly det(const IntPolyMatrix& m);
Int det(const IntMatrix& m);

// All k x k minors, canonicalized (zero minors stay zero), in
// lexicographic order over (row index set, column index set).
std::vector<LaurentPoly> minors(const LaurentMatrix& m, int k);

// Entrywise t*M_ij - M_ji.
LaurentMatrix assemble_alexander(const LaurentMatrix& m);
LaurentMatrix assemble_alexander(const IntMatrix& m);

// The block elimination: for E, F square symmetric of equal size,
// returns B = E*F, so that I + z^2*B presents the same knot as the
// block Seifert matrix [[E,0],[I,F]].
IntMatrix lemma2_reduce(const IntMatrix& E, const IntMatrix& F);

// Enumerate k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k);

}  // namespace bipknot
