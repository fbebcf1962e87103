#pragma once

#include "xha/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace xha {

/// Dense matrix over Q(zeta_n), row-major. A linear map f: V -> W with
/// dim V = m, dim W = n is an n x m matrix. Tensor product bases are ordered
/// lexicographically: e_i (x) f_j has index i * dim(F) + j (0-based).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(long rows, long cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows < 0 || cols < 0) throw ArithmeticError("Mat: negative dimension");
  }
  Mat(long rows, long cols, std::vector<Cyc> entries);

  static Mat identity(long n);
  static Mat zero(long rows, long cols) { return Mat(rows, cols); }
  /// 1x1 matrix holding a scalar.
  static Mat scalar(const Cyc& c);
  static Mat row_vector(std::vector<Cyc> v);
  static Mat col_vector(std::vector<Cyc> v);
  /// Permutation matrix for reordering tensor legs: `dims` are the input leg
  /// dimensions; output slot s carries input leg perm[s].
  static Mat leg_permutation(const std::vector<long>& dims, const std::vector<long>& perm);
  /// swap_{V,W}: V (x) W -> W (x) V.
  static Mat swap(long dim_v, long dim_w);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const Cyc& at(long i, long j) const { return entries_[i * cols_ + j]; }
  Cyc& at(long i, long j) { return entries_[i * cols_ + j]; }
  const std::vector<Cyc>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // composition: (*this) after o
  Mat operator*(const Cyc& c) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  /// Kronecker product under the declared basis ordering.
  Mat kron(const Mat& o) const;

  /// Reduced row echelon form; returns the pivot columns (leftmost-pivot rule).
  Mat rref(std::vector<long>* pivot_cols = nullptr) const;
  long rank() const;
  /// Basis of the null space, one column vector per basis element, in the
  /// deterministic order induced by the free columns.
  std::vector<Mat> kernel_basis() const;
  Mat inverse() const;  // throws if singular
  bool is_invertible() const;
  std::optional<Mat> solve(const Mat& rhs) const;  // one solution of (*this) x = rhs
  Cyc determinant() const;

  /// Treating the columns of `span` (a rows x k matrix) as vectors in an
  /// ambient space of dimension rows(): returns the indices of standard basis
  /// vectors e_i forming a complement of the column span (quotient
  /// representatives), chosen by the deterministic leftmost-pivot rule.
  static std::vector<long> quotient_representatives(const Mat& span);

  std::string to_string() const;

 private:
  long rows_, cols_;
  std::vector<Cyc> entries_;
};

/// First entry of a 1x1 matrix.
Cyc as_scalar(const Mat& m);

}  // namespace xha
