#include "xha/matrix.hpp"

#include <sstream>

namespace xha {

Mat::Mat(long rows, long cols, std::vector<Cyc> entries) : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw ArithmeticError("Mat: negative dimension");
  if (static_cast<long>(entries_.size()) != rows * cols)
    throw ArithmeticError("Mat: entry count does not match shape");
}

Mat Mat::identity(long n) {
  Mat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
  return m;
}

Mat Mat::scalar(const Cyc& c) {
  Mat m(1, 1);
  m.at(0, 0) = c;
  return m;
}

Mat Mat::row_vector(std::vector<Cyc> v) {
  long n = static_cast<long>(v.size());
  return Mat(1, n, std::move(v));
}

Mat Mat::col_vector(std::vector<Cyc> v) {
  long n = static_cast<long>(v.size());
  return Mat(n, 1, std::move(v));
}

Mat Mat::leg_permutation(const std::vector<long>& dims, const std::vector<long>& perm) {
  if (dims.size() != perm.size()) throw ArithmeticError("leg_permutation: size mismatch");
  long total = 1;
  for (long d : dims) total *= d;
  std::vector<long> out_dims(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) out_dims[s] = dims[perm[s]];
  Mat p(total, total);
  std::vector<long> in_idx(dims.size(), 0);
  for (long col = 0; col < total; ++col) {
    // decode col into input multi-index
    long rem = col;
    for (long s = static_cast<long>(dims.size()) - 1; s >= 0; --s) {
      in_idx[s] = rem % dims[s];
      rem /= dims[s];
    }
    long row = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) row = row * out_dims[s] + in_idx[perm[s]];
    p.at(row, col) = Cyc::one();
  }
  return p;
}

Mat Mat::swap(long dim_v, long dim_w) { return leg_permutation({dim_v, dim_w}, {1, 0}); }

bool Mat::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArithmeticError("Mat::+: shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ArithmeticError("Mat::*: shape mismatch");
  Mat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Cyc& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Cyc& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::operator*(const Cyc& c) const {
  Mat r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(rows_ * o.rows_, cols_ * o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const Cyc& a = at(i, j);
      if (a.is_zero()) continue;
      for (long k = 0; k < o.rows_; ++k)
        for (long l = 0; l < o.cols_; ++l) {
          const Cyc& b = o.at(k, l);
          if (b.is_zero()) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
        }
    }
  return r;
}

Mat Mat::rref(std::vector<long>* pivot_cols) const {
  Mat m = *this;
  if (pivot_cols) pivot_cols->clear();
  long lead = 0;
  for (long col = 0; col < cols_ && lead < rows_; ++col) {
    long piv = -1;
    for (long i = lead; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (long j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Cyc inv = m.at(lead, col).inverse();
    for (long j = col; j < cols_; ++j) m.at(lead, j) *= inv;
    for (long i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Cyc f = m.at(i, col);
      for (long j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return m;
}

long Mat::rank() const {
  std::vector<long> pivots;
  rref(&pivots);
  return static_cast<long>(pivots.size());
}

std::vector<Mat> Mat::kernel_basis() const {
  std::vector<long> pivots;
  Mat r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<Mat> basis;
  for (long free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Mat v(cols_, 1);
    v.at(free, 0) = Cyc::one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) v.at(pivots[pi], 0) = -r.at(static_cast<long>(pi), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> Mat::solve(const Mat& rhs) const {
  if (rhs.rows_ != rows_) throw ArithmeticError("solve: shape mismatch");
  // Gaussian elimination on the augmented matrix.
  Mat aug(rows_, cols_ + rhs.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (long j = 0; j < rhs.cols_; ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
  }
  std::vector<long> pivots;
  Mat r = aug.rref(&pivots);
  Mat x(cols_, rhs.cols_);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
    long col = pivots[pi];
    if (col >= cols_) return std::nullopt;  // pivot in the rhs block: inconsistent
    for (long j = 0; j < rhs.cols_; ++j) x.at(col, j) = r.at(static_cast<long>(pi), cols_ + j);
  }
  return x;
}

Mat Mat::inverse() const {
  if (!is_square()) throw ArithmeticError("inverse: matrix not square");
  auto x = solve(Mat::identity(rows_));
  if (!x || !((*this) * *x == Mat::identity(rows_))) throw ArithmeticError("inverse: matrix is singular");
  return *x;
}

bool Mat::is_invertible() const {
  if (!is_square()) return false;
  return rank() == rows_;
}

Cyc Mat::determinant() const {
  if (!is_square()) throw ArithmeticError("determinant: matrix not square");
  Mat m = *this;
  Cyc det = Cyc::one();
  for (long col = 0; col < cols_; ++col) {
    long piv = -1;
    for (long i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Cyc::zero();
    if (piv != col) {
      for (long j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Cyc inv = m.at(col, col).inverse();
    for (long i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyc f = m.at(i, col) * inv;
      for (long j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<long> Mat::quotient_representatives(const Mat& span) {
  // Row-reduce the transpose so pivots select a deterministic complement.
  std::vector<long> pivots;
  span.transpose().rref(&pivots);
  std::vector<bool> is_pivot(span.rows(), false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<long> reps;
  for (long i = 0; i < span.rows(); ++i)
    if (!is_pivot[i]) reps.push_back(i);
  return reps;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
  }
  os << "]";
  return os.str();
}

Cyc as_scalar(const Mat& m) {
  if (m.rows() != 1 || m.cols() != 1) throw ArithmeticError("as_scalar: matrix is not 1x1");
  return m.at(0, 0);
}

}  // namespace xha
