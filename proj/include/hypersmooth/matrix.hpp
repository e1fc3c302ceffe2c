#pragma once

// Small dense matrices over an exact field. Elimination always takes the
// first nonzero entry in a column as pivot.

#include <cstddef>
#include <utility>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/field_concept.hpp"

namespace hypersmooth {

template <ExactField Field>
class FieldMatrix {
 public:
  using Element = typename Field::Element;

  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  FieldMatrix(Field field, const std::vector<std::vector<Element>>& rows)
      : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) raise(ErrorKind::PreconditionViolated, "ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static FieldMatrix identity(const Field& field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field_ == b.field_)) raise(ErrorKind::DescriptorMismatch, "matrix fields differ");
    if (a.cols_ != b.rows_) raise(ErrorKind::PreconditionViolated, "matrix shapes do not chain");
    const Field& f = a.field_;
    FieldMatrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (f.is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
      }
    return c;
  }

  std::vector<Element> apply(const std::vector<Element>& v) const {
    if (v.size() != cols_) raise(ErrorKind::PreconditionViolated, "vector length mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    const Field& f = field_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && f.is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, r);
      const Element s = f.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = f.mul((*this)(r, j), s);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || f.is_zero((*this)(i, c))) continue;
        const Element t = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = f.sub((*this)(i, j), f.mul(t, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    FieldMatrix m = *this;
    return m.rref_in_place().size();
  }

  Element det() const {
    if (rows_ != cols_) raise(ErrorKind::PreconditionViolated, "determinant of a non-square matrix");
    const Field& f = field_;
    FieldMatrix m = *this;
    Element d = f.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && f.is_zero(m(piv, c))) ++piv;
      if (piv == rows_) return f.zero();
      if (piv != c) {
        m.swap_rows(piv, c);
        d = f.neg(d);
      }
      d = f.mul(d, m(c, c));
      const Element s = f.inv(m(c, c));
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (f.is_zero(m(i, c))) continue;
        const Element t = f.mul(m(i, c), s);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(c, j)));
      }
    }
    return d;
  }

  /// Kernel basis read off the reduced echelon form: one vector per free
  /// column (ascending), with a 1 in that column and 0 in the other free ones.
  std::vector<std::vector<Element>> kernel() const {
    const Field& f = field_;
    FieldMatrix m = *this;
    const auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Element>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Element> v(cols_, f.zero());
      v[free] = f.one();
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(m(k, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of M x = b (free variables set to 0).
  std::vector<Element> solve(const std::vector<Element>& b) const {
    if (b.size() != rows_) raise(ErrorKind::PreconditionViolated, "right-hand side length mismatch");
    const Field& f = field_;
    FieldMatrix aug(f, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    const auto pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) raise(ErrorKind::NoSolution, "inconsistent linear system");
    std::vector<Element> x(cols_, f.zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
    return x;
  }

  FieldMatrix inverse() const {
    if (rows_ != cols_) raise(ErrorKind::PreconditionViolated, "inverse of a non-square matrix");
    const Field& f = field_;
    FieldMatrix aug(f, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = f.one();
    }
    const auto pivots = aug.rref_in_place();
    if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) raise(ErrorKind::NoSolution, "matrix is singular");
    FieldMatrix inv(f, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <ExactField Field>
typename Field::Element matrix_det(const FieldMatrix<Field>& m) { return m.det(); }

template <ExactField Field>
std::vector<std::vector<typename Field::Element>> matrix_kernel(const FieldMatrix<Field>& m) { return m.kernel(); }

template <ExactField Field>
std::vector<typename Field::Element> matrix_solve(const FieldMatrix<Field>& m, const std::vector<typename Field::Element>& b) {
  return m.solve(b);
}

}  // namespace hypersmooth
