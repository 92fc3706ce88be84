#pragma once

// Dense matrices over an exact field (Rational or CycloElem) with
// fraction-free rank and reduced row echelon forms.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcoinv/cyclotomic.hpp"
#include "pcoinv/rational.hpp"

namespace pcoinv {

inline bool is_zero_elem(const Rational& x) { return x == 0; }
inline bool is_zero_elem(const CycloElem& x) { return x.is_zero(); }

template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  static ExactMatrix identity(int n, const T& zero, const T& one) {
    ExactMatrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Appends a row; `row.size()` must equal cols().
  void append_row(const std::vector<T>& row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  ExactMatrix transpose() const {
    if (data_.empty()) return ExactMatrix(cols_, rows_, T{});
    ExactMatrix t(cols_, rows_, data_.front());
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Rank by Bareiss fraction-free elimination; every intermediate entry is a
/// minor of the input, so exact division is always available.
template <class T>
int rank(ExactMatrix<T> m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  int pivot_row = 0;
  std::optional<T> prev;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int p = pivot_row;
    while (p < m.rows() && is_zero_elem(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, pivot_row);
    const T piv = m(pivot_row, c);
    std::optional<T> prev_inv;
    if (prev) prev_inv = T(1) / *prev;
    for (int i = pivot_row + 1; i < m.rows(); ++i) {
      const T lead = m(i, c);
      for (int j = c + 1; j < m.cols(); ++j) {
        T v = piv * m(i, j) - lead * m(pivot_row, j);
        if (prev_inv) v *= *prev_inv;
        m(i, j) = std::move(v);
      }
      m(i, c) = m(i, c) - m(i, c);
    }
    prev = piv;
    ++pivot_row;
  }
  return pivot_row;
}

template <>
inline int rank(ExactMatrix<CycloElem> m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  int pivot_row = 0;
  std::optional<CycloElem> prev_inv;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int p = pivot_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, pivot_row);
    const CycloElem piv = m(pivot_row, c);
    for (int i = pivot_row + 1; i < m.rows(); ++i) {
      const CycloElem lead = m(i, c);
      const bool lead_zero = lead.is_zero();
      for (int j = c + 1; j < m.cols(); ++j) {
        CycloElem v = piv * m(i, j);
        if (!lead_zero) v -= lead * m(pivot_row, j);
        if (prev_inv) v *= *prev_inv;
        m(i, j) = std::move(v);
      }
      m(i, c) = piv.field()->zero();
    }
    prev_inv = piv.inverse();
    ++pivot_row;
  }
  return pivot_row;
}

/// Reduced row echelon form over Q.
struct Rref {
  ExactMatrix<Rational> matrix;  // nonzero rows first
  std::vector<int> pivots;       // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(ExactMatrix<Rational> m);

/// Basis of {x : m x = 0}, one vector per free column (1 there, 0 at other free columns).
std::vector<std::vector<Rational>> kernel(const ExactMatrix<Rational>& m);

/// Finds c with sum_i c_i * row_i(m) == target, if one exists.
std::optional<std::vector<Rational>> solve_row_combination(const ExactMatrix<Rational>& m,
                                                           const std::vector<Rational>& target);

}  // namespace pcoinv
