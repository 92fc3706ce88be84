#include "pcoinv/matrix.hpp"

namespace pcoinv {

Rref rref(ExactMatrix<Rational> m) {
  Rref out;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rational inv = 1 / m(row, c);
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

std::vector<std::vector<Rational>> kernel(const ExactMatrix<Rational>& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < r.rank(); ++i) {
      v[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] = -r.matrix(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_row_combination(const ExactMatrix<Rational>& m,
                                                           const std::vector<Rational>& target) {
  // Solve m^T c = target via the augmented system [m^T | target].
  const int n = m.rows();
  ExactMatrix<Rational> aug(m.cols(), n + 1, Rational(0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(j, i) = m(i, j);
  }
  for (int j = 0; j < m.cols(); ++j) aug(j, n) = target[static_cast<std::size_t>(j)];
  const Rref r = rref(std::move(aug));
  for (int c : r.pivots) {
    if (c == n) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> sol(static_cast<std::size_t>(n));
  for (int i = 0; i < r.rank(); ++i) sol[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] = r.matrix(i, n);
  return sol;
}

}  // namespace pcoinv
