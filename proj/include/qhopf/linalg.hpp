#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhopf/rational.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Row-major exact matrix, the workhorse behind nullspaces and inverses.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduction to reduced row echelon form; returns the pivot columns.
// First-nonzero pivoting keeps the result deterministic.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m.at(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rational inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational c = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

// Canonical basis of the kernel {v : M v = 0}: one vector per free column,
// in increasing column order, each with a 1 at its free column.
inline std::vector<std::vector<Rational>> nullspace(Mat m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of M x = rhs if one exists (nullopt when inconsistent or
// underdetermined in the used columns).
inline std::optional<std::vector<Rational>> solve(const Mat& m, const std::vector<Rational>& rhs) {
  Mat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  if (pivots.size() != m.cols) return std::nullopt;                     // not unique
  std::vector<Rational> x(m.cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  Mat aug(m.rows, 2 * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Rational(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() != m.rows || (!pivots.empty() && pivots.back() >= m.cols))
    return std::nullopt;
  Mat inv(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// Canonical form of a spanning set: RREF with zero rows dropped. Two spans
// are equal iff their canonical forms are identical.
inline std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vecs, std::size_t dim) {
  Mat m(vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vecs[i][j];
  const auto pivots = rref(m);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rational> v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = m.at(r, j);
    rows.push_back(std::move(v));
  }
  return rows;
}

// Does v lie in span(rows)? rows need not be reduced.
inline bool in_span(const std::vector<std::vector<Rational>>& rows,
                    const std::vector<Rational>& v, std::size_t dim) {
  auto base = canonical_span(rows, dim);
  auto ext = base;
  ext.push_back(v);
  return canonical_span(ext, dim).size() == base.size();
}

// Flatten a tensor into a matrix: the first n_in legs index rows, the rest
// index columns. Used to treat a map tensor as a matrix acting on flattened
// coordinates.
inline Mat as_matrix(const Tensor& t, std::size_t n_in) {
  std::size_t r = 1, c = 1;
  for (std::size_t i = 0; i < t.order(); ++i)
    (i < n_in ? r : c) *= t.legs()[i].dim;
  Mat m(r, c);
  for (std::size_t f = 0; f < t.size(); ++f) m.a[f] = t.data()[f];
  return m;
}

}  // namespace qhopf
