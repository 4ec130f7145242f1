#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace bispec::linalg {

// Gaussian elimination over an exact field T (Rational, RationalFunction).
// T must provide is_zero(), inverse(), +, -, * and T{} == 0, T(1) == 1.

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
struct Echelon {
  Matrix<T> rows;           // reduced rows, pivot entries equal to 1
  std::vector<int> pivots;  // pivot column of each row
  int cols = 0;
};

template <class T>
Echelon<T> reduce(Matrix<T> m, int cols) {
  Echelon<T> e;
  e.cols = cols;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    T inv = m[r][static_cast<std::size_t>(c)].inverse();
    for (auto& v : m[r])
      if (!v.is_zero()) v = v * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      T f = m[i][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        const T& s = m[r][static_cast<std::size_t>(j)];
        if (!s.is_zero()) m[i][static_cast<std::size_t>(j)] = m[i][static_cast<std::size_t>(j)] - f * s;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

template <class T>
int rank(const Matrix<T>& m, int cols) {
  return static_cast<int>(reduce(m, cols).pivots.size());
}

// Basis of {v : m v = 0}; one vector per free column, that entry set to 1.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, int cols) {
  Echelon<T> e = reduce(m, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<T> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = T(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.rows[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m v = b (free variables zero), if consistent.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> m, const std::vector<T>& b, int cols) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  Echelon<T> e = reduce(std::move(m), cols + 1);
  std::vector<T> v(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    v[static_cast<std::size_t>(e.pivots[r])] = e.rows[r][static_cast<std::size_t>(cols)];
  }
  return v;
}

template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return T{};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    T inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      T f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

}  // namespace bispec::linalg
