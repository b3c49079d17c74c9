#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistchar/cyclotomic.hpp"

namespace twistchar {

/// Row-major dense matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

enum class DetStrategy { Gauss, Bareiss };

namespace detail {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const CycloElem& x) { return x.is_zero(); }
inline Rational inverse(const Rational& q) { return 1 / q; }
inline CycloElem inverse(const CycloElem& x) { return x.inverse(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline CycloElem one_like(const CycloElem& x) { return x.field().one(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline CycloElem zero_like(const CycloElem& x) { return x.field().zero(); }

}  // namespace detail

/// Exact determinant. Gauss: elimination with the first nonzero pivot in
/// each column. Bareiss: fraction-free update, each division exact.
/// The empty matrix has determinant `unit`.
template <class T>
T determinant(Matrix<T> m, const T& unit, DetStrategy strategy = DetStrategy::Gauss) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return unit;
  bool negate = false;

  if (strategy == DetStrategy::Gauss) {
    T det = unit;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = k;
      while (pivot < n && detail::is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return detail::zero_like(unit);
      if (pivot != k) {
        m.swap_rows(pivot, k);
        negate = !negate;
      }
      const T inv = detail::inverse(m(k, k));
      det *= m(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (detail::is_zero(m(i, k))) continue;
        const T factor = m(i, k) * inv;
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
      }
    }
    if (negate) det = -det;
    return det;
  }

  T previous = unit;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && detail::is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return detail::zero_like(unit);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    const T inv_prev = detail::inverse(previous);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T updated = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * inv_prev;
        m(i, j) = std::move(updated);
      }
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

inline Rational determinant(const Matrix<Rational>& m,
                            DetStrategy strategy = DetStrategy::Gauss) {
  return determinant(m, Rational(1), strategy);
}

}  // namespace twistchar
