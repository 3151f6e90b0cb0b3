#ifndef TOROIDAL_LINALG_HPP
#define TOROIDAL_LINALG_HPP

#include "rational.hpp"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace toroidal {

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b)
  {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form, in place. Within each column the pivot is the
/// nonzero entry of smallest bit size, which keeps intermediate numerators
/// and denominators short. Returns the pivot column of each leading row.
inline std::vector<std::size_t> row_reduce(Matrix& a)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      if (auto s = bit_size(a(r, col)); s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best == a.rows()) continue;
    a.swap_rows(row, best);
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (a(row, c) != 0) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix a) { return row_reduce(a).size(); }

/// Basis of {x : A x = 0}, one vector per free column, in RREF-normalized form.
inline std::vector<std::vector<Rational>> kernel(Matrix a)
{
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace toroidal

#endif
