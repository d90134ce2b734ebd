#pragma once

#include "ilsconn/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ilsconn {

/// Dense row-major grid. Immutable once built; all transformations return a
/// new grid.
template <typename T> class Grid {
public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Grid(std::size_t rows, std::size_t cols, std::vector<T> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const T> data() const noexcept { return data_; }

  bool operator==(const Grid &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// The coefficient matrix A of a system Ax >= b.
class CoeffMatrix : public Grid<Rational> {
public:
  using Grid::Grid;

  static CoeffMatrix
  from_integers(std::initializer_list<std::initializer_list<long long>> rows);
  static CoeffMatrix from_rows(const std::vector<std::vector<Rational>> &rows);
};

/// Entrywise signs of a coefficient matrix, each in {-1, 0, 1}.
class SignPattern : public Grid<std::int8_t> {
public:
  using Grid::Grid;

  static SignPattern
  from_signs(std::initializer_list<std::initializer_list<int>> rows);

  int sign(std::size_t i, std::size_t j) const { return (*this)(i, j); }
};

using RhsVector = std::vector<Rational>;
using Point = std::vector<int>;

/// Upper end d of the variable domain {0, ..., d}.
class DomainBound {
public:
  explicit DomainBound(int d);
  int value() const noexcept { return d_; }
  bool operator==(const DomainBound &) const = default;

private:
  int d_;
};

SignPattern sign_pattern(const CoeffMatrix &a);

/// Rows and columns copied in the given order. Indices must be in range and
/// distinct.
CoeffMatrix submatrix(const CoeffMatrix &a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols);

/// Output entry (i, j) is input entry (row_perm[i], col_perm[j]).
CoeffMatrix permute(const CoeffMatrix &a, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm);
SignPattern permute(const SignPattern &p, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm);

/// a_i . x
Rational row_dot(const CoeffMatrix &a, std::size_t i, std::span<const int> x);

/// Result of negating a set of columns. The substitution x_j -> d - x_j on
/// the flipped columns maps R(A, b) bijectively onto R(A', b') and preserves
/// Hamming distance.
struct ColumnFlip {
  CoeffMatrix matrix;
  RhsVector rhs;
  std::vector<bool> flipped;
  int d = 1;

  Point map(std::span<const int> x) const;
};

ColumnFlip flip_columns(const CoeffMatrix &a, const RhsVector &b,
                        std::span<const std::size_t> columns, DomainBound d);

/// Throws InputError unless `perm` is a permutation of {0, ..., size-1}.
void require_permutation(std::span<const std::size_t> perm, std::size_t size,
                         const char *what);

} // namespace ilsconn
