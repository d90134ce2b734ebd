#include "ilsconn/matrix.hpp"

#include "ilsconn/errors.hpp"

#include <string>

namespace ilsconn {

template <typename T>
Grid<T>::Grid(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw InputError("grid of " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " given " +
                     std::to_string(data_.size()) + " entries");
}

template class Grid<Rational>;
template class Grid<std::int8_t>;

CoeffMatrix CoeffMatrix::from_integers(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> data;
  data.reserve(m * n);
  for (const auto &r : rows) {
    if (r.size() != n) throw InputError("ragged matrix rows");
    for (long long v : r) data.emplace_back(v);
  }
  return CoeffMatrix(m, n, std::move(data));
}

CoeffMatrix
CoeffMatrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<Rational> data;
  data.reserve(m * n);
  for (const auto &r : rows) {
    if (r.size() != n) throw InputError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return CoeffMatrix(m, n, std::move(data));
}

SignPattern SignPattern::from_signs(
    std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<std::int8_t> data;
  data.reserve(m * n);
  for (const auto &r : rows) {
    if (r.size() != n) throw InputError("ragged sign pattern rows");
    for (int v : r) {
      if (v < -1 || v > 1) throw InputError("sign entries must be -1, 0 or 1");
      data.push_back(static_cast<std::int8_t>(v));
    }
  }
  return SignPattern(m, n, std::move(data));
}

DomainBound::DomainBound(int d) : d_(d) {
  if (d < 1) throw InputError("domain bound d must be at least 1");
}

SignPattern sign_pattern(const CoeffMatrix &a) {
  std::vector<std::int8_t> signs;
  signs.reserve(a.data().size());
  for (const auto &v : a.data()) signs.push_back(static_cast<std::int8_t>(sgn(v)));
  return SignPattern(a.rows(), a.cols(), std::move(signs));
}

namespace {

void require_distinct_in_range(std::span<const std::size_t> idx,
                               std::size_t bound, const char *what) {
  std::vector<bool> seen(bound, false);
  for (std::size_t k : idx) {
    if (k >= bound)
      throw InputError(std::string(what) + " index " + std::to_string(k + 1) +
                       " out of range 1.." + std::to_string(bound));
    if (seen[k])
      throw InputError(std::string("duplicate ") + what + " index " +
                       std::to_string(k + 1));
    seen[k] = true;
  }
}

template <typename T>
std::vector<T> select(const Grid<T> &g, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  std::vector<T> out;
  out.reserve(rows.size() * cols.size());
  for (std::size_t i : rows)
    for (std::size_t j : cols) out.push_back(g(i, j));
  return out;
}

} // namespace

void require_permutation(std::span<const std::size_t> perm, std::size_t size,
                         const char *what) {
  if (perm.size() != size)
    throw InputError(std::string(what) + " permutation has length " +
                     std::to_string(perm.size()) + ", expected " +
                     std::to_string(size));
  require_distinct_in_range(perm, size, what);
}

CoeffMatrix submatrix(const CoeffMatrix &a, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  require_distinct_in_range(rows, a.rows(), "row");
  require_distinct_in_range(cols, a.cols(), "column");
  return CoeffMatrix(rows.size(), cols.size(), select(a, rows, cols));
}

CoeffMatrix permute(const CoeffMatrix &a, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm) {
  require_permutation(row_perm, a.rows(), "row");
  require_permutation(col_perm, a.cols(), "column");
  return CoeffMatrix(a.rows(), a.cols(), select(a, row_perm, col_perm));
}

SignPattern permute(const SignPattern &p, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm) {
  require_permutation(row_perm, p.rows(), "row");
  require_permutation(col_perm, p.cols(), "column");
  return SignPattern(p.rows(), p.cols(), select(p, row_perm, col_perm));
}

Rational row_dot(const CoeffMatrix &a, std::size_t i, std::span<const int> x) {
  Rational sum = 0;
  auto r = a.row(i);
  for (std::size_t j = 0; j < r.size(); ++j)
    if (x[j] != 0 && !r[j].is_zero()) sum += r[j] * x[j];
  return sum;
}

Point ColumnFlip::map(std::span<const int> x) const {
  Point y(x.begin(), x.end());
  for (std::size_t j = 0; j < y.size(); ++j)
    if (flipped[j]) y[j] = d - y[j];
  return y;
}

ColumnFlip flip_columns(const CoeffMatrix &a, const RhsVector &b,
                        std::span<const std::size_t> columns, DomainBound d) {
  if (b.size() != a.rows())
    throw InputError("right-hand side length does not match matrix rows");
  std::vector<bool> flipped(a.cols(), false);
  for (std::size_t j : columns) {
    if (j >= a.cols()) throw InputError("flip column index out of range");
    flipped[j] = true;
  }
  std::vector<Rational> data(a.data().begin(), a.data().end());
  RhsVector rhs = b;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!flipped[j]) continue;
      rhs[i] -= a(i, j) * d.value();
      data[i * a.cols() + j] = -a(i, j);
    }
  return ColumnFlip{CoeffMatrix(a.rows(), a.cols(), std::move(data)),
                    std::move(rhs), std::move(flipped), d.value()};
}

} // namespace ilsconn
