#pragma once

#include "braidss/error.hpp"
#include "braidss/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidss {

// Sparse exact matrix, stored column by column. No explicit zeros.
class RationalMatrix {
 public:
  using Column = std::map<std::size_t, Rational>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& a) {
    std::size_t cols = a.empty() ? 0 : a.front().size();
    RationalMatrix m(a.size(), cols);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a[r].size() != cols) throw ArgumentError("ragged dense matrix");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, a[r][c]);
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.set(k, k, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  Rational at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = columns_[c].find(r);
    return it == columns_[c].end() ? Rational(0) : it->second;
  }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    check(r, c);
    if (v == 0)
      columns_[c].erase(r);
    else
      columns_[c][r] = v;
  }

  void add(std::size_t r, std::size_t c, const Rational& v) { set(r, c, at(r, c) + v); }

  const Column& column(std::size_t c) const { return columns_.at(c); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
  }

  bool is_zero() const { return nonzeros() == 0; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) t.columns_[r][c] = v;
    return t;
  }

  std::vector<std::vector<Rational>> to_dense() const {
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols()));
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) a[r][c] = v;
    return a;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols())
      throw ArgumentError("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                          std::to_string(cols()));
  }

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw ArgumentError("shape mismatch in product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) acc[r] += av * bv;
    for (const auto& [r, v] : acc) out.set(r, c, v);
  }
  return out;
}

// Rank over Q by fraction-free (Bareiss) elimination on an integer copy of
// the matrix; each row is first cleared of denominators, which does not
// change the rank. Columns are scanned left to right; the pivot is the
// remaining row with the largest-magnitude entry in that column, earliest
// row on ties.
inline std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0 || m.is_zero()) return 0;

  std::vector<Integer> row_scale(rows, Integer(1));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : m.column(c)) row_scale[r] = boost::multiprecision::lcm(row_scale[r], denominator_of(v));

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : m.column(c)) a[r][c] = numerator_of(v) * (row_scale[r] / denominator_of(v));

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (pivot == rows || boost::multiprecision::abs(a[i][c]) > boost::multiprecision::abs(a[pivot][c])) pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * a[i][j];
        if (f != 0) v -= f * a[r][j];
        a[i][j] = v / prev;
      }
      a[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

// Rank by plain rational Gauss-Jordan elimination. Slower; kept as an
// independent cross-check of the fraction-free routine.
inline std::size_t rank_gaussian(const RationalMatrix& m) {
  auto a = m.to_dense();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace braidss
