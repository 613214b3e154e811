#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cyclo/integer.hpp"

namespace cyclo {

/// Dense row-major matrix of unbounded integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Integer> column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Integer> values);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  IntMatrix transposed() const;
  /// Main-diagonal entries, min(rows, cols) of them.
  std::vector<Integer> diagonal_entries() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v);

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
Integer determinant(const IntMatrix& a);

/// Kronecker product: block (i, j) is a(i, j) * b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Text format: "rows cols" on the first line, then one line of
/// space-separated decimal integers per row.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);
std::string to_string(const IntMatrix& m);

}  // namespace cyclo
