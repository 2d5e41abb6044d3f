#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphcodes/gf.hpp"

namespace graphcodes {

/// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  /// Keeps the first n rows.
  void truncate_rows(std::size_t n);
  void append_row(std::span<const Element> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Brings `m` to reduced row-echelon form in place and drops zero rows.
/// Pivoting is deterministic: columns left to right, first nonzero row at
/// or below the current rank. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, const Field& f);

std::size_t rank(Matrix m, const Field& f);

/// row_dst += c * row_src
void axpy(std::span<Element> dst, Element c, std::span<const Element> src, const Field& f) noexcept;

}  // namespace graphcodes
