#pragma once

// Dense matrices of encoded field elements and the handful of
// Gaussian-elimination routines the rest of the library is built on.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "masseyx/gf.hpp"

namespace masseyx {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  Matrix transpose() const;
  // Columns in the given order (0-based).
  Matrix columns(std::span<const std::size_t> which) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;                  // reduced row-echelon form, zero rows removed
  std::vector<std::size_t> pivots; // pivot column of each remaining row
};

Echelon rref(const FieldSpec& f, Matrix m);
std::size_t rank(const FieldSpec& f, const Matrix& m);

// Basis (as rows) of { x : m x^T = 0 }.
Matrix right_kernel(const FieldSpec& f, const Matrix& m);
// Basis (as rows) of { u : u m = 0 }.
Matrix left_kernel(const FieldSpec& f, const Matrix& m);
// Some u with u m = b, if one exists.
std::optional<std::vector<Elem>> solve_left(const FieldSpec& f, const Matrix& m, std::span<const Elem> b);

// u m for a row vector u.
std::vector<Elem> row_times(const FieldSpec& f, std::span<const Elem> u, const Matrix& m);
// a m^T == 0 entrywise, i.e. every row of a is orthogonal to every row of b.
bool rows_orthogonal(const FieldSpec& f, const Matrix& a, const Matrix& b);

}  // namespace masseyx
