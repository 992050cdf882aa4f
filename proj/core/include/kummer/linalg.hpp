#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kummer/finite_field.hpp"

namespace kummer {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Field::Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Field::Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<Field::Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Field::Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Keeps the listed rows in order.
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  /// Appends rows of another matrix. Throws FieldMismatch, ShapeMismatch.
  void append_rows(const Matrix& o);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Field::Elem> data_;
};

struct EchelonForm {
  Matrix matrix;                     // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Row rank by forward elimination; pivots are the first nonzero entry in
/// column order.
std::size_t rank(const Matrix& m);
/// Rank of m1 stacked on m2. Throws FieldMismatch, ShapeMismatch.
std::size_t stack_rank(const Matrix& m1, const Matrix& m2);
/// Forward elimination keeping the nonzero rows: a basis of the row space.
EchelonForm row_basis(const Matrix& m);
/// Reduced row echelon form: pivots normalized to 1, cleared above and below.
EchelonForm row_echelon(const Matrix& m);
/// Basis (as rows) of {v : m v = 0}.
Matrix nullspace(const Matrix& m);
Matrix transpose(const Matrix& m);
/// Throws FieldMismatch, ShapeMismatch.
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace kummer
