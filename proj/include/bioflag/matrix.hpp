#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bioflag/field.hpp"

namespace bioflag {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  /// Every row must have length `cols`.
  static Matrix from_rows(PrimeField field, std::size_t cols,
                          const std::vector<Vec>& rows);
  static Matrix identity(PrimeField field, std::size_t n);

  PrimeField field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vector(std::size_t r) const;
  std::vector<Vec> row_vectors() const;

  void append_row(std::span<const Elem> v);

  /// Entries as small integers, one inner vector per row (for reports).
  std::vector<std::vector<int>> to_ints() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }
  /// Orders by shape first, then lexicographically on the row-major entries.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RowEchelon {
  Matrix matrix;  // zero rows dropped
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; zero rows are removed.
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Solves x * m = v for a row vector x; nullopt when v is not in the row space.
/// Rows of m must be linearly independent for the solution to be unique.
std::optional<Vec> solve_left(const Matrix& m, std::span<const Elem> v);

// Vector helpers.
Vec add(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec sub(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec scale(const PrimeField& f, Elem c, std::span<const Elem> a);
/// a += c * b
void axpy(const PrimeField& f, Elem c, std::span<const Elem> b, std::span<Elem> a);
bool is_zero(std::span<const Elem> v);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace bioflag
