// Dense matrices over a finite field, with the exact elimination routines
// (determinant, reduced row echelon form, inverse, adjugate) that the code
// classification layers are built on.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgrs/field.hpp"

namespace tgrs {

class Matrix {
 public:
  // rows x cols zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Felt at(std::size_t i, std::size_t j) const { return field_.elem(data_[i * cols_ + j]); }
  void set(std::size_t i, std::size_t j, const Felt& v);
  std::uint64_t idx(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set_idx(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v; }
  const std::vector<std::uint64_t>& raw() const { return data_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(const Felt& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Felt det() const;

  struct Rref;  // defined after the class
  Rref rref() const;
  std::size_t rank() const;

  std::optional<Matrix> inverse() const;  // nullopt when singular
  // Adjugate: cofactor expansion for n <= 4 or singular matrices, the
  // det * inverse shortcut for larger invertible ones.
  Matrix adjugate() const;

  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix hstack(const Matrix& right) const;

  // Text form: rows joined by ';', entries by ',' in the field's element
  // format, e.g. "1,2;0,z^3".
  std::string str() const;
  static Matrix parse(const Field& field, std::string_view text);

 private:
  void require_same_shape(const Matrix& o) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
};

struct Matrix::Rref {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

inline std::size_t Matrix::rank() const { return rref().rank; }

// r x points.size() matrix with entry (i, j) = points[j]^i.
Matrix vandermonde(const Field& field, const std::vector<Felt>& points, std::size_t num_rows);
// Square diagonal matrix from the given entries.
Matrix diagonal(const Field& field, const std::vector<Felt>& entries);

namespace detail {
// Determinant of an n x n scratch buffer (row-major element indices),
// destroying the buffer.  This is the kernel the census loops run on.
std::uint64_t det_inplace(const FieldData& fd, std::uint64_t* a, std::size_t n);
}  // namespace detail

}  // namespace tgrs
