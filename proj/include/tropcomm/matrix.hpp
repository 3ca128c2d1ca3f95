#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropcomm/semiring.hpp"

namespace tropcomm {

/// Dense max-plus vector.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  /// Builds from doubles, -inf meaning Bottom.
  static Vector from_doubles(std::span<const double> values);

  std::size_t dim() const noexcept { return entries_.size(); }
  Scalar operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  Scalar at(std::size_t i) const;

  std::span<const Scalar> entries() const noexcept { return entries_; }
  std::vector<double> to_doubles() const;

  bool is_bottom() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense row-major max-plus matrix.
class Matrix {
 public:
  Matrix() = default;
  /// All-Bottom rows × cols matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws Error(kDimension) unless every row has the same length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_doubles(std::size_t rows, std::size_t cols,
                             std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  Scalar at(std::size_t i, std::size_t j) const;

  std::span<const Scalar> entries() const noexcept { return entries_; }

  /// No entry is Bottom.
  bool is_finite() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix oplus(const Matrix& a, const Matrix& b);
Matrix otimes(const Matrix& a, const Matrix& b);
Vector otimes(const Matrix& a, const Vector& x);

Vector oplus(const Vector& u, const Vector& v);
Vector otimes(Scalar lambda, const Vector& v);

/// Same shape and entrywise trop_eq.
bool approx_equal(const Matrix& a, const Matrix& b,
                  double tol = kDefaultTolerance);
bool approx_equal(const Vector& u, const Vector& v,
                  double tol = kDefaultTolerance);

/// (x1, x2, x3, x4) -> [[x1, x2], [x3, x4]].
Matrix to_mat2(const Vector& x);
/// Inverse of to_mat2.
Vector to_vec4(const Matrix& m);

std::string to_string(const Vector& v);
std::string to_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace tropcomm
