#include "tropcomm/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_dim(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorKind::kDimension,
                "vector dimensions differ: " + std::to_string(u.dim()) +
                    " vs " + std::to_string(v.dim()));
  }
}

}  // namespace

Vector Vector::from_doubles(std::span<const double> values) {
  Vector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    v[i] = Scalar::from_double(values[i]);
  }
  return v;
}

Scalar Vector::at(std::size_t i) const {
  if (i >= entries_.size()) {
    throw Error(ErrorKind::kDimension, "vector index out of range");
  }
  return entries_[i];
}

std::vector<double> Vector::to_doubles() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (Scalar s : entries_) out.push_back(s.to_double());
  return out;
}

bool Vector::is_bottom() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar s) { return s.is_bottom(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::kDimension, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(0.0);
  return m;
}

Matrix Matrix::from_doubles(std::size_t rows, std::size_t cols,
                            std::span<const double> values) {
  if (values.size() != rows * cols) {
    throw Error(ErrorKind::kDimension,
                "expected " + std::to_string(rows * cols) + " values, got " +
                    std::to_string(values.size()));
  }
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < values.size(); ++k) {
    m.entries_[k] = Scalar::from_double(values[k]);
  }
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorKind::kDimension, "matrix index out of range");
  }
  return (*this)(i, j);
}

bool Matrix::is_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar s) { return s.is_finite(); });
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimension,
                "cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimension,
                "cannot multiply " + shape(a) + " by " + shape(b));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = oplus(acc, otimes(a(i, k), b(k, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Vector otimes(const Matrix& a, const Vector& x) {
  if (a.cols() != x.dim()) {
    throw Error(ErrorKind::kDimension,
                "cannot multiply " + shape(a) + " by vector of dim " +
                    std::to_string(x.dim()));
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), x[k]));
    out[i] = acc;
  }
  return out;
}

Vector oplus(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  Vector out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = oplus(u[i], v[i]);
  return out;
}

Vector otimes(Scalar lambda, const Vector& v) {
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = otimes(lambda, v[i]);
  return out;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (!trop_eq(a.entries()[k], b.entries()[k], tol)) return false;
  }
  return true;
}

bool approx_equal(const Vector& u, const Vector& v, double tol) {
  if (u.dim() != v.dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!trop_eq(u[i], v[i], tol)) return false;
  }
  return true;
}

Matrix to_mat2(const Vector& x) {
  if (x.dim() != 4) {
    throw Error(ErrorKind::kDimension,
                "a 2x2 matrix needs a 4-vector, got dim " + std::to_string(x.dim()));
  }
  return Matrix{{x[0], x[1]}, {x[2], x[3]}};
}

Vector to_vec4(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorKind::kDimension, "expected 2x2 matrix, got " + shape(m));
  }
  return Vector{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  return os << to_string(v);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << to_string(m);
}

}  // namespace tropcomm
