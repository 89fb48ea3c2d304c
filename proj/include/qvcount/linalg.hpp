#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qvcount/rational.hpp"

namespace qvc {

/// Dense row-major rational matrix. Only what the weight-module code needs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Rank by exact Gaussian elimination over Q.
std::size_t rank(Matrix m);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<RationalVector> nullspace(Matrix m);

bool is_zero(const RationalVector& v);

/// Sparse rational matrix stored by columns; entries within a column are sorted by row.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Adds value to entry (r, c). Keeps columns sorted; drops exact zeros.
  void add(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;
  const Column& column(std::size_t c) const { return columns_[c]; }

  RationalVector apply(const RationalVector& x) const;
  SparseMatrix transpose() const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  Matrix to_dense() const;
  static SparseMatrix from_dense(const Matrix& m);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  static SparseMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> columns_;
};

/// Incrementally grown subspace of Q^n kept in echelon form.
///
/// Each echelon row remembers how it is combined from the independent
/// vectors accepted by add(), so express() can write any member of the span
/// in terms of those generators.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Returns true when v was independent of the current span (and is now included).
  bool add(const RationalVector& v);
  bool contains(const RationalVector& v) const;

  /// Coefficients of v over the accepted generators, or nullopt if v is outside the span.
  std::optional<RationalVector> express(const RationalVector& v) const;

  const std::vector<RationalVector>& generators() const { return generators_; }

 private:
  struct Row {
    std::size_t pivot;
    RationalVector values;   // pivot entry normalised to 1
    RationalVector combo;    // over generators_
  };
  // Reduces v against the echelon rows; returns the residual and the multipliers used.
  std::pair<RationalVector, RationalVector> reduce(const RationalVector& v) const;

  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<RationalVector> generators_;
};

}  // namespace qvc
