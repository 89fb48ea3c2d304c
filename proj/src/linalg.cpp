#include "qvcount/linalg.hpp"

#include <algorithm>

#include "qvcount/errors.hpp"

namespace qvc {

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<RationalVector> nullspace(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------- sparse

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw DimensionError("sparse add: index out of range");
  if (value == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, value});
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

RationalVector SparseMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw DimensionError("sparse apply: length mismatch");
  RationalVector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c] == 0) continue;
    for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].push_back({c, v});
  return t;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) s.columns_[c].push_back({r, m(r, c)});
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s.columns_[i].push_back({i, Rational(1)});
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("sparse product: shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  RationalVector acc(a.rows_);
  std::vector<std::size_t> touched;
  std::vector<bool> mark(a.rows_, false);
  for (std::size_t c = 0; c < b.cols_; ++c) {
    touched.clear();
    for (const auto& [k, bv] : b.columns_[c]) {
      for (const auto& [r, av] : a.columns_[k]) {
        if (!mark[r]) {
          mark[r] = true;
          touched.push_back(r);
        }
        acc[r] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto r : touched) {
      if (acc[r] != 0) out.columns_[c].push_back({r, acc[r]});
      acc[r] = 0;
      mark[r] = false;
    }
  }
  return out;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sparse sum: shape mismatch");
  SparseMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [r, v] : b.column(c)) out.add(r, c, sign > 0 ? v : Rational(-v));
  return out;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, -1); }

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
  SparseMatrix out(a.rows_, a.cols_);
  if (s == 0) return out;
  for (std::size_t c = 0; c < a.cols_; ++c)
    for (const auto& [r, v] : a.columns_[c]) out.columns_[c].push_back({r, s * v});
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

// ---------------------------------------------------------------- subspace

std::pair<RationalVector, RationalVector> Subspace::reduce(const RationalVector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector length mismatch");
  RationalVector x = v;
  RationalVector mult(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (x[row.pivot] == 0) continue;
    Rational f = x[row.pivot];
    mult[k] = f;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (row.values[c] != 0) x[c] -= f * row.values[c];
  }
  return {std::move(x), std::move(mult)};
}

bool Subspace::add(const RationalVector& v) {
  auto [x, mult] = reduce(v);
  auto it = std::find_if(x.begin(), x.end(), [](const Rational& e) { return e != 0; });
  if (it == x.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - x.begin());
  Rational inv = 1 / x[pivot];
  for (auto& e : x) e *= inv;

  std::size_t g = generators_.size();
  RationalVector combo(g + 1);
  combo[g] = inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (mult[k] == 0) continue;
    const auto& ck = rows_[k].combo;
    for (std::size_t j = 0; j < ck.size(); ++j) combo[j] -= mult[k] * ck[j] * inv;
  }
  rows_.push_back({pivot, std::move(x), std::move(combo)});
  generators_.push_back(v);
  return true;
}

bool Subspace::contains(const RationalVector& v) const { return is_zero(reduce(v).first); }

std::optional<RationalVector> Subspace::express(const RationalVector& v) const {
  auto [x, mult] = reduce(v);
  if (!is_zero(x)) return std::nullopt;
  RationalVector coeffs(generators_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (mult[k] == 0) continue;
    const auto& ck = rows_[k].combo;
    for (std::size_t j = 0; j < ck.size(); ++j) coeffs[j] += mult[k] * ck[j];
  }
  return coeffs;
}

}  // namespace qvc
