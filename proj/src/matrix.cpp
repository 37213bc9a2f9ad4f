#include "zerobound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zerobound/error.hpp"

namespace zerobound {

namespace {

void RequireFinite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kNonFinite, "matrix entry is NaN or infinite");
    }
  }
}

void RequireSameShape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kShapeMismatch,
                "entry count " + std::to_string(entries_.size()) + " != " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  RequireFinite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kShapeMismatch, "ragged initializer list");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  RequireFinite(entries_);
}

ComplexMatrix ComplexMatrix::Identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  RequireFinite(m.entries());
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0,
                                   std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw Error(ErrorCode::kShapeMismatch, "block window exceeds matrix");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0,
                              const ComplexMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw Error(ErrorCode::kShapeMismatch, "block window exceeds matrix");
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(row0 + r, col0 + c) = b(r, c);
  }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  RequireSameShape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  RequireSameShape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "inner dimensions differ in product");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

Complex trace(const ComplexMatrix& m) {
  Complex sum{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) sum += m(i, i);
  return sum;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  return 0.5 * (x + x.adjoint());
}

ComplexMatrix skew_hermitian_part(const ComplexMatrix& x) {
  return Complex(0.0, -0.5) * (x - x.adjoint());
}

}  // namespace zerobound
