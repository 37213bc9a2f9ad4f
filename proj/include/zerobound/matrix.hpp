#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zerobound {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Entries are required to be finite; every
// constructor that accepts data checks this.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix Identity(std::size_t n);
  static ComplexMatrix Zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix Diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  // Copies the rows x cols window starting at (row0, col0).
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t rows,
                      std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

// (X + X*)/2 and (X - X*)/(2i).
ComplexMatrix hermitian_part(const ComplexMatrix& x);
ComplexMatrix skew_hermitian_part(const ComplexMatrix& x);

}  // namespace zerobound
