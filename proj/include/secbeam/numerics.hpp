#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace secbeam {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Deliberately minimal: the channel and
// beamforming math only needs products, conjugate transposes and norms.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Parallel product (row-partitioned, bit-identical to the serial path).
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
// Single-threaded reference, kept for tests and the kernel benchmark.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix hermitian(const ComplexMatrix& a);

double frobenius_norm_sq(const ComplexMatrix& a);

// Zeroth-order Bessel function of the first kind. Power series for
// |x| <= 12, Hankel asymptotic expansion beyond; absolute error stays
// below 1e-10 on |x| <= 50.
double bessel_j0(double x);

}  // namespace secbeam
