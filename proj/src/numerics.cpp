#include "secbeam/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "secbeam/kernels.hpp"

namespace secbeam {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex{1.0, 0.0};
  }
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch");
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::cmatmul(a.data().data(), b.data().data(), c.data().data(), a.rows(),
                   a.cols(), b.cols(), true);
  return c;
}

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch");
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::cmatmul(a.data().data(), b.data().data(), c.data().data(), a.rows(),
                   a.cols(), b.cols(), false);
  return c;
}

ComplexMatrix hermitian(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

double frobenius_norm_sq(const ComplexMatrix& a) {
  double acc = 0.0;
  for (const Complex& v : a.data()) {
    acc += v.real() * v.real() + v.imag() * v.imag();
  }
  return acc;
}

namespace {

double j0_series(double x) {
  // sum_m (-1)^m (x^2/4)^m / (m!)^2, term ratio -(x/2)^2 / m^2
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 80; ++m) {
    term *= q / (static_cast<double>(m) * static_cast<double>(m));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

double j0_asymptotic(double x) {
  // Hankel expansion: J0(x) = sqrt(2/(pi x)) (P cos w - Q sin w), w = x - pi/4,
  // with a_k = ((2k-1)!!)^2 / (k! 8^k) feeding P (even k) and Q (odd k).
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double sign_p = -1.0;  // applies to a_2, a_6, ...
  double sign_q = -1.0;  // applies to a_1, a_5, ...
  double prev = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= odd * odd / (8.0 * k);
    const double term = a / std::pow(x, k);
    if (term > prev) {
      break;  // asymptotic tail started growing; stop at the smallest term
    }
    prev = term;
    if (k % 2 == 1) {
      q += sign_q * term;
      sign_q = -sign_q;
    } else {
      p += sign_p * term;
      sign_p = -sign_p;
    }
    if (term < 1e-19) {
      break;
    }
  }
  const double w = x - 0.25 * M_PI;
  return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(w) - q * std::sin(w));
}

}  // namespace

double bessel_j0(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("bessel_j0: non-finite argument");
  }
  const double ax = std::abs(x);
  return ax <= 12.0 ? j0_series(ax) : j0_asymptotic(ax);
}

}  // namespace secbeam
