#include "secbeam/kernels.hpp"

#include <cstdint>
#include <omp.h>

namespace secbeam::kernels {

namespace {
// Small outputs are not worth a team launch.
constexpr std::size_t kParallelGrain = 4096;
}  // namespace

void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n,
             bool parallel) {
  const std::int64_t rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (parallel && m * k * n > kParallelGrain)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::complex<double>* arow = a + i * k;
    std::complex<double>* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t p = 0; p < k; ++p) {
        acc += arow[p] * b[p * n + j];
      }
      crow[j] = acc;
    }
  }
}

void dense_forward(const double* w, const double* b, const double* x, double* y,
                   std::size_t batch, std::size_t in, std::size_t out, bool relu,
                   bool parallel) {
  const std::int64_t rows = static_cast<std::int64_t>(batch);
#pragma omp parallel for schedule(static) if (parallel && batch * in * out > kParallelGrain)
  for (std::int64_t h = 0; h < rows; ++h) {
    const double* xrow = x + h * in;
    double* yrow = y + h * out;
    for (std::size_t o = 0; o < out; ++o) {
      const double* wrow = w + o * in;
      double acc = b[o];
      for (std::size_t i = 0; i < in; ++i) {
        acc += wrow[i] * xrow[i];
      }
      yrow[o] = relu && acc < 0.0 ? 0.0 : acc;
    }
  }
}

void dense_backward_data(const double* w, const double* dy, double* dx,
                         std::size_t batch, std::size_t in, std::size_t out,
                         bool parallel) {
  const std::int64_t rows = static_cast<std::int64_t>(batch);
#pragma omp parallel for schedule(static) if (parallel && batch * in * out > kParallelGrain)
  for (std::int64_t h = 0; h < rows; ++h) {
    const double* dyrow = dy + h * out;
    double* dxrow = dx + h * in;
    for (std::size_t i = 0; i < in; ++i) {
      dxrow[i] = 0.0;
    }
    for (std::size_t o = 0; o < out; ++o) {
      const double g = dyrow[o];
      if (g == 0.0) {
        continue;
      }
      const double* wrow = w + o * in;
      for (std::size_t i = 0; i < in; ++i) {
        dxrow[i] += g * wrow[i];
      }
    }
  }
}

void dense_grad_weights(const double* dy, const double* x, double* dw,
                        std::size_t batch, std::size_t in, std::size_t out,
                        bool parallel) {
  const std::int64_t rows = static_cast<std::int64_t>(out);
#pragma omp parallel for schedule(static) if (parallel && batch * in * out > kParallelGrain)
  for (std::int64_t o = 0; o < rows; ++o) {
    double* dwrow = dw + o * in;
    for (std::size_t i = 0; i < in; ++i) {
      dwrow[i] = 0.0;
    }
    for (std::size_t h = 0; h < batch; ++h) {
      const double g = dy[h * out + o];
      if (g == 0.0) {
        continue;
      }
      const double* xrow = x + h * in;
      for (std::size_t i = 0; i < in; ++i) {
        dwrow[i] += g * xrow[i];
      }
    }
  }
}

void dense_grad_bias(const double* dy, double* db, std::size_t batch,
                     std::size_t out, bool parallel) {
  const std::int64_t cols = static_cast<std::int64_t>(out);
#pragma omp parallel for schedule(static) if (parallel && batch * out > kParallelGrain)
  for (std::int64_t o = 0; o < cols; ++o) {
    double acc = 0.0;
    for (std::size_t h = 0; h < batch; ++h) {
      acc += dy[h * out + o];
    }
    db[o] = acc;
  }
}

void axpy(double alpha, const double* g, double* w, std::size_t n, bool parallel) {
  const std::int64_t len = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (parallel && n > kParallelGrain)
  for (std::int64_t i = 0; i < len; ++i) {
    w[i] += alpha * g[i];
  }
}

}  // namespace secbeam::kernels
