#pragma once

#include <complex>
#include <cstddef>

namespace secbeam::kernels {

// Data-parallel primitives behind the matrix and network code. Every kernel
// takes a `parallel` switch; the OpenMP split is over disjoint output rows
// and inner reductions keep a fixed order, so serial and parallel runs
// produce bit-identical results. The serial path doubles as the reference
// implementation in tests and the kernel benchmark.

// C[m x n] = A[m x k] * B[k x n], row-major complex.
void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n,
             bool parallel);

// Y[h] = W X[h] + b for each row h of X; optional rectifier on the output.
// W is out x in row-major, X is batch x in, Y is batch x out.
void dense_forward(const double* w, const double* b, const double* x, double* y,
                   std::size_t batch, std::size_t in, std::size_t out, bool relu,
                   bool parallel);

// dX[h] = dY[h] W (back-propagated data gradient), dX is batch x in.
void dense_backward_data(const double* w, const double* dy, double* dx,
                         std::size_t batch, std::size_t in, std::size_t out,
                         bool parallel);

// dW[o][i] = sum_h dY[h][o] X[h][i]; batch reduction runs in index order.
void dense_grad_weights(const double* dy, const double* x, double* dw,
                        std::size_t batch, std::size_t in, std::size_t out,
                        bool parallel);

// db[o] = sum_h dY[h][o].
void dense_grad_bias(const double* dy, double* db, std::size_t batch,
                     std::size_t out, bool parallel);

// w[i] += alpha * g[i].
void axpy(double alpha, const double* g, double* w, std::size_t n, bool parallel);

}  // namespace secbeam::kernels
