#pragma once

#include <cstddef>

// Dense f64 kernels used by the tensor/autodiff layer, PCA, and the
// attribution sampler. Every kernel exists twice: kern::serial is the
// reference implementation, kern::par the OpenMP one. The parallel
// variants only split work across independent output elements (or use
// fixed-size block reductions), so both paths produce bit-identical
// results regardless of thread count. The unprefixed wrappers dispatch
// by problem size.

namespace advsdf::kern {

namespace serial {

// c[m,n] = a[m,k] * b[k,n]
void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
// c[m,n] = a[m,k] * b[n,k]^T
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
// c[k,n] = a[m,k]^T * b[m,n]
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
// y[m,n] = x[m,k] * w[n,k]^T + b[n]
void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n);

void relu(const double* x, double* y, std::size_t n);
void relu_grad(const double* x, const double* dy, double* dx, std::size_t n);
void tanh_fwd(const double* x, double* y, std::size_t n);
// dx += dy * (1 - y^2), y = tanh(x)
void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n);
void sigmoid(const double* x, double* y, std::size_t n);
void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n);

void add(const double* a, const double* b, double* c, std::size_t n);
void mul(const double* a, const double* b, double* c, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(const double* x, double alpha, double* y, std::size_t n);

// fixed-block-order reductions (deterministic regardless of threading)
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);

// row-wise softmax with max subtraction, x and y are [m,n]
void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n);

// c[d,d] = centered covariance of x[n,d] with divisor (n-1); mean[d] given
void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d);

}  // namespace serial

namespace par {

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n);

void relu(const double* x, double* y, std::size_t n);
void relu_grad(const double* x, const double* dy, double* dx, std::size_t n);
void tanh_fwd(const double* x, double* y, std::size_t n);
void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n);
void sigmoid(const double* x, double* y, std::size_t n);
void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n);

void add(const double* a, const double* b, double* c, std::size_t n);
void mul(const double* a, const double* b, double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(const double* x, double alpha, double* y, std::size_t n);

double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);

void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n);

void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d);

}  // namespace par

// dispatching wrappers

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n);

void relu(const double* x, double* y, std::size_t n);
void relu_grad(const double* x, const double* dy, double* dx, std::size_t n);
void tanh_fwd(const double* x, double* y, std::size_t n);
void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n);
void sigmoid(const double* x, double* y, std::size_t n);
void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n);

void add(const double* a, const double* b, double* c, std::size_t n);
void mul(const double* a, const double* b, double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(const double* x, double alpha, double* y, std::size_t n);

double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);

void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n);

void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d);

}  // namespace advsdf::kern
