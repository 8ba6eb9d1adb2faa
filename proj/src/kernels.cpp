#include "advsdf/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace advsdf::kern {

namespace serial {

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
      c[i * n + j] = acc;
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[j * k + p];
      c[i * n + j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < m; ++p) acc += a[p * k + i] * b[p * n + j];
      c[i * n + j] = acc;
    }
  }
}

void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = b[j];
      for (std::size_t p = 0; p < k; ++p) acc += x[i * k + p] * w[j * k + p];
      y[i * n + j] = acc;
    }
  }
}

void relu(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad(const double* x, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] += x[i] > 0.0 ? dy[i] : 0.0;
}

void tanh_fwd(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] += dy[i] * (1.0 - y[i] * y[i]);
}

void sigmoid(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = 1.0 / (1.0 + std::exp(-x[i]));
}

void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] += dy[i] * y[i] * (1.0 - y[i]);
}

void add(const double* a, const double* b, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
}

void mul(const double* a, const double* b, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(const double* x, double alpha, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

namespace {
constexpr std::size_t kBlock = 1024;  // reduction block, fixed so the
                                      // summation tree never depends on
                                      // thread count
}

double sum(const double* x, std::size_t n) {
  double total = 0.0;
  for (std::size_t b = 0; b < n; b += kBlock) {
    std::size_t hi = b + kBlock < n ? b + kBlock : n;
    double part = 0.0;
    for (std::size_t i = b; i < hi; ++i) part += x[i];
    total += part;
  }
  return total;
}

double sumsq(const double* x, std::size_t n) {
  double total = 0.0;
  for (std::size_t b = 0; b < n; b += kBlock) {
    std::size_t hi = b + kBlock < n ? b + kBlock : n;
    double part = 0.0;
    for (std::size_t i = b; i < hi; ++i) part += x[i] * x[i];
    total += part;
  }
  return total;
}

void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* xi = x + i * n;
    double* yi = y + i * n;
    double mx = xi[0];
    for (std::size_t j = 1; j < n; ++j)
      if (xi[j] > mx) mx = xi[j];
    double z = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      yi[j] = std::exp(xi[j] - mx);
      z += yi[j];
    }
    for (std::size_t j = 0; j < n; ++j) yi[j] /= z;
  }
}

void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        acc += (x[r * d + i] - mean[i]) * (x[r * d + j] - mean[j]);
      double v = acc / static_cast<double>(n - 1);
      c[i * d + j] = v;
      c[j * d + i] = v;
    }
  }
}

}  // namespace serial

namespace par {

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
      c[i * n + j] = acc;
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[j * k + p];
      c[i * n + j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(k); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < m; ++p) acc += a[p * k + i] * b[p * n + j];
      c[i * n + j] = acc;
    }
  }
}

void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = b[j];
      for (std::size_t p = 0; p < k; ++p) acc += x[i * k + p] * w[j * k + p];
      y[i * n + j] = acc;
    }
  }
}

void relu(const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad(const double* x, const double* dy, double* dx, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    dx[i] += x[i] > 0.0 ? dy[i] : 0.0;
}

void tanh_fwd(const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] = std::tanh(x[i]);
}

void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    dx[i] += dy[i] * (1.0 - y[i] * y[i]);
}

void sigmoid(const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] = 1.0 / (1.0 + std::exp(-x[i]));
}

void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    dx[i] += dy[i] * y[i] * (1.0 - y[i]);
}

void add(const double* a, const double* b, double* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    c[i] = a[i] + b[i];
}

void mul(const double* a, const double* b, double* c, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    c[i] = a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] += alpha * x[i];
}

void scale(const double* x, double alpha, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] = alpha * x[i];
}

namespace {
constexpr std::size_t kBlock = 1024;  // must match serial::kBlock
}

double sum(const double* x, std::size_t n) {
  std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> parts(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
    std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double part = 0.0;
    for (std::size_t i = lo; i < hi; ++i) part += x[i];
    parts[b] = part;
  }
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

double sumsq(const double* x, std::size_t n) {
  std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> parts(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
    std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double part = 0.0;
    for (std::size_t i = lo; i < hi; ++i) part += x[i] * x[i];
    parts[b] = part;
  }
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const double* xi = x + i * n;
    double* yi = y + i * n;
    double mx = xi[0];
    for (std::size_t j = 1; j < n; ++j)
      if (xi[j] > mx) mx = xi[j];
    double z = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      yi[j] = std::exp(xi[j] - mx);
      z += yi[j];
    }
    for (std::size_t j = 0; j < n; ++j) yi[j] /= z;
  }
}

void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(d); ++i) {
    for (std::size_t j = static_cast<std::size_t>(i); j < d; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        acc += (x[r * d + i] - mean[i]) * (x[r * d + j] - mean[j]);
      double v = acc / static_cast<double>(n - 1);
      c[i * d + j] = v;
      c[j * d + i] = v;
    }
  }
}

}  // namespace par

// Size cutoff below which threading overhead dominates. The two paths are
// bit-identical, so the cutoff affects speed only.
namespace {
constexpr std::size_t kParThreshold = 16 * 1024;

inline bool use_par(std::size_t work) {
#ifdef _OPENMP
  return work >= kParThreshold && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}
}  // namespace

void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  if (use_par(m * k * n)) par::matmul_nn(a, b, c, m, k, n);
  else serial::matmul_nn(a, b, c, m, k, n);
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  if (use_par(m * k * n)) par::matmul_nt(a, b, c, m, k, n);
  else serial::matmul_nt(a, b, c, m, k, n);
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  if (use_par(m * k * n)) par::matmul_tn(a, b, c, m, k, n);
  else serial::matmul_tn(a, b, c, m, k, n);
}

void affine(const double* x, const double* w, const double* b, double* y,
            std::size_t m, std::size_t k, std::size_t n) {
  if (use_par(m * k * n)) par::affine(x, w, b, y, m, k, n);
  else serial::affine(x, w, b, y, m, k, n);
}

void relu(const double* x, double* y, std::size_t n) {
  if (use_par(n)) par::relu(x, y, n);
  else serial::relu(x, y, n);
}

void relu_grad(const double* x, const double* dy, double* dx, std::size_t n) {
  if (use_par(n)) par::relu_grad(x, dy, dx, n);
  else serial::relu_grad(x, dy, dx, n);
}

void tanh_fwd(const double* x, double* y, std::size_t n) {
  if (use_par(n)) par::tanh_fwd(x, y, n);
  else serial::tanh_fwd(x, y, n);
}

void tanh_grad(const double* y, const double* dy, double* dx, std::size_t n) {
  if (use_par(n)) par::tanh_grad(y, dy, dx, n);
  else serial::tanh_grad(y, dy, dx, n);
}

void sigmoid(const double* x, double* y, std::size_t n) {
  if (use_par(n)) par::sigmoid(x, y, n);
  else serial::sigmoid(x, y, n);
}

void sigmoid_grad(const double* y, const double* dy, double* dx, std::size_t n) {
  if (use_par(n)) par::sigmoid_grad(y, dy, dx, n);
  else serial::sigmoid_grad(y, dy, dx, n);
}

void add(const double* a, const double* b, double* c, std::size_t n) {
  if (use_par(n)) par::add(a, b, c, n);
  else serial::add(a, b, c, n);
}

void mul(const double* a, const double* b, double* c, std::size_t n) {
  if (use_par(n)) par::mul(a, b, c, n);
  else serial::mul(a, b, c, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  if (use_par(n)) par::axpy(alpha, x, y, n);
  else serial::axpy(alpha, x, y, n);
}

void scale(const double* x, double alpha, double* y, std::size_t n) {
  if (use_par(n)) par::scale(x, alpha, y, n);
  else serial::scale(x, alpha, y, n);
}

double sum(const double* x, std::size_t n) {
  return use_par(n) ? par::sum(x, n) : serial::sum(x, n);
}

double sumsq(const double* x, std::size_t n) {
  return use_par(n) ? par::sumsq(x, n) : serial::sumsq(x, n);
}

void softmax_rows(const double* x, double* y, std::size_t m, std::size_t n) {
  if (use_par(m * n)) par::softmax_rows(x, y, m, n);
  else serial::softmax_rows(x, y, m, n);
}

void covariance(const double* x, const double* mean, double* c,
                std::size_t n, std::size_t d) {
  if (use_par(n * d * d)) par::covariance(x, mean, c, n, d);
  else serial::covariance(x, mean, c, n, d);
}

}  // namespace advsdf::kern
