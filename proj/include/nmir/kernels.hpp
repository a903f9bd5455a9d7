#pragma once

#include <vector>

#include "nmir/errors.hpp"

namespace nmir::kernels {

// Dense matrix kernels behind the tensor ops. Each kernel has a serial
// reference implementation and an OpenMP variant parallelized over output
// rows. Every output element is computed by exactly one thread with the
// same inner summation order as the serial code, so the two variants are
// bit-identical; tests assert exact equality and tools/bench_kernels
// compares their throughput.
//
// All kernels ACCUMULATE into C (C += A*B); callers zero C first when they
// want a plain product.

// C (m x n) += A (m x k) * B (k x n)
void matmul_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_omp(const double* a, const double* b, double* c, int m, int k, int n);

// C (k x n) += A^T (m x k) * B (m x n)
void matmul_at_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_at_omp(const double* a, const double* b, double* c, int m, int k, int n);

// C (m x n) += A (m x k) * B^T (n x k)
void matmul_bt_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_bt_omp(const double* a, const double* b, double* c, int m, int k, int n);

// Dispatchers: pick the OpenMP variant when the product is large enough to
// amortize the fork-join. Results do not depend on the choice.
void matmul(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_at(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_bt(const double* a, const double* b, double* c, int m, int k, int n);

// One Bellman backup sweep: out[s] = reward[s] + discount * max_a sum_s' P[s,a,s'] * v[s'].
// greedy[s] gets the argmax action, ties broken by lowest action id.
void bellman_sweep_serial(const double* transition, const double* reward, double discount,
                          const double* v, int n_states, int n_actions, double* out, int* greedy);
void bellman_sweep_omp(const double* transition, const double* reward, double discount,
                       const double* v, int n_states, int n_actions, double* out, int* greedy);
void bellman_sweep(const double* transition, const double* reward, double discount,
                   const double* v, int n_states, int n_actions, double* out, int* greedy);

// Solve A x = b by Gaussian elimination with partial pivoting. A is n x n
// row-major and is consumed. Throws ConfigError on a singular system.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b, int n);

}  // namespace nmir::kernels
