#include "nmir/kernels.hpp"

#include <cmath>
#include <cstdlib>

#include "nmir/errors.hpp"

namespace nmir::kernels {

namespace {

// Work below this many multiply-adds is not worth a parallel region.
constexpr long kParallelThreshold = 32768;

// Row kernels shared by the serial and OpenMP variants so both compile to
// the same inner loop and produce bit-identical sums.

inline void matmul_row(const double* a, const double* b, double* c, int k, int n, int i) {
    const double* ai = a + static_cast<long>(i) * k;
    double* ci = c + static_cast<long>(i) * n;
    for (int p = 0; p < k; ++p) {
        const double aip = ai[p];
        const double* bp = b + static_cast<long>(p) * n;
        for (int j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
}

inline void matmul_at_row(const double* a, const double* b, double* c, int m, int k, int n,
                          int p) {
    double* cp = c + static_cast<long>(p) * n;
    for (int i = 0; i < m; ++i) {
        const double aip = a[static_cast<long>(i) * k + p];
        const double* bi = b + static_cast<long>(i) * n;
        for (int j = 0; j < n; ++j) cp[j] += aip * bi[j];
    }
}

inline void matmul_bt_row(const double* a, const double* b, double* c, int k, int n, int i) {
    const double* ai = a + static_cast<long>(i) * k;
    double* ci = c + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) {
        const double* bj = b + static_cast<long>(j) * k;
        double acc = 0.0;
        for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
        ci[j] += acc;
    }
}

inline void bellman_state(const double* transition, const double* reward, double discount,
                          const double* v, int n_states, int n_actions, double* out, int* greedy,
                          int s) {
    const double* row = transition + static_cast<long>(s) * n_actions * n_states;
    double best = 0.0;
    int best_a = 0;
    for (int a = 0; a < n_actions; ++a) {
        const double* pa = row + static_cast<long>(a) * n_states;
        double acc = 0.0;
        for (int sn = 0; sn < n_states; ++sn) acc += pa[sn] * v[sn];
        if (a == 0 || acc > best) {
            best = acc;
            best_a = a;
        }
    }
    out[s] = reward[s] + discount * best;
    if (greedy) greedy[s] = best_a;
}

}  // namespace

void matmul_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) matmul_row(a, b, c, k, n, i);
}

void matmul_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) matmul_row(a, b, c, k, n, i);
}

void matmul_at_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int p = 0; p < k; ++p) matmul_at_row(a, b, c, m, k, n, p);
}

void matmul_at_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int p = 0; p < k; ++p) matmul_at_row(a, b, c, m, k, n, p);
}

void matmul_bt_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) matmul_bt_row(a, b, c, k, n, i);
}

void matmul_bt_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) matmul_bt_row(a, b, c, k, n, i);
}

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
    if (static_cast<long>(m) * k * n >= kParallelThreshold)
        matmul_omp(a, b, c, m, k, n);
    else
        matmul_serial(a, b, c, m, k, n);
}

void matmul_at(const double* a, const double* b, double* c, int m, int k, int n) {
    if (static_cast<long>(m) * k * n >= kParallelThreshold)
        matmul_at_omp(a, b, c, m, k, n);
    else
        matmul_at_serial(a, b, c, m, k, n);
}

void matmul_bt(const double* a, const double* b, double* c, int m, int k, int n) {
    if (static_cast<long>(m) * k * n >= kParallelThreshold)
        matmul_bt_omp(a, b, c, m, k, n);
    else
        matmul_bt_serial(a, b, c, m, k, n);
}

void bellman_sweep_serial(const double* transition, const double* reward, double discount,
                          const double* v, int n_states, int n_actions, double* out,
                          int* greedy) {
    for (int s = 0; s < n_states; ++s)
        bellman_state(transition, reward, discount, v, n_states, n_actions, out, greedy, s);
}

void bellman_sweep_omp(const double* transition, const double* reward, double discount,
                       const double* v, int n_states, int n_actions, double* out, int* greedy) {
#pragma omp parallel for schedule(static)
    for (int s = 0; s < n_states; ++s)
        bellman_state(transition, reward, discount, v, n_states, n_actions, out, greedy, s);
}

void bellman_sweep(const double* transition, const double* reward, double discount,
                   const double* v, int n_states, int n_actions, double* out, int* greedy) {
    if (static_cast<long>(n_states) * n_actions * n_states >= kParallelThreshold)
        bellman_sweep_omp(transition, reward, discount, v, n_states, n_actions, out, greedy);
    else
        bellman_sweep_serial(transition, reward, discount, v, n_states, n_actions, out, greedy);
}

std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a[static_cast<long>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double mag = std::fabs(a[static_cast<long>(r) * n + col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 1e-300) throw ConfigError("solve_linear: singular system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<long>(pivot) * n + j], a[static_cast<long>(col) * n + j]);
            std::swap(b[pivot], b[col]);
        }
        const double inv = 1.0 / a[static_cast<long>(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[static_cast<long>(r) * n + col] * inv;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<long>(r) * n + j] -= f * a[static_cast<long>(col) * n + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int j = r + 1; j < n; ++j) acc -= a[static_cast<long>(r) * n + j] * x[j];
        x[r] = acc / a[static_cast<long>(r) * n + r];
    }
    return x;
}

}  // namespace nmir::kernels
