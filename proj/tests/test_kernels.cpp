#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nmir/kernels.hpp"
#include "nmir/rng.hpp"

using namespace nmir;

namespace {

std::vector<double> random_vec(int n, Rng& rng) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    return v;
}

// Naive triple-loop reference used as the independent oracle.
std::vector<double> naive_matmul(const std::vector<double>& a, const std::vector<double>& b,
                                 int m, int k, int n) {
    std::vector<double> c(static_cast<long>(m) * n, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < k; ++p) c[i * n + j] += a[i * k + p] * b[p * n + j];
    return c;
}

}  // namespace

TEST_CASE("matmul matches hand-expanded dot products") {
    // (2x3) * (3x2)
    std::vector<double> a = {1, 2, 3, 4, 5, 6};
    std::vector<double> b = {7, 8, 9, 10, 11, 12};
    std::vector<double> c(4, 0.0);
    kernels::matmul(a.data(), b.data(), c.data(), 2, 3, 2);
    CHECK(c[0] == doctest::Approx(1 * 7 + 2 * 9 + 3 * 11).epsilon(1e-15));
    CHECK(c[1] == doctest::Approx(1 * 8 + 2 * 10 + 3 * 12).epsilon(1e-15));
    CHECK(c[2] == doctest::Approx(4 * 7 + 5 * 9 + 6 * 11).epsilon(1e-15));
    CHECK(c[3] == doctest::Approx(4 * 8 + 5 * 10 + 6 * 12).epsilon(1e-15));
}

TEST_CASE("serial and OpenMP matmul variants are bit-identical") {
    Rng rng(11);
    // Sizes straddling the parallel-dispatch threshold.
    const int dims[][3] = {{3, 4, 5}, {32, 112, 256}, {64, 195, 64}, {129, 70, 33}};
    for (auto& d : dims) {
        const int m = d[0], k = d[1], n = d[2];
        auto a = random_vec(m * k, rng);
        auto b = random_vec(k * n, rng);
        std::vector<double> c0(static_cast<long>(m) * n, 0.0), c1 = c0, c2 = c0;
        kernels::matmul_serial(a.data(), b.data(), c0.data(), m, k, n);
        kernels::matmul_omp(a.data(), b.data(), c1.data(), m, k, n);
        kernels::matmul(a.data(), b.data(), c2.data(), m, k, n);
        CHECK(c0 == c1);
        CHECK(c0 == c2);

        auto oracle = naive_matmul(a, b, m, k, n);
        double worst = 0.0;
        for (std::size_t i = 0; i < oracle.size(); ++i)
            worst = std::max(worst, std::fabs(oracle[i] - c0[i]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("transposed variants match their naive oracles and are bit-stable") {
    Rng rng(12);
    const int m = 40, k = 30, n = 50;
    auto a = random_vec(m * k, rng);
    auto b_at = random_vec(m * n, rng);  // A^T (m x k) * B (m x n)
    auto b_bt = random_vec(n * k, rng);  // A (m x k) * B^T (n x k)

    std::vector<double> c0(static_cast<long>(k) * n, 0.0), c1 = c0;
    kernels::matmul_at_serial(a.data(), b_at.data(), c0.data(), m, k, n);
    kernels::matmul_at_omp(a.data(), b_at.data(), c1.data(), m, k, n);
    CHECK(c0 == c1);
    std::vector<double> at(static_cast<long>(k) * m);
    for (int i = 0; i < m; ++i)
        for (int p = 0; p < k; ++p) at[p * m + i] = a[i * k + p];
    auto oracle_at = naive_matmul(at, b_at, k, m, n);
    for (std::size_t i = 0; i < oracle_at.size(); ++i)
        CHECK(std::fabs(oracle_at[i] - c0[i]) < 1e-12);

    std::vector<double> d0(static_cast<long>(m) * n, 0.0), d1 = d0;
    kernels::matmul_bt_serial(a.data(), b_bt.data(), d0.data(), m, k, n);
    kernels::matmul_bt_omp(a.data(), b_bt.data(), d1.data(), m, k, n);
    CHECK(d0 == d1);
    std::vector<double> bt(static_cast<long>(k) * n);
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < k; ++p) bt[p * n + j] = b_bt[j * k + p];
    auto oracle_bt = naive_matmul(a, bt, m, k, n);
    for (std::size_t i = 0; i < oracle_bt.size(); ++i)
        CHECK(std::fabs(oracle_bt[i] - d0[i]) < 1e-12);
}

TEST_CASE("solve_linear recovers known solutions") {
    Rng rng(13);
    const int n = 24;
    std::vector<double> a(static_cast<long>(n) * n);
    for (double& x : a) x = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < n; ++i) a[i * n + i] += n;  // diagonally dominant
    auto x_true = random_vec(n, rng);
    std::vector<double> b(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i] += a[i * n + j] * x_true[j];
    auto x = kernels::solve_linear(a, b, n);
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-9));
}

TEST_CASE("solve_linear rejects a singular system") {
    std::vector<double> a = {1, 2, 2, 4};
    std::vector<double> b = {1, 2};
    CHECK_THROWS_AS(kernels::solve_linear(a, b, 2), ConfigError);
}

TEST_CASE("bellman sweep variants are bit-identical") {
    Rng rng(14);
    const int n_states = 80, n_actions = 5;
    std::vector<double> p(static_cast<long>(n_states) * n_actions * n_states, 0.0);
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a) {
            double total = 0.0;
            std::vector<double> row(n_states);
            for (double& x : row) {
                x = rng.uniform();
                total += x;
            }
            for (int sn = 0; sn < n_states; ++sn)
                p[(static_cast<long>(s) * n_actions + a) * n_states + sn] = row[sn] / total;
        }
    auto reward = random_vec(n_states, rng);
    auto v = random_vec(n_states, rng);
    std::vector<double> out0(n_states), out1(n_states);
    std::vector<int> g0(n_states), g1(n_states);
    kernels::bellman_sweep_serial(p.data(), reward.data(), 0.9, v.data(), n_states, n_actions,
                                  out0.data(), g0.data());
    kernels::bellman_sweep_omp(p.data(), reward.data(), 0.9, v.data(), n_states, n_actions,
                               out1.data(), g1.data());
    CHECK(out0 == out1);
    CHECK(g0 == g1);
}
