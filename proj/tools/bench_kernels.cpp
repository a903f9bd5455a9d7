// Compares the serial reference kernels against their OpenMP variants.
// The variants are bit-identical by construction; this tool reports the
// throughput difference on the shapes the training and evaluation loops
// actually use.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include <omp.h>

#include "nmir/expert.hpp"
#include "nmir/kernels.hpp"
#include "nmir/mdp.hpp"
#include "nmir/rng.hpp"

using namespace nmir;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const std::chrono::duration<double> dt = Clock::now() - start;
    return dt.count() / reps;
}

void bench_matmul(int m, int k, int n, int reps) {
    Rng rng(1);
    std::vector<double> a(static_cast<long>(m) * k), b(static_cast<long>(k) * n),
        c(static_cast<long>(m) * n, 0.0);
    for (double& x : a) x = rng.uniform(-1.0, 1.0);
    for (double& x : b) x = rng.uniform(-1.0, 1.0);
    const double ts = time_of([&] { kernels::matmul_serial(a.data(), b.data(), c.data(), m, k, n); }, reps);
    const double tp = time_of([&] { kernels::matmul_omp(a.data(), b.data(), c.data(), m, k, n); }, reps);
    const double gflops = 2.0 * m * k * n * 1e-9;
    std::printf("matmul %4dx%4dx%4d  serial %8.3f ms (%5.2f GF/s)  omp %8.3f ms (%5.2f GF/s)  speedup %.2fx\n",
                m, k, n, ts * 1e3, gflops / ts, tp * 1e3, gflops / tp, ts / tp);
}

void bench_bellman(int n_states, int n_actions, int reps) {
    Rng rng(2);
    std::vector<double> p(static_cast<long>(n_states) * n_actions * n_states);
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a) {
            double total = 0.0;
            double* row = p.data() + (static_cast<long>(s) * n_actions + a) * n_states;
            for (int sn = 0; sn < n_states; ++sn) total += row[sn] = rng.uniform();
            for (int sn = 0; sn < n_states; ++sn) row[sn] /= total;
        }
    std::vector<double> reward(n_states), v(n_states, 0.0), out(n_states);
    std::vector<int> greedy(n_states);
    for (double& x : reward) x = rng.uniform();
    const double ts = time_of(
        [&] {
            kernels::bellman_sweep_serial(p.data(), reward.data(), 0.95, v.data(), n_states,
                                          n_actions, out.data(), greedy.data());
        },
        reps);
    const double tp = time_of(
        [&] {
            kernels::bellman_sweep_omp(p.data(), reward.data(), 0.95, v.data(), n_states,
                                       n_actions, out.data(), greedy.data());
        },
        reps);
    std::printf("bellman sweep %4d states %2d actions  serial %8.3f ms  omp %8.3f ms  speedup %.2fx\n",
                n_states, n_actions, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_collect(int episodes, int reps) {
    EnvSpec spec;
    spec.kind = EnvKind::t_maze;
    spec.corridor_length = 5;
    ScanConfig cfg;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double ts = time_of([&] { collect_dataset(spec, episodes, cfg, 7); }, reps);
    omp_set_num_threads(saved);
    const double tp = time_of([&] { collect_dataset(spec, episodes, cfg, 7); }, reps);
    std::printf("collect %5d t-maze episodes          serial %8.3f ms  omp %8.3f ms  speedup %.2fx\n",
                episodes, ts * 1e3, tp * 1e3, ts / tp);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    bench_matmul(32, 112, 256, 200);  // generator LSTM gate product
    bench_matmul(64, 195, 64, 200);   // policy hidden layer
    bench_matmul(256, 256, 256, 50);
    std::printf("\n");
    bench_bellman(256, 4, 200);
    bench_bellman(1024, 8, 20);
    std::printf("\n");
    bench_collect(2000, 5);
    return 0;
}
