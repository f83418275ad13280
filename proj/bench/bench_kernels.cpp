// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [n_x] [n_t] [repeats]
//
// Prints one line per kernel with the best-of-repeats wall time for each variant and the
// speedup. Thread count follows OMP_NUM_THREADS.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include <fmt/core.h>

#include "drp/kernels.hpp"
#include "drp/sylvester.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& body)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        best = std::min(best, dt.count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool identical)
{
    fmt::print("{:<24} serial {:10.3f} ms   omp {:10.3f} ms   speedup {:5.2f}x   {}\n", name,
               1e3 * serial, 1e3 * parallel, serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv)
{
    const long n_x = argc > 1 ? std::atol(argv[1]) : 1 << 20;
    const long n_t = argc > 2 ? std::atol(argv[2]) : 64;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
    fmt::print("n_x={} n_t={} threads={}\n", n_x, n_t, omp_get_max_threads());

    const auto w = drp::kernels::Stencil::of(drp::tune_scheme(0.1, 0.09));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    std::vector<double> prev(n_x + 1), cur(n_x + 1), next_s(n_x + 1), next_p(n_x + 1);
    for (long i = 0; i <= n_x; ++i) prev[i] = dist(rng), cur[i] = dist(rng);
    auto stepping = [&](auto step, std::vector<double>& out) {
        return [&, step] {
            for (long n = 0; n < n_t; ++n) step(w, prev, cur, out);
        };
    };
    const double s_step = best_of(repeats, stepping(drp::kernels::serial::explicit_step, next_s));
    const double p_step = best_of(repeats, stepping(drp::kernels::omp::explicit_step, next_p));
    report("explicit_step", s_step, p_step, next_s == next_p);

    const long rows = std::min<long>(n_x, 1 << 14);
    Eigen::MatrixXd full = Eigen::MatrixXd::NullaryExpr(rows + 1, n_t + 1, [&] { return dist(rng); });
    Eigen::MatrixXd res_s, res_p;
    const double s_res = best_of(repeats, [&] { drp::kernels::serial::pointwise_residual(w, full, res_s); });
    const double p_res = best_of(repeats, [&] { drp::kernels::omp::pointwise_residual(w, full, res_p); });
    report("pointwise_residual", s_res, p_res, res_s == res_p);

    Eigen::MatrixXd band_s, band_p;
    const double s_band = best_of(repeats, [&] { drp::kernels::serial::banded_sylvester_apply(w, full, band_s); });
    const double p_band = best_of(repeats, [&] { drp::kernels::omp::banded_sylvester_apply(w, full, band_p); });
    report("banded_sylvester_apply", s_band, p_band, band_s == band_p);
    return 0;
}
