#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "hardy/kernels.hpp"

using namespace hardy;

namespace {

// best of `reps` wall-clock runs, in milliseconds
double best_ms(int reps, const std::function<void()>& fn) {
    double best = INFINITY;
    for (int i = 0; i < reps; ++i) {
        double t0 = omp_get_wtime();
        fn();
        best = std::min(best, (omp_get_wtime() - t0) * 1e3);
    }
    return best;
}

void row(const char* name, double serial, double parallel, double diff) {
    std::printf("%-14s %12.3f %12.3f %9.2fx %12.3g\n", name, serial, parallel, serial / parallel, diff);
}

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = std::max(std::abs(a[i]), std::abs(b[i]));
        if (s > 0) m = std::max(m, std::abs(a[i] - b[i]) / s);
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP summation kernels"};
    std::size_t n = 1 << 24;
    int reps = 5;
    app.add_option("-n", n, "input length");
    app.add_option("--reps", reps, "repetitions per kernel");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(n), w(n);
    for (auto& v : x) v = u(rng);
    for (auto& v : w) v = u(rng);
    std::vector<double> a(n + 1), b(n + 1);

    std::printf("n = %zu, threads = %d, reps = %d\n", n, omp_get_max_threads(), reps);
    std::printf("%-14s %12s %12s %10s %12s\n", "kernel", "serial ms", "parallel ms", "speedup", "max rel diff");

    double s = best_ms(reps, [&] { kernels::prefix_sum_serial(x, a); });
    double p = best_ms(reps, [&] { kernels::prefix_sum(x, b); });
    row("prefix_sum", s, p, max_rel_diff(a, b));

    s = best_ms(reps, [&] { kernels::suffix_sum_serial(x, a); });
    p = best_ms(reps, [&] { kernels::suffix_sum(x, b); });
    row("suffix_sum", s, p, max_rel_diff(a, b));

    double r1 = 0, r2 = 0;
    s = best_ms(reps, [&] { r1 = kernels::sum_serial(x); });
    p = best_ms(reps, [&] { r2 = kernels::sum(x); });
    row("sum", s, p, std::abs(r1 - r2) / std::abs(r1));

    s = best_ms(reps, [&] { r1 = kernels::weighted_sum_serial(x, w); });
    p = best_ms(reps, [&] { r2 = kernels::weighted_sum(x, w); });
    row("weighted_sum", s, p, std::abs(r1 - r2) / std::abs(r1));

    std::vector<double> f1, f2;
    auto fn = [&](std::size_t i) { return std::pow(x[i], 1.7) * std::exp(-w[i]); };
    s = best_ms(reps, [&] { f1 = kernels::fill_serial(n, fn); });
    p = best_ms(reps, [&] { f2 = kernels::fill(n, fn); });
    row("fill", s, p, max_rel_diff(f1, f2));
    return 0;
}
