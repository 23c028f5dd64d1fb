#include "hardy/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace hardy::kernels {

namespace {

std::size_t block_count(std::size_t n) { return (n + block_size - 1) / block_size; }

double product(double a, double b) { return (a == 0.0 || b == 0.0) ? 0.0 : a * b; }

}  // namespace

void prefix_sum_serial(std::span<const double> in, std::span<double> out) {
    assert(out.size() == in.size() + 1);
    double acc = 0.0;
    out[0] = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        acc += in[i];
        out[i + 1] = acc;
    }
}

void prefix_sum(std::span<const double> in, std::span<double> out) {
    assert(out.size() == in.size() + 1);
    const std::size_t n = in.size();
    const std::size_t nb = block_count(n);
    if (nb <= 1) {
        prefix_sum_serial(in, out);
        return;
    }
    std::vector<double> block_total(nb);
    const long long mb = static_cast<long long>(nb);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < mb; ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * block_size;
        std::size_t hi = std::min(n, lo + block_size);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            acc += in[i];
            out[i + 1] = acc;
        }
        block_total[static_cast<std::size_t>(b)] = acc;
    }
    std::vector<double> offset(nb, 0.0);
    for (std::size_t b = 1; b < nb; ++b) offset[b] = offset[b - 1] + block_total[b - 1];
    out[0] = 0.0;
#pragma omp parallel for schedule(static)
    for (long long b = 1; b < mb; ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * block_size;
        std::size_t hi = std::min(n, lo + block_size);
        double off = offset[static_cast<std::size_t>(b)];
        for (std::size_t i = lo; i < hi; ++i) out[i + 1] += off;
    }
}

void suffix_sum_serial(std::span<const double> in, std::span<double> out) {
    assert(out.size() == in.size() + 1);
    const std::size_t n = in.size();
    double acc = 0.0;
    out[n] = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        acc += in[i];
        out[i] = acc;
    }
}

void suffix_sum(std::span<const double> in, std::span<double> out) {
    assert(out.size() == in.size() + 1);
    const std::size_t n = in.size();
    const std::size_t nb = block_count(n);
    if (nb <= 1) {
        suffix_sum_serial(in, out);
        return;
    }
    // blocks are anchored at the right end so the last block matches the serial sweep
    auto block_lo = [&](std::size_t b) { return n > (b + 1) * block_size ? n - (b + 1) * block_size : 0; };
    auto block_hi = [&](std::size_t b) { return n - b * block_size; };
    std::vector<double> block_total(nb);
    const long long mb = static_cast<long long>(nb);
#pragma omp parallel for schedule(static)
    for (long long bb = 0; bb < mb; ++bb) {
        std::size_t b = static_cast<std::size_t>(bb);
        double acc = 0.0;
        for (std::size_t i = block_hi(b); i-- > block_lo(b);) {
            acc += in[i];
            out[i] = acc;
        }
        block_total[b] = acc;
    }
    std::vector<double> offset(nb, 0.0);
    for (std::size_t b = 1; b < nb; ++b) offset[b] = offset[b - 1] + block_total[b - 1];
    out[n] = 0.0;
#pragma omp parallel for schedule(static)
    for (long long bb = 1; bb < mb; ++bb) {
        std::size_t b = static_cast<std::size_t>(bb);
        for (std::size_t i = block_lo(b); i < block_hi(b); ++i) out[i] += offset[b];
    }
}

double sum_serial(std::span<const double> in) {
    double acc = 0.0;
    for (double x : in) acc += x;
    return acc;
}

double sum(std::span<const double> in) {
    const std::size_t n = in.size();
    const std::size_t nb = block_count(n);
    if (nb <= 1) return sum_serial(in);
    std::vector<double> partial(nb);
    const long long mb = static_cast<long long>(nb);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < mb; ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * block_size;
        partial[static_cast<std::size_t>(b)] = sum_serial(in.subspan(lo, std::min(block_size, n - lo)));
    }
    return sum_serial(partial);
}

double weighted_sum_serial(std::span<const double> v, std::span<const double> w) {
    assert(v.size() == w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += product(v[i], w[i]);
    return acc;
}

double weighted_sum(std::span<const double> v, std::span<const double> w) {
    assert(v.size() == w.size());
    const std::size_t n = v.size();
    const std::size_t nb = block_count(n);
    if (nb <= 1) return weighted_sum_serial(v, w);
    std::vector<double> partial(nb);
    const long long mb = static_cast<long long>(nb);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < mb; ++b) {
        std::size_t lo = static_cast<std::size_t>(b) * block_size;
        std::size_t len = std::min(block_size, n - lo);
        partial[static_cast<std::size_t>(b)] = weighted_sum_serial(v.subspan(lo, len), w.subspan(lo, len));
    }
    return sum_serial(partial);
}

}  // namespace hardy::kernels
