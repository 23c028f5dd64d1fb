#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

// Summation kernels. The *_serial versions are the plain left-to-right
// references; the blocked versions split the input into fixed-size blocks so
// the result is the same for any OpenMP thread count.
namespace hardy::kernels {

inline constexpr std::size_t block_size = 2048;

// out.size() == in.size() + 1, out[0] = 0, out[i+1] = out[i] + in[i]
void prefix_sum_serial(std::span<const double> in, std::span<double> out);
void prefix_sum(std::span<const double> in, std::span<double> out);

// out.size() == in.size() + 1, out[n] = 0, out[i] = in[i] + out[i+1]
void suffix_sum_serial(std::span<const double> in, std::span<double> out);
void suffix_sum(std::span<const double> in, std::span<double> out);

double sum_serial(std::span<const double> in);
double sum(std::span<const double> in);

// sum of v[i]*w[i]; a pair with an exactly zero factor contributes nothing
double weighted_sum_serial(std::span<const double> v, std::span<const double> w);
double weighted_sum(std::span<const double> v, std::span<const double> w);

// out[i] = fn(i); fn must be safe to call concurrently. The first exception
// thrown by fn is rethrown once the loop is done.
template <class Fn>
std::vector<double> fill(std::size_t n, Fn&& fn) {
    std::vector<double> out(n);
    const long long m = static_cast<long long>(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (m > static_cast<long long>(block_size))
    for (long long i = 0; i < m; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(hardy_fill_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

template <class Fn>
std::vector<double> fill_serial(std::size_t n, Fn&& fn) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

}  // namespace hardy::kernels
