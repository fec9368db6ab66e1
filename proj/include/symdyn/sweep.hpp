// sweep.hpp — deterministic evaluation of independent grid points. The
// parallel kernel uses OpenMP when available; the serial version is the
// reference the tests and benchmark compare against. Results always land in
// grid order regardless of completion order.

#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

namespace symdyn {

template <typename F>
auto sweep_serial(std::size_t n, F&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
}

template <typename F>
auto sweep_parallel(std::size_t n, F&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    // rethrow the lowest-index failure so behavior matches the serial path
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <typename F>
auto sweep_grid(std::size_t n, F&& fn, bool parallel = true) {
    return parallel ? sweep_parallel(n, std::forward<F>(fn))
                    : sweep_serial(n, std::forward<F>(fn));
}

}  // namespace symdyn
