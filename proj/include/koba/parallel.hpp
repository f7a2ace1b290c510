#pragma once

#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace koba {

// Execution mode for the data-parallel kernels. Every kernel has a serial
// reference implementation that the OpenMP path must reproduce exactly;
// tests compare the two and the bench tool times them against each other.
enum class Exec { parallel, serial };

namespace kernels {

struct Extremum {
    double value = 0.0;
    std::size_t index = 0;
};

// Combine rule shared by both paths: strictly better value wins, ties go to
// the smaller index. Min/max of a fixed value set is order-independent, so
// the OpenMP reductions return bitwise-identical results to the serial loop.

namespace serial {

template <class F>
Extremum min_index_over(std::size_t n, F&& value_at) {
    Extremum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double v = value_at(i);
        if (v < best.value) best = {v, i};
    }
    return best;
}

template <class F>
Extremum max_index_over(std::size_t n, F&& value_at) {
    Extremum best{-std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double v = value_at(i);
        if (v > best.value) best = {v, i};
    }
    return best;
}

template <class F>
void apply(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace serial

// value_at / body must not throw; wrap and rethrow at the call site if the
// per-element work can fail.

template <class F>
Extremum min_index_over(std::size_t n, F&& value_at) {
#ifdef _OPENMP
    Extremum best{std::numeric_limits<double>::infinity(), 0};
#pragma omp parallel
    {
        Extremum local{std::numeric_limits<double>::infinity(), 0};
#pragma omp for nowait schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const double v = value_at(static_cast<std::size_t>(i));
            const auto idx = static_cast<std::size_t>(i);
            if (v < local.value || (v == local.value && idx < local.index)) local = {v, idx};
        }
#pragma omp critical(koba_min_reduce)
        {
            if (local.value < best.value || (local.value == best.value && local.index < best.index))
                best = local;
        }
    }
    return best;
#else
    return serial::min_index_over(n, value_at);
#endif
}

template <class F>
Extremum max_index_over(std::size_t n, F&& value_at) {
#ifdef _OPENMP
    Extremum best{-std::numeric_limits<double>::infinity(), 0};
#pragma omp parallel
    {
        Extremum local{-std::numeric_limits<double>::infinity(), 0};
#pragma omp for nowait schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const double v = value_at(static_cast<std::size_t>(i));
            const auto idx = static_cast<std::size_t>(i);
            if (v > local.value || (v == local.value && idx < local.index)) local = {v, idx};
        }
#pragma omp critical(koba_max_reduce)
        {
            if (local.value > best.value || (local.value == best.value && local.index < best.index))
                best = local;
        }
    }
    return best;
#else
    return serial::max_index_over(n, value_at);
#endif
}

template <class F>
void apply(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
#else
    serial::apply(n, body);
#endif
}

// Exec-dispatched entry points.

template <class F>
Extremum min_index_over(Exec exec, std::size_t n, F&& value_at) {
    return exec == Exec::parallel ? min_index_over(n, value_at)
                                  : serial::min_index_over(n, value_at);
}

template <class F>
Extremum max_index_over(Exec exec, std::size_t n, F&& value_at) {
    return exec == Exec::parallel ? max_index_over(n, value_at)
                                  : serial::max_index_over(n, value_at);
}

template <class F>
void apply(Exec exec, std::size_t n, F&& body) {
    if (exec == Exec::parallel)
        apply(n, body);
    else
        serial::apply(n, body);
}

}  // namespace kernels
}  // namespace koba
