#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace pslab {

/// out[j] = fn(j) for j < n, one thread.
template <class T, class Fn>
std::vector<T> census_serial(std::size_t n, Fn&& fn)
{
    std::vector<T> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = fn(j);
    return out;
}

/// Same result as census_serial; items are independent and written by index,
/// so the output does not depend on the schedule.
template <class T, class Fn>
std::vector<T> census_parallel(std::size_t n, int threads, Fn&& fn)
{
    if (threads <= 1) return census_serial<T>(n, fn);
    std::vector<T> out(n);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        try {
            out[j] = fn(static_cast<std::size_t>(j));
        } catch (...) {
#pragma omp critical(pslab_census_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace pslab
