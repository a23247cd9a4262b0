#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "amoeba/tropical.hpp"

namespace amoeba::detail {

// Runs body(i) for i in [0, n). On the parallel path one of the thrown
// exceptions is rethrown after the loop finishes.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body &&body) {
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex lock;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> guard(lock);
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace amoeba::detail
