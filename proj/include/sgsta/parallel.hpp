#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace sgsta {

// Serial runs are the reference path; parallel runs must reproduce them bit
// for bit, since every index writes only its own output slot.
enum class Execution { serial, parallel };

// Calls fn(i) for i in [0, n). The first exception thrown by any iteration
// is rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sgsta
