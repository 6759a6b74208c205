#pragma once

// Index-parallel map used by every batch verification and scan. The serial
// path is the reference implementation; the OpenMP path must produce the
// same vector element for element.

#include <omp.h>

#include <cstdint>
#include <exception>
#include <type_traits>
#include <vector>

namespace egcf {

enum class Exec { serial, parallel };

template <class Fn>
auto map_indices(std::int64_t first, std::int64_t last, Fn&& fn, Exec exec = Exec::parallel)
    -> std::vector<std::invoke_result_t<Fn&, std::int64_t>> {
  using R = std::invoke_result_t<Fn&, std::int64_t>;
  std::vector<R> out(last > first ? static_cast<std::size_t>(last - first) : 0);
  if (out.empty()) return out;

  if (exec == Exec::serial) {
    for (std::int64_t i = first; i < last; ++i) out[static_cast<std::size_t>(i - first)] = fn(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = first; i < last; ++i) {
    auto slot = static_cast<std::size_t>(i - first);
    try {
      out[slot] = fn(i);
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline int worker_count() { return omp_get_max_threads(); }

}  // namespace egcf
