#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef PARCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace parcat::kernels {

// Serial reference: indices i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> filter_indices_serial(std::size_t n, Pred&& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) out.push_back(i);
  return out;
}

// Same contract; flags are computed in parallel and gathered in index order.
template <class Pred>
std::vector<std::size_t> filter_indices(std::size_t n, Pred&& pred) {
#ifdef PARCAT_HAVE_OPENMP
  std::vector<std::uint8_t> keep(n, 0);
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < sn; ++i) keep[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(i);
  return out;
#else
  return filter_indices_serial(n, pred);
#endif
}

template <class Pred>
std::size_t count_if_serial(std::size_t n, Pred&& pred) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) ++c;
  return c;
}

template <class Pred>
std::size_t count_if(std::size_t n, Pred&& pred) {
#ifdef PARCAT_HAVE_OPENMP
  std::int64_t c = 0;
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : c)
  for (std::int64_t i = 0; i < sn; ++i)
    if (pred(static_cast<std::size_t>(i))) ++c;
  return static_cast<std::size_t>(c);
#else
  return count_if_serial(n, pred);
#endif
}

// out[i] = f(i); f must be safe to call concurrently.
template <class T, class F>
std::vector<T> map_indices_serial(std::size_t n, F&& f) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& f) {
#ifdef PARCAT_HAVE_OPENMP
  std::vector<T> out(n);
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < sn; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
#else
  return map_indices_serial<T>(n, f);
#endif
}

inline int thread_count() {
#ifdef PARCAT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace parcat::kernels
