#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tate/scalar.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tate::kernels {

// Doubled exponent (exponent 1/2 is stored as 1).
using Exp = std::int64_t;
using Term = std::pair<Exp, Scalar>;

// Runtime switch for the OpenMP paths. Serial twins of every kernel stay
// available for differential testing and benchmarking; results must be
// identical either way. TATE_SERIAL=1 in the environment forces serial.
bool parallelEnabled();
void setParallel(bool on);

// Inputs below the grain thresholds take the serial path even when the
// parallel mode is on.
inline constexpr std::size_t kConvolveGrain = 4096;
inline constexpr std::size_t kFillGrain = 64;

// out[e] = sum_{a+b=e} f[a] * g[b] for e in [lo, hi]. Inputs sorted by
// exponent, outputs sorted with zero coefficients dropped.
std::vector<Term> convolveSerial(const std::vector<Term>& f, const std::vector<Term>& g,
                                 const Ring& ring, Exp lo, Exp hi);
std::vector<Term> convolveParallel(const std::vector<Term>& f, const std::vector<Term>& g,
                                   const Ring& ring, Exp lo, Exp hi);
std::vector<Term> convolve(const std::vector<Term>& f, const std::vector<Term>& g,
                           const Ring& ring, Exp lo, Exp hi);

// Row-major fill of an n x m grid from a pure generator.
template <class T, class Fn>
std::vector<std::vector<T>> fillGridSerial(int rows, int cols, Fn&& fn) {
  std::vector<std::vector<T>> out;
  out.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    std::vector<T> row;
    row.reserve(cols);
    for (int j = 0; j < cols; ++j) row.push_back(fn(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T, class Fn>
std::vector<std::vector<T>> fillGridParallel(int rows, int cols, Fn&& fn) {
  const long total = long(rows) * long(cols);
  std::vector<std::optional<T>> flat(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < total; ++idx) flat[idx].emplace(fn(int(idx / cols), int(idx % cols)));
  std::vector<std::vector<T>> out;
  out.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    std::vector<T> row;
    row.reserve(cols);
    for (int j = 0; j < cols; ++j) row.push_back(std::move(*flat[long(i) * cols + j]));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T, class Fn>
std::vector<std::vector<T>> fillGrid(int rows, int cols, Fn&& fn) {
  const std::size_t total = std::size_t(rows) * std::size_t(cols);
  if (!parallelEnabled() || total < kFillGrain)
    return fillGridSerial<T>(rows, cols, std::forward<Fn>(fn));
  return fillGridParallel<T>(rows, cols, std::forward<Fn>(fn));
}

// Apply a pure function over [0, n) collecting results in index order.
template <class T, class Fn>
std::vector<T> mapIndexedSerial(int n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

template <class T, class Fn>
std::vector<T> mapIndexed(int n, Fn&& fn) {
  if (!parallelEnabled() || n < int(kFillGrain))
    return mapIndexedSerial<T>(n, std::forward<Fn>(fn));
  std::vector<std::optional<T>> flat(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) flat[i].emplace(fn(i));
  std::vector<T> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::move(*flat[i]));
  return out;
}

}  // namespace tate::kernels
