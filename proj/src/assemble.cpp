#include "rbx/assemble.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rbx::lin {

int effective_thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("RBX_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

QMatrix matrix_from_columns_serial(std::size_t rows, std::size_t cols, const ColumnFn& column) {
  QMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    QVec c = column(j);
    if (c.size() != rows) throw std::invalid_argument("column evaluator size mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = c[i];
  }
  return m;
}

QMatrix matrix_from_columns(std::size_t rows, std::size_t cols, const ColumnFn& column) {
  QMatrix m(rows, cols);
  bool bad = false;
#ifdef _OPENMP
  int threads = effective_thread_count();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long j = 0; j < static_cast<long long>(cols); ++j) {
    QVec c = column(static_cast<std::size_t>(j));
    if (c.size() != rows) {
#pragma omp atomic write
      bad = true;
      continue;
    }
    for (std::size_t i = 0; i < rows; ++i) m.at(i, static_cast<std::size_t>(j)) = c[i];
  }
#else
  for (std::size_t j = 0; j < cols; ++j) {
    QVec c = column(j);
    if (c.size() != rows) {
      bad = true;
      continue;
    }
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = c[i];
  }
#endif
  if (bad) throw std::invalid_argument("column evaluator size mismatch");
  return m;
}

}  // namespace rbx::lin
