#ifndef RBX_ASSEMBLE_HPP
#define RBX_ASSEMBLE_HPP

#include <functional>

#include "rbx/qmatrix.hpp"

namespace rbx::lin {

using ColumnFn = std::function<QVec(std::size_t)>;

/* Differential matrices are built column by column, one column per basis
   cochain, from immutable inputs.  The parallel builder farms columns out
   over OpenMP threads; results are exact rationals, so it agrees with the
   serial reference bit for bit.  RBX_THREADS caps the thread count. */
QMatrix matrix_from_columns(std::size_t rows, std::size_t cols, const ColumnFn& column);

QMatrix matrix_from_columns_serial(std::size_t rows, std::size_t cols, const ColumnFn& column);

int effective_thread_count();

}  // namespace rbx::lin

#endif
