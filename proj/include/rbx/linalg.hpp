#ifndef RBX_LINALG_HPP
#define RBX_LINALG_HPP

#include <optional>
#include <vector>

#include "rbx/qmatrix.hpp"

namespace rbx::lin {

/* Reduced row echelon form by exact Gauss-Jordan elimination.  The pivot
   rule is fixed (leftmost nonzero column, topmost available row) so that
   every derived object, kernel bases, solutions, cohomology
   representatives, comes out bit-identical on every run. */
struct Rref {
  QMatrix mat;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/* Columns form the canonical kernel basis: one basis vector per free
   column, free columns taken in ascending order, unit entry at the free
   column. */
QMatrix kernel_basis(const QMatrix& m);

/* Particular solution of m x = b with every free variable set to zero;
   empty when the system is inconsistent. */
std::optional<QVec> solve_linear(const QMatrix& m, const QVec& b);

bool in_column_space(const QMatrix& m, const QVec& v);

/* Exact inverse of a square matrix; empty when singular. */
std::optional<QMatrix> inverse(const QMatrix& m);

struct Cohomology {
  std::size_t dim = 0;
  /* Kernel vectors of d_out reduced modulo the image of d_in, pruned to a
     basis of the quotient, leading coefficient normalised to 1. */
  std::vector<QVec> representatives;
};

/* d_out: C^k -> C^{k+1}, d_in: C^{k-1} -> C^k.  Requires d_out * d_in = 0;
   a violated complex is reported as an error, not a result. */
Cohomology cohomology(const QMatrix& d_out, const QMatrix& d_in);

/* Reduces v modulo the row space captured by rows (an rref).  Used to map
   a cocycle to its canonical representative. */
QVec reduce_mod_rows(const Rref& rows, const QVec& v);

}  // namespace rbx::lin

#endif
