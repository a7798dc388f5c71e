#ifndef RBX_RBCX_HPP
#define RBX_RBCX_HPP

#include <vector>

#include "rbx/liealg.hpp"

namespace rbx::rbcx {

using lie::Cochain;
using lie::LieAlgebra;
using lie::LieRepPair;
using lie::Representation;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;

/* Operator candidates map the module E into the algebra A and are stored
   as dim(A) x dim(E) matrices.  Cochains of the governing complex C^k(E,A)
   take k module arguments and produce algebra values. */

void check_operator_shape(const LieRepPair& p, const QMatrix& t);

Cochain operator_cochain(const LieRepPair& p, const QMatrix& t);
QMatrix cochain_operator(const Cochain& c);

/* Graded Lie bracket on C^*(E,A).  Degree-0 cochains are algebra vectors;
   on a pair of them the bracket reduces to the algebra bracket. */
Cochain graded_bracket(const LieRepPair& p, const Cochain& P, const Cochain& Q);

/* defect(u,v) = T rho(Tu)v - T rho(Tv)u - [Tu,Tv]; zero exactly when T is
   a relative Rota-Baxter operator.  Equals (1/2) [[T,T]]. */
Cochain rb_defect(const LieRepPair& p, const QMatrix& t);
bool is_relative_rb(const LieRepPair& p, const QMatrix& t);

/* Descendent structures of a relative Rota-Baxter operator: the induced
   bracket on E and the induced representation of it on A.  Both are
   well-defined Lie data whenever the defect vanishes. */
LieAlgebra induced_lie(const LieRepPair& p, const QMatrix& t);
Representation induced_rep(const LieRepPair& p, const QMatrix& t);
LieRepPair induced_pair(const LieRepPair& p, const QMatrix& t);

/* Coboundary operator twisted by T, explicit form:
   (d_T P)(u_1..u_{k+1}) = sum_i (-1)^{i+1} [T u_i, P(..^i..)]
                         + sum_i (-1)^{i+1} T rho(P(..^i..)) u_i
                         + sum_{i<j} (-1)^{i+j} P(rho(T u_i)u_j - rho(T u_j)u_i, ..^i..^j..).
   Coincides with (-1)^k [[T,P]] and, for Rota-Baxter T, with the
   Chevalley-Eilenberg differential of the induced pair. */
Cochain dT_apply(const LieRepPair& p, const QMatrix& t, const Cochain& P);
QMatrix dT_matrix(const LieRepPair& p, const QMatrix& t, int k);
QMatrix dT_matrix_serial(const LieRepPair& p, const QMatrix& t, int k);

struct CohomologySummary {
  std::size_t dim = 0;
  std::vector<Cochain> representatives;
};

/* Requires a relative Rota-Baxter operator; a defective one is rejected
   as a precondition error since the tower is not a complex. */
CohomologySummary rb_cohomology(const LieRepPair& p, const QMatrix& t, int k);

}  // namespace rbx::rbcx

#endif
