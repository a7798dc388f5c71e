#ifndef RBX_DEFORM_HPP
#define RBX_DEFORM_HPP

#include <optional>
#include <vector>

#include "rbx/rbcx.hpp"

namespace rbx::deform {

using lie::Cochain;
using lie::LieRepPair;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;

/* Formal power series T + T_1 t + ... + T_n t^n of operator candidates.
   The base must be Rota-Baxter for the deformation machinery; residuals
   are defined for any series. */
struct DeformationSeries {
  QMatrix base;
  std::vector<QMatrix> terms;

  int order() const { return static_cast<int>(terms.size()); }
  const QMatrix& coefficient(int i) const;
};

struct GaugeSeries {
  /* x_1 .. x_m, algebra vectors; the series has no constant term. */
  std::vector<QVec> terms;
};

/* Residual of the Rota-Baxter identity at t-power k for k = 1..order:
   R_k(u,v) = sum_{i+j=k} ( [T_i u, T_j v] - T_j( rho(T_i u)v - rho(T_i v)u ) ).
   The series is an order-n deformation iff all of them vanish.  Equals
   -1/2 sum_{i+j=k} [[T_i, T_j]] (a cross-checked identity). */
std::vector<Cochain> order_residuals(const LieRepPair& p, const DeformationSeries& s);
bool is_deformation(const LieRepPair& p, const DeformationSeries& s);

/* Theta = 1/2 sum_{i+j=n+1, i,j>=1} [[T_i, T_j]] for an order-n
   deformation; closed for d_T by construction (asserted).  The series
   extends to order n+1 iff the class of Theta vanishes. */
Cochain obstruction(const LieRepPair& p, const DeformationSeries& s);

/* Solves d_T X = Theta in degree 1; empty when the class is nontrivial.
   A returned term is re-verified against the order-(n+1) residual. */
std::optional<QMatrix> extend(const LieRepPair& p, const DeformationSeries& s);

/* exp(ad_X) applied coefficient-wise and truncated past t^order. */
DeformationSeries gauge_transform(const LieRepPair& p, const DeformationSeries& s,
                                  const GaugeSeries& x, int order);

struct InfinitesimalClass {
  bool cocycle = false;
  bool coboundary = false;
  /* canonical representative of [T_1] in H^1, zero when trivial */
  Cochain reduced;
};

InfinitesimalClass infinitesimal_class(const LieRepPair& p, const QMatrix& t,
                                       const QMatrix& t1);

}  // namespace rbx::deform

#endif
