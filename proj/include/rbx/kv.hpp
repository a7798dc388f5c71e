#ifndef RBX_KV_HPP
#define RBX_KV_HPP

#include <optional>
#include <vector>

#include "rbx/deform.hpp"
#include "rbx/prelie.hpp"

namespace rbx::kv {

using lie::Cochain;
using lie::LieRepPair;
using lie::Representation;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;
using prelie::PreLieAlgebra;

/* Symmetric tensors H on the dual of a pre-Lie algebra A and symmetric
   forms B on A itself are both carried as plain symmetric matrices.  The
   sharp map of a tensor sends the i-th dual basis vector to column i, so
   the matrix of H# is the matrix of H. */
void check_symmetric(const QMatrix& h);

/* Element of Lambda^{k-1} V (x) V with scalar coefficients, degree k >= 1,
   stored on increasing (k-1)-tuples with a free last index.  Interpreted
   over the dual space these are the cochains of the tensor complex; over
   the algebra itself they are the scalar cochains of the left-symmetric
   algebra complex. */
class KVCochain {
 public:
  KVCochain() = default;
  KVCochain(int degree, int dim);

  static KVCochain basis_element(int degree, int dim, std::size_t tuple_index,
                                 int last);

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  std::size_t tuple_count() const { return values_.size(); }
  std::size_t flat_dim() const { return values_.size() * dim_; }

  /* Row of coefficients over the free last index for one increasing
     front tuple. */
  QVec& value_at(std::size_t tuple_index);
  const QVec& value_at(std::size_t tuple_index) const;

  /* Coefficient on an arbitrary front tuple; antisymmetry supplies the
     sign and repeated front indices give zero. */
  Rat eval(std::vector<int> front, int last) const;

  /* Multilinear extensions with a vector in the first front slot or in
     the last slot. */
  Rat eval_front(const QVec& head, const std::vector<int>& rest, int last) const;
  Rat eval_last(const std::vector<int>& front, const QVec& tail) const;

  QVec flatten() const;
  static KVCochain unflatten(int degree, int dim, const QVec& flat);

  KVCochain operator+(const KVCochain& other) const;
  KVCochain operator-(const KVCochain& other) const;
  KVCochain scaled(const Rat& s) const;
  bool operator==(const KVCochain& other) const;
  bool is_zero() const;

 private:
  int degree_ = 0;
  int dim_ = 0;
  std::vector<QVec> values_;
};

/* A square matrix viewed as a degree-2 cochain (row i holds the
   coefficients over the last index) and back. */
KVCochain tensor_cochain(const QMatrix& h);
QMatrix cochain_tensor(const KVCochain& f);

/* Dual actions of an algebra vector x on the dual space, all anchor terms
   dropped over a point:
     left   <L_x xi, y>  = -<xi, x*y>
     right  <R_x xi, y>  = -<xi, y*x>
     lie    <D_x xi, y>  = -<xi, [x,y]>   for the sub-adjacent bracket. */
QMatrix dual_left_action(const PreLieAlgebra& a, const QVec& x);
QMatrix dual_right_action(const PreLieAlgebra& a, const QVec& x);
QMatrix dual_lie_action(const PreLieAlgebra& a, const QVec& x);

/* The left duals assemble into a representation of the sub-adjacent Lie
   algebra on the dual space; the right duals do not and are only used by
   the restricted subcomplex. */
Representation left_dual_rep(const PreLieAlgebra& a);
LieRepPair dual_pair(const PreLieAlgebra& a);

/* [H,H](a1,a2,a3) = <a1, H#a2 * H#a3> - <a2, H#a1 * H#a3>
                     - <a3, [H#a1, H#a2]>, skew in (a1,a2); the anchor
   terms of the general bracket vanish over a point and are dropped.  H is
   Koszul-Vinberg exactly when this vanishes. */
KVCochain hh_bracket(const PreLieAlgebra& a, const QMatrix& h);
bool is_kv(const PreLieAlgebra& a, const QMatrix& h);

/* [alpha,beta]_H = L_{H#alpha}beta - L_{H#beta}alpha, defined for any
   symmetric H; equals the commutator of the induced dual product. */
QVec dual_bracket(const PreLieAlgebra& a, const QMatrix& h, const QVec& alpha,
                  const QVec& beta);

/* Induced products on the dual of a Koszul-Vinberg tensor:
     alpha * beta = D_{H#alpha}beta - R_{H#beta}alpha   (lie/right duals)
     alpha . beta = L_{H#alpha}beta                     (left dual)
   Both are left-symmetric and share the sub-adjacent bracket; the sharp
   map intertwines the first with the product of A. */
PreLieAlgebra induced_dual_prelie(const PreLieAlgebra& a, const QMatrix& h);
PreLieAlgebra induced_dual_prelie_left(const PreLieAlgebra& a, const QMatrix& h);

/* Degree reshuffles between the tensor complex and the operator complex
   on (sub-adjacent algebra; left dual rep): <psi(f)(a_1..a_k), a_{k+1}>
   = <f, a_1 ^ .. ^ a_k (x) a_{k+1}>.  Mutually inverse; psi(H) = H#. */
Cochain psi_map(const KVCochain& f);
KVCochain upsilon_map(const Cochain& c);

/* Graded Lie bracket transported through psi: deg k x deg l -> deg k+l-1.
   Koszul-Vinberg tensors are its Maurer-Cartan elements and
   [[H,H]]_KV = 2 [H,H]. */
KVCochain kv_bracket(const PreLieAlgebra& a, const KVCochain& f,
                     const KVCochain& g);

/* Coboundary twisted by a symmetric tensor,
   delta f = (-1)^{k-1} [[H, f]]_KV for f of degree k; when H is
   Koszul-Vinberg this is the differential of the tensor complex and the
   psi-conjugate of the operator differential of H#. */
KVCochain delta_dual_apply(const PreLieAlgebra& a, const QMatrix& h,
                           const KVCochain& f);
QMatrix delta_dual_matrix(const PreLieAlgebra& a, const QMatrix& h, int k);
QMatrix delta_dual_matrix_serial(const PreLieAlgebra& a, const QMatrix& h, int k);

/* Scalar coboundary of the left-symmetric algebra complex over a point,
   explicit form on degree-n cochains:
   (delta f)(x_1..x_{n+1}) = - sum_i (-1)^{i+1} f(x_1..^i..x_n, x_i * x_{n+1})
                             + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..^i..^j.., x_{n+1});
   the anchor term of the general display vanishes over a point and is
   dropped.  Applied to the dual algebra of a Koszul-Vinberg tensor it
   reproduces delta_dual_matrix. */
KVCochain lsca_delta_apply(const PreLieAlgebra& a, const KVCochain& f);
QMatrix lsca_delta_matrix(const PreLieAlgebra& a, int n);

/* Pseudo-Hessian test for a symmetric form: nondegenerate and closed for
   the scalar coboundary.  For nondegenerate H the inverse correspondence
   holds: H is Koszul-Vinberg iff H^{-1} is pseudo-Hessian; the check
   computes both predicates independently and reports their equality. */
bool pseudo_hessian_check(const PreLieAlgebra& a, const QMatrix& b);
bool inverse_correspondence_check(const PreLieAlgebra& a, const QMatrix& h);

/* Columns form a basis of the restricted subspace of degree-k cochains:
   degree 1 the vectors x with H(R_x a1, a2) = H(a1, R_x a2), degree 2 the
   symmetric tensors, degree 3 the cyclic-sum-free cochains, and the full
   space from degree 4 on. */
QMatrix restricted_basis(const PreLieAlgebra& a, const QMatrix& h, int k);

struct KVCohomologySummary {
  std::size_t dim = 0;
  std::vector<KVCochain> representatives;
};

/* Cohomology of the tensor complex of a Koszul-Vinberg tensor; the
   restricted flag computes it on the restricted subcomplex (the
   coboundary is checked to preserve it, and a violation is a hard
   internal error).  Representatives are reported in ambient
   coordinates. */
KVCohomologySummary kv_cohomology(const PreLieAlgebra& a, const QMatrix& h,
                                  int k, bool restricted = false);

/* Formal series H + H_1 t + .. + H_n t^n of symmetric tensors.  The
   series deforms H exactly when the sharp series deforms H# as an
   operator on (sub-adjacent algebra; left dual rep), which is how the
   residuals are computed. */
struct KVDeformationSeries {
  QMatrix base;
  std::vector<QMatrix> terms;

  int order() const { return static_cast<int>(terms.size()); }
  const QMatrix& coefficient(int i) const;
};

deform::DeformationSeries sharp_series(const KVDeformationSeries& s);
bool is_kv_deformation(const PreLieAlgebra& a, const KVDeformationSeries& s);

/* Theta = 1/2 sum_{i+j=n+1, i,j>=1} [[H_i, H_j]]_KV for an order-n
   deformation; lies in the restricted degree-3 space and is closed (both
   asserted).  The series extends to order n+1 iff Theta is a coboundary
   of a symmetric tensor; kv_extend solves on the symmetric subspace
   directly, so failure means non-extendable within symmetric tensors. */
KVCochain kv_obstruction(const PreLieAlgebra& a, const KVDeformationSeries& s);
std::optional<QMatrix> kv_extend(const PreLieAlgebra& a,
                                 const KVDeformationSeries& s);

/* exp(ad_X) in the transported bracket, computed on the sharp series and
   pulled back; rejects gauges whose output leaves the symmetric
   tensors. */
KVDeformationSeries kv_gauge_transform(const PreLieAlgebra& a,
                                       const KVDeformationSeries& s,
                                       const deform::GaugeSeries& x, int order);

struct KVInfinitesimalClass {
  bool cocycle = false;
  bool coboundary = false;
  /* representative of the class in restricted degree-2 cohomology, zero
     when trivial */
  KVCochain reduced;
};

/* Classifies an infinitesimal deformation term up to gauge: cocycle for
   the twisted coboundary, coboundary within the restricted subcomplex. */
KVInfinitesimalClass kv_infinitesimal_class(const PreLieAlgebra& a,
                                            const QMatrix& h, const QMatrix& h1);

}  // namespace rbx::kv

#endif
