#ifndef RBX_ACTION_HPP
#define RBX_ACTION_HPP

#include <vector>

#include "rbx/liealg.hpp"
#include "rbx/poly.hpp"
#include "rbx/qmatrix.hpp"
#include "rbx/rbcx.hpp"

namespace rbx::action {

using lie::Cochain;
using lie::LieAlgebra;
using lie::ValidationReport;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;
using poly::Poly;
using poly::PolyVecField;

/* Lie algebra equipped with an operator B satisfying
   [B(u), B(v)] = B([B(u), v] + [u, B(v)]) on all pairs. */
struct RBLieAlgebra {
  LieAlgebra algebra;
  QMatrix bmap;
};

/* Checks the operator identity on every basis pair and the Jacobi identity
   of the descendent bracket; shape mismatches throw. */
ValidationReport validate_rb_lie(const RBLieAlgebra& r);

/* Descendent bracket [u,v]_B = [B(u), v] + [u, B(v)] as a structure table. */
LieAlgebra descendent_bracket(const RBLieAlgebra& r);

/* Coboundary of the operator complex Hom(L^k g, g) -> Hom(L^{k+1} g, g):
   (d_B f)(u_1..u_{k+1}) = sum_i (-1)^{i+1} [B(u_i), f(..^i..)]
                         + sum_i (-1)^{i+1} B [f(..^i..), u_i]
                         + sum_{i<j} (-1)^{i+j} f([B(u_i),u_j] - [B(u_j),u_i], ..^i..^j..).
   Agrees with the operator coboundary of B taken relative to the adjoint
   representation. */
Cochain db_apply(const RBLieAlgebra& r, const Cochain& f);
QMatrix db_matrix(const RBLieAlgebra& r, int k);
QMatrix db_matrix_serial(const RBLieAlgebra& r, int k);

rbcx::CohomologySummary rb_lie_cohomology(const RBLieAlgebra& r, int k);

/* Action of an operator Lie algebra on affine m-space: phi[i] is the
   vector field attached to the i-th algebra basis element, and phi must be
   a Lie homomorphism out of the descendent bracket. */
struct ActionModel {
  RBLieAlgebra rb;
  int base_dim = 0;
  std::vector<PolyVecField> phi;
};

ValidationReport validate_action(const ActionModel& m);

PolyVecField phi_of(const ActionModel& m, const QVec& u);

/* Section of the action algebroid: a g-valued polynomial coefficient
   vector plus a vector field on the base.  The anchor is the projection
   onto the field part. */
struct PolySection {
  std::vector<Poly> g_part;
  PolyVecField vf_part;

  PolySection operator+(const PolySection& other) const;
  PolySection operator-(const PolySection& other) const;
  PolySection multiplied(const Poly& h) const;
  bool operator==(const PolySection& other) const;
  bool is_zero() const;
};

PolySection zero_section(const ActionModel& m);
PolySection constant_section(const ActionModel& m, int basis_index);
PolySection constant_section(const ActionModel& m, const QVec& u);

/* Algebroid bracket, extended bilinearly over polynomial coefficients:
   [fu + X, gv + Y] = fg [u,v] + X(g) v - Y(f) u + [X,Y]. */
PolySection algebroid_bracket(const ActionModel& m, const PolySection& s,
                              const PolySection& t);

/* The operator R(f x u) = f x B(u) + f phi(u) on kernel sections; a
   nonzero field part is a domain error. */
PolySection r_apply(const ActionModel& m, const PolySection& s);

/* [Rs, Rt] - R([Rs, t] + [s, Rt]) for kernel sections s, t. */
PolySection rb_identity_residual(const ActionModel& m, const PolySection& s,
                                 const PolySection& t);

/* Alternating k-cochain on the algebra with vector-field values, stored on
   strictly increasing basis tuples.  Degree 0 is a single field. */
class MorphismCochain {
 public:
  MorphismCochain() = default;
  MorphismCochain(int degree, int src_dim, int base_dim);

  int degree() const { return degree_; }
  int src_dim() const { return src_dim_; }
  int base_dim() const { return base_dim_; }
  std::size_t tuple_count() const { return values_.size(); }

  PolyVecField& value_at(std::size_t tuple_index);
  const PolyVecField& value_at(std::size_t tuple_index) const;

  /* Value on an arbitrary index tuple; antisymmetry supplies the sign and
     repeated indices give zero. */
  PolyVecField eval(std::vector<int> idx) const;

  /* Multilinear extension with a vector in the first slot and basis
     indices in the remaining ones. */
  PolyVecField eval_front(const QVec& head, const std::vector<int>& rest) const;

  MorphismCochain operator+(const MorphismCochain& other) const;
  MorphismCochain operator-(const MorphismCochain& other) const;
  MorphismCochain scaled(const Rat& s) const;
  bool operator==(const MorphismCochain& other) const;
  bool is_zero() const;

 private:
  int degree_ = 0;
  int src_dim_ = 0;
  int base_dim_ = 0;
  std::vector<PolyVecField> values_;
};

/* phi itself as a degree-1 cochain. */
MorphismCochain morphism_cochain(const ActionModel& m);

/* Coboundary of the homomorphism complex:
   (d_phi P)(u_1..u_{k+1}) = sum_i (-1)^{i+1} [phi(u_i), P(..^i..)]
                           + sum_{i<j} (-1)^{i+j} P([u_i,u_j]_B, ..^i..^j..). */
PolyVecField dphi_apply(const ActionModel& m, const MorphismCochain& p,
                        const std::vector<int>& args);
MorphismCochain dphi_cochain(const ActionModel& m, const MorphismCochain& p);

/* Pairing map into algebroid cochains: on kernel sections s_i = sum f_i x u_i,
   Xi(P1, P2)(s_1..s_k) expands multilinearly over the coefficients and on
   basis tuples equals 1 x P1(u_1..u_k) + P2(u_1..u_k). */
PolySection xi_apply(const ActionModel& m, const Cochain& p1,
                     const MorphismCochain& p2,
                     const std::vector<PolySection>& args);

/* d_R(Xi(P1,P2)) - Xi(d_B P1, d_phi P2) on the constant sections named by
   args, where d_R is the operator coboundary of R with the bracket
   representation on kernel sections; exactly zero since Xi is a chain map. */
PolySection xi_chain_residual(const ActionModel& m, const Cochain& p1,
                              const MorphismCochain& p2,
                              const std::vector<int>& args);

}  // namespace rbx::action

#endif
