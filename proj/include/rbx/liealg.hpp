#ifndef RBX_LIEALG_HPP
#define RBX_LIEALG_HPP

#include <string>
#include <vector>

#include "rbx/cochain.hpp"
#include "rbx/qmatrix.hpp"

namespace rbx::lie {

using lin::QMatrix;
using lin::QVec;
using lin::Rat;

/* Finite-dimensional Lie algebra over Q given by structure constants:
   bracket[i][j] holds the coordinates of [e_i, e_j]. */
struct LieAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> bracket;

  static LieAlgebra abelian(int dim);

  const QVec& bracket_of(int i, int j) const { return bracket[i][j]; }
  QVec bracket_vec(const QVec& x, const QVec& y) const;
};

/* Representation of a Lie algebra on a dim-dimensional space: one action
   matrix per algebra basis element. */
struct Representation {
  int dim = 0;
  std::vector<QMatrix> action;

  const QMatrix& of_basis(int i) const { return action[i]; }
  QMatrix of_vec(const QVec& x) const;
  QVec apply(int i, const QVec& v) const { return action[i].apply(v); }
};

struct LieRepPair {
  LieAlgebra algebra;
  Representation rep;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/* Shape, antisymmetry on all pairs, Jacobi on all basis triples. */
ValidationReport validate_lie(const LieAlgebra& g);

/* rho([e_i,e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i) on all pairs. */
ValidationReport validate_rep(const LieAlgebra& g, const Representation& r);

ValidationReport validate_pair(const LieRepPair& p);

Representation adjoint_rep(const LieAlgebra& g);
Representation trivial_rep(const LieAlgebra& g, int dim);
Representation dual_rep(const LieAlgebra& g, const Representation& r);
Representation direct_sum_rep(const Representation& a, const Representation& b);

/* Chevalley-Eilenberg differential of the complex C^*(src, coef) for a
   coefficient representation of src.  ce_apply evaluates on one cochain;
   ce_matrix assembles the full degree-k matrix (columns indexed by basis
   cochains of C^k, flattened as tuple-major, value-component-minor). */
Cochain ce_apply(const LieAlgebra& src, const Representation& coef, const Cochain& w);
QMatrix ce_matrix(const LieAlgebra& src, const Representation& coef, int k);
QMatrix ce_matrix_serial(const LieAlgebra& src, const Representation& coef, int k);

}  // namespace rbx::lie

#endif
