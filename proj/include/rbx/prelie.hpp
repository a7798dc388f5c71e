#ifndef RBX_PRELIE_HPP
#define RBX_PRELIE_HPP

#include <vector>

#include "rbx/cochain.hpp"
#include "rbx/liealg.hpp"
#include "rbx/linalg.hpp"
#include "rbx/qmatrix.hpp"

namespace rbx::prelie {

using lie::Cochain;
using lie::LieAlgebra;
using lie::LieRepPair;
using lie::ValidationReport;
using lin::Cohomology;
using lin::QMatrix;
using lin::QVec;
using lin::Rat;

/* Left-symmetric product on a finite-dimensional rational vector space,
   stored as product[i][j] = e_i * e_j in coordinates. */
struct PreLieAlgebra {
  int dim = 0;
  std::vector<std::vector<QVec>> product;

  const QVec& product_of(int i, int j) const;
  QVec product_vec(const QVec& x, const QVec& y) const;

  /* Matrix of left multiplication x -> e_i * x. */
  QMatrix left_mult(int i) const;
  /* Matrix of right multiplication x -> x * e_i. */
  QMatrix right_mult(int i) const;

  /* Commutator bracket [x,y] = x*y - y*x. */
  LieAlgebra sub_adjacent() const;
};

/* Checks the left-symmetry axiom: the associator (x,y,z) = x*(y*z) - (x*y)*z
   is symmetric in x and y on all basis triples. */
ValidationReport validate_prelie(const PreLieAlgebra& p);

/* Degree-n multilinear map with n alternating slots followed by one free
   slot, all on the same dim-dimensional space. Degree 0 is a linear map. */
class Multiderivation {
 public:
  Multiderivation() = default;
  Multiderivation(int degree, int dim);

  static Multiderivation basis_element(int degree, int dim, std::size_t tuple_index,
                                       int last, int component);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  std::size_t tuple_count() const { return tuple_count_; }
  std::size_t flat_dim() const { return tuple_count_ * dim_ * dim_; }

  QVec& value_at(std::size_t tuple_index, int last);
  const QVec& value_at(std::size_t tuple_index, int last) const;

  /* Value on arbitrary alternating-slot indices plus a free-slot index. */
  QVec eval(std::vector<int> front, int last) const;
  /* Multilinear extension with a vector in the first alternating slot. */
  QVec eval_front(const QVec& head, const std::vector<int>& rest, int last) const;
  /* Multilinear extension with a vector in the free slot. */
  QVec eval_last(const std::vector<int>& front, const QVec& tail) const;

  QVec flatten() const;
  static Multiderivation unflatten(int degree, int dim, const QVec& flat);

  Multiderivation operator+(const Multiderivation& other) const;
  Multiderivation operator-(const Multiderivation& other) const;
  Multiderivation scaled(const Rat& s) const;
  bool operator==(const Multiderivation& other) const;
  bool is_zero() const;

 private:
  int degree_ = 0;
  int dim_ = 0;
  std::size_t tuple_count_ = 0;
  std::vector<QVec> values_;
};

/* Composition entering the graded bracket on multiderivations. */
Multiderivation mn_compose(const Multiderivation& d1, const Multiderivation& d2);

/* Graded bracket [d1,d2] = d1 o d2 - (-1)^{mn} d2 o d1 on multiderivations
   of degrees m and n. */
Multiderivation mn_bracket(const Multiderivation& d1, const Multiderivation& d2);

/* The pre-Lie product as a degree-1 multiderivation. */
Multiderivation product_derivation(const PreLieAlgebra& p);

/* Differential of the deformation complex applied to one element, via the
   explicit sum formula. */
Multiderivation ddef_apply(const PreLieAlgebra& p, const Multiderivation& d);

/* Same differential routed through the graded bracket with the product. */
Multiderivation ddef_apply_bracket(const PreLieAlgebra& p, const Multiderivation& d);

/* Matrix of the differential from degree n-1 to degree n, n >= 1. */
QMatrix ddef_matrix(const PreLieAlgebra& p, int n);
QMatrix ddef_matrix_serial(const PreLieAlgebra& p, int n);

/* Cohomology of the deformation complex in degree k >= 0. */
Cohomology def_cohomology(const PreLieAlgebra& p, int k);

/* Turns a k-cochain P into the degree-k multiderivation
   (u_1..u_k, u) -> rho(P(u_1..u_k)) u on the representation space. */
Multiderivation phi_map(const LieRepPair& pair, const Cochain& c);

/* Pre-Lie product u * v = rho(Tu) v induced by an operator satisfying the
   Rota-Baxter identity. */
PreLieAlgebra induced_prelie(const LieRepPair& pair, const QMatrix& t);

}  // namespace rbx::prelie

#endif
