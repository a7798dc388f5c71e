#ifndef RBX_COCHAIN_HPP
#define RBX_COCHAIN_HPP

#include <vector>

#include "rbx/combinatorics.hpp"
#include "rbx/qmatrix.hpp"

namespace rbx::lie {

using lin::QVec;
using lin::Rat;

/* Degree-k alternating multilinear map from a src_dim-dimensional space to
   a val_dim-dimensional one, stored by its values on strictly increasing
   basis tuples in lexicographic order.  Degree 0 is a single vector. */
class Cochain {
 public:
  Cochain() = default;
  Cochain(int degree, int src_dim, int val_dim);

  static Cochain basis_element(int degree, int src_dim, int val_dim,
                               std::size_t tuple_index, int component);

  int degree() const { return degree_; }
  int src_dim() const { return src_dim_; }
  int val_dim() const { return val_dim_; }

  std::size_t tuple_count() const { return values_.size(); }
  std::size_t flat_dim() const { return values_.size() * val_dim_; }

  QVec& value_at(std::size_t tuple_index);
  const QVec& value_at(std::size_t tuple_index) const;

  /* Value on an arbitrary index tuple; antisymmetry supplies the sign and
     repeated indices give zero. */
  QVec eval(std::vector<int> idx) const;

  /* Multilinear extension with a vector in the first slot and basis
     indices in the remaining ones. */
  QVec eval_front(const QVec& head, const std::vector<int>& rest) const;

  QVec flatten() const;
  static Cochain unflatten(int degree, int src_dim, int val_dim, const QVec& flat);

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const Rat& s) const;
  bool operator==(const Cochain& other) const;
  bool is_zero() const;

 private:
  int degree_ = 0;
  int src_dim_ = 0;
  int val_dim_ = 0;
  std::vector<QVec> values_;
};

}  // namespace rbx::lie

#endif
