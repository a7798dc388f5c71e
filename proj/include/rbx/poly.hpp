#ifndef RBX_POLY_HPP
#define RBX_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "rbx/rational.hpp"

namespace rbx::poly {

using lin::Rat;

/* Polynomial over Q in the variables x1..xm, stored as a map from exponent
   multi-indices to coefficients.  Zero coefficients are never stored, so
   operator== is structural equality. */
class Poly {
 public:
  Poly() = default;
  explicit Poly(int vars);

  static Poly constant(int vars, const Rat& c);
  static Poly variable(int vars, int index);
  static Poly monomial(int vars, const std::vector<int>& exps, const Rat& c);

  /* Grammar: terms separated by + and -, each term a product of factors
     with '*' optional between them; a factor is a rational literal (p/q
     or integer) or a variable x<i> with an optional ^<power>.  Examples:
     "3/2*x1^2*x2 - x2", "2x1", "-5".  Throws std::invalid_argument on
     malformed input or a variable index outside 1..vars. */
  static Poly parse(const std::string& text, int vars);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& other) const;

  Poly derivative(int index) const;
  Rat eval(const std::vector<Rat>& point) const;
  std::string to_string() const;

 private:
  int vars_ = 0;
  std::map<std::vector<int>, Rat> terms_;

  void add_term(const std::vector<int>& exps, const Rat& c);
};

/* Vector field on affine m-space with polynomial components; component i
   is the coefficient of the coordinate derivation along x_{i+1}. */
struct PolyVecField {
  std::vector<Poly> components;

  static PolyVecField zero(int base_dim);

  int base_dim() const { return static_cast<int>(components.size()); }

  /* Directional derivative X(h) = sum_i X_i dh/dx_i. */
  Poly apply(const Poly& h) const;

  PolyVecField operator+(const PolyVecField& other) const;
  PolyVecField operator-(const PolyVecField& other) const;
  PolyVecField scaled(const Rat& s) const;
  PolyVecField multiplied(const Poly& h) const;
  bool operator==(const PolyVecField& other) const;
  bool is_zero() const;
};

/* Commutator [X,Y] = X(Y) - Y(X) taken componentwise. */
PolyVecField poly_vf_bracket(const PolyVecField& x, const PolyVecField& y);

}  // namespace rbx::poly

#endif
