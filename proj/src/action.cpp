#include "rbx/action.hpp"

#include <sstream>
#include <stdexcept>

#include "rbx/assemble.hpp"
#include "rbx/combinatorics.hpp"

namespace rbx::action {

using lie::adjoint_rep;
using lie::LieRepPair;
using lie::validate_lie;
using lin::basis_vec;
using lin::binom;
using lin::increasing_tuples;
using lin::sort_with_sign;
using lin::tuple_rank;
using lin::operator+;
using lin::operator-;
using lin::operator*;
using lin::operator+=;
using lin::operator-=;

static void check_rb_shape(const RBLieAlgebra& r) {
  validate_lie(r.algebra);
  const int n = r.algebra.dim;
  if (static_cast<int>(r.bmap.rows()) != n || static_cast<int>(r.bmap.cols()) != n)
    throw std::invalid_argument("operator matrix shape does not match the algebra");
}

ValidationReport validate_rb_lie(const RBLieAlgebra& r) {
  check_rb_shape(r);
  ValidationReport rep = validate_lie(r.algebra);
  const int n = r.algebra.dim;
  for (int i = 0; i < n; ++i) {
    QVec bi = r.bmap.column(i);
    for (int j = i + 1; j < n; ++j) {
      QVec bj = r.bmap.column(j);
      QVec lhs = r.algebra.bracket_vec(bi, bj);
      QVec inner = r.algebra.bracket_vec(bi, basis_vec(n, j)) +
                   r.algebra.bracket_vec(basis_vec(n, i), bj);
      if (!(lhs == r.bmap.apply(inner))) {
        std::ostringstream os;
        os << "operator identity fails at basis pair (" << i << "," << j << ")";
        rep.violations.push_back(os.str());
      }
    }
  }
  for (const std::string& v : validate_lie(descendent_bracket(r)).violations)
    rep.violations.push_back("descendent bracket: " + v);
  rep.ok = rep.violations.empty();
  return rep;
}

LieAlgebra descendent_bracket(const RBLieAlgebra& r) {
  check_rb_shape(r);
  const int n = r.algebra.dim;
  LieAlgebra out;
  out.dim = n;
  out.bracket.assign(n, std::vector<QVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.bracket[i][j] = r.algebra.bracket_vec(r.bmap.column(i), basis_vec(n, j)) +
                          r.algebra.bracket_vec(basis_vec(n, i), r.bmap.column(j));
  return out;
}

Cochain db_apply(const RBLieAlgebra& r, const Cochain& f) {
  check_rb_shape(r);
  const int n = r.algebra.dim;
  if (f.src_dim() != n || f.val_dim() != n)
    throw std::invalid_argument("cochain shape does not match the algebra");
  const int k = f.degree();
  Cochain out(k + 1, n, n);
  auto tuples = increasing_tuples(n, k + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& u = tuples[t];
    QVec acc(n, Rat(0));
    for (int i = 0; i <= k; ++i) {
      std::vector<int> rest;
      for (int a = 0; a <= k; ++a)
        if (a != i) rest.push_back(u[a]);
      QVec val = f.eval(rest);
      QVec bu = r.bmap.column(u[i]);
      QVec term = r.algebra.bracket_vec(bu, val) +
                  r.bmap.apply(r.algebra.bracket_vec(val, basis_vec(n, u[i])));
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    for (int i = 0; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        QVec head = r.algebra.bracket_vec(r.bmap.column(u[i]), basis_vec(n, u[j])) -
                    r.algebra.bracket_vec(r.bmap.column(u[j]), basis_vec(n, u[i]));
        std::vector<int> rest;
        for (int a = 0; a <= k; ++a)
          if (a != i && a != j) rest.push_back(u[a]);
        QVec term = f.eval_front(head, rest);
        if ((i + j) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
    }
    out.value_at(t) = acc;
  }
  return out;
}

static QMatrix db_matrix_impl(const RBLieAlgebra& r, int k, bool parallel) {
  ValidationReport rep = validate_rb_lie(r);
  if (!rep.ok)
    throw std::invalid_argument("operator fails the Rota-Baxter identity: " +
                                rep.violations.front());
  if (k < 0) throw std::invalid_argument("negative cochain degree");
  const int n = r.algebra.dim;
  const std::size_t rows = binom(n, k + 1) * n;
  const std::size_t cols = binom(n, k) * n;
  auto column = [&](std::size_t j) {
    Cochain basis = Cochain::basis_element(k, n, n, j / n, static_cast<int>(j % n));
    return db_apply(r, basis).flatten();
  };
  return parallel ? lin::matrix_from_columns(rows, cols, column)
                  : lin::matrix_from_columns_serial(rows, cols, column);
}

QMatrix db_matrix(const RBLieAlgebra& r, int k) { return db_matrix_impl(r, k, true); }

QMatrix db_matrix_serial(const RBLieAlgebra& r, int k) {
  return db_matrix_impl(r, k, false);
}

rbcx::CohomologySummary rb_lie_cohomology(const RBLieAlgebra& r, int k) {
  ValidationReport rep = validate_rb_lie(r);
  if (!rep.ok)
    throw std::invalid_argument("operator fails the Rota-Baxter identity: " +
                                rep.violations.front());
  LieRepPair pair{r.algebra, adjoint_rep(r.algebra)};
  return rbcx::rb_cohomology(pair, r.bmap, k);
}

static void check_model_shape(const ActionModel& m) {
  check_rb_shape(m.rb);
  if (m.base_dim < 0) throw std::invalid_argument("negative base dimension");
  if (static_cast<int>(m.phi.size()) != m.rb.algebra.dim)
    throw std::invalid_argument("field count does not match the algebra dimension");
  for (const PolyVecField& x : m.phi)
    if (x.base_dim() != m.base_dim)
      throw std::invalid_argument("field base dimension does not match the model");
}

ValidationReport validate_action(const ActionModel& m) {
  check_model_shape(m);
  ValidationReport rep = validate_rb_lie(m.rb);
  LieAlgebra desc = descendent_bracket(m.rb);
  const int n = m.rb.algebra.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PolyVecField lhs = poly_vf_bracket(m.phi[i], m.phi[j]);
      if (!(lhs == phi_of(m, desc.bracket_of(i, j)))) {
        std::ostringstream os;
        os << "action homomorphism fails at basis pair (" << i << "," << j << ")";
        rep.violations.push_back(os.str());
      }
    }
  rep.ok = rep.violations.empty();
  return rep;
}

PolyVecField phi_of(const ActionModel& m, const QVec& u) {
  check_model_shape(m);
  if (static_cast<int>(u.size()) != m.rb.algebra.dim)
    throw std::invalid_argument("coefficient vector length does not match the algebra");
  PolyVecField out = PolyVecField::zero(m.base_dim);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    out = out + m.phi[a].scaled(u[a]);
  }
  return out;
}

static void check_section_shape(const ActionModel& m, const PolySection& s) {
  if (static_cast<int>(s.g_part.size()) != m.rb.algebra.dim)
    throw std::invalid_argument("section coefficient count does not match the algebra");
  if (s.vf_part.base_dim() != m.base_dim)
    throw std::invalid_argument("section field part does not match the base dimension");
  for (const Poly& f : s.g_part)
    if (f.vars() != m.base_dim)
      throw std::invalid_argument("section coefficient over wrong variable count");
}

PolySection PolySection::operator+(const PolySection& other) const {
  if (g_part.size() != other.g_part.size())
    throw std::invalid_argument("section shapes differ");
  PolySection out = *this;
  for (std::size_t a = 0; a < g_part.size(); ++a) out.g_part[a] += other.g_part[a];
  out.vf_part = vf_part + other.vf_part;
  return out;
}

PolySection PolySection::operator-(const PolySection& other) const {
  if (g_part.size() != other.g_part.size())
    throw std::invalid_argument("section shapes differ");
  PolySection out = *this;
  for (std::size_t a = 0; a < g_part.size(); ++a) out.g_part[a] -= other.g_part[a];
  out.vf_part = vf_part - other.vf_part;
  return out;
}

PolySection PolySection::multiplied(const Poly& h) const {
  PolySection out = *this;
  for (Poly& f : out.g_part) f = f * h;
  out.vf_part = vf_part.multiplied(h);
  return out;
}

bool PolySection::operator==(const PolySection& other) const {
  return g_part == other.g_part && vf_part == other.vf_part;
}

bool PolySection::is_zero() const {
  for (const Poly& f : g_part)
    if (!f.is_zero()) return false;
  return vf_part.is_zero();
}

PolySection zero_section(const ActionModel& m) {
  check_model_shape(m);
  PolySection s;
  s.g_part.assign(m.rb.algebra.dim, Poly(m.base_dim));
  s.vf_part = PolyVecField::zero(m.base_dim);
  return s;
}

PolySection constant_section(const ActionModel& m, int basis_index) {
  PolySection s = zero_section(m);
  if (basis_index < 0 || basis_index >= m.rb.algebra.dim)
    throw std::invalid_argument("basis index out of range");
  s.g_part[basis_index] = Poly::constant(m.base_dim, Rat(1));
  return s;
}

PolySection constant_section(const ActionModel& m, const QVec& u) {
  PolySection s = zero_section(m);
  if (static_cast<int>(u.size()) != m.rb.algebra.dim)
    throw std::invalid_argument("coefficient vector length does not match the algebra");
  for (std::size_t a = 0; a < u.size(); ++a)
    s.g_part[a] = Poly::constant(m.base_dim, u[a]);
  return s;
}

PolySection algebroid_bracket(const ActionModel& m, const PolySection& s,
                              const PolySection& t) {
  check_section_shape(m, s);
  check_section_shape(m, t);
  const int n = m.rb.algebra.dim;
  PolySection out = zero_section(m);
  for (int a = 0; a < n; ++a) {
    if (s.g_part[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (t.g_part[b].is_zero()) continue;
      const QVec& br = m.rb.algebra.bracket_of(a, b);
      Poly prod = s.g_part[a] * t.g_part[b];
      for (int c = 0; c < n; ++c)
        if (br[c] != 0) out.g_part[c] += prod.scaled(br[c]);
    }
  }
  for (int c = 0; c < n; ++c) {
    out.g_part[c] += s.vf_part.apply(t.g_part[c]);
    out.g_part[c] -= t.vf_part.apply(s.g_part[c]);
  }
  out.vf_part = poly_vf_bracket(s.vf_part, t.vf_part);
  return out;
}

PolySection r_apply(const ActionModel& m, const PolySection& s) {
  check_section_shape(m, s);
  if (!s.vf_part.is_zero())
    throw std::invalid_argument("section is not in the kernel of the anchor");
  const int n = m.rb.algebra.dim;
  PolySection out = zero_section(m);
  for (int a = 0; a < n; ++a) {
    if (s.g_part[a].is_zero()) continue;
    for (int c = 0; c < n; ++c) {
      const Rat& coef = m.rb.bmap.at(c, a);
      if (coef != 0) out.g_part[c] += s.g_part[a].scaled(coef);
    }
    out.vf_part = out.vf_part + m.phi[a].multiplied(s.g_part[a]);
  }
  return out;
}

PolySection rb_identity_residual(const ActionModel& m, const PolySection& s,
                                 const PolySection& t) {
  PolySection rs = r_apply(m, s);
  PolySection rt = r_apply(m, t);
  PolySection lhs = algebroid_bracket(m, rs, rt);
  PolySection inner = algebroid_bracket(m, rs, t) + algebroid_bracket(m, s, rt);
  return lhs - r_apply(m, inner);
}

MorphismCochain::MorphismCochain(int degree, int src_dim, int base_dim)
    : degree_(degree), src_dim_(src_dim), base_dim_(base_dim) {
  if (degree < 0 || src_dim < 0 || base_dim < 0)
    throw std::invalid_argument("cochain with negative shape");
  values_.assign(binom(src_dim, degree), PolyVecField::zero(base_dim));
}

PolyVecField& MorphismCochain::value_at(std::size_t tuple_index) {
  if (tuple_index >= values_.size()) throw std::out_of_range("cochain tuple index");
  return values_[tuple_index];
}

const PolyVecField& MorphismCochain::value_at(std::size_t tuple_index) const {
  if (tuple_index >= values_.size()) throw std::out_of_range("cochain tuple index");
  return values_[tuple_index];
}

PolyVecField MorphismCochain::eval(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("cochain evaluated at wrong arity");
  int sign = sort_with_sign(idx);
  if (sign == 0) return PolyVecField::zero(base_dim_);
  const PolyVecField& v = values_[tuple_rank(idx, src_dim_)];
  return sign == 1 ? v : v.scaled(Rat(-1));
}

PolyVecField MorphismCochain::eval_front(const QVec& head,
                                         const std::vector<int>& rest) const {
  if (static_cast<int>(head.size()) != src_dim_)
    throw std::invalid_argument("cochain front argument dimension mismatch");
  PolyVecField out = PolyVecField::zero(base_dim_);
  std::vector<int> idx(rest.size() + 1);
  for (int i = 0; i < src_dim_; ++i) {
    if (head[i] == 0) continue;
    idx[0] = i;
    for (std::size_t t = 0; t < rest.size(); ++t) idx[t + 1] = rest[t];
    out = out + eval(idx).scaled(head[i]);
  }
  return out;
}

MorphismCochain MorphismCochain::operator+(const MorphismCochain& other) const {
  if (degree_ != other.degree_ || src_dim_ != other.src_dim_ ||
      base_dim_ != other.base_dim_)
    throw std::invalid_argument("cochain shape mismatch");
  MorphismCochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t)
    out.values_[t] = out.values_[t] + other.values_[t];
  return out;
}

MorphismCochain MorphismCochain::operator-(const MorphismCochain& other) const {
  if (degree_ != other.degree_ || src_dim_ != other.src_dim_ ||
      base_dim_ != other.base_dim_)
    throw std::invalid_argument("cochain shape mismatch");
  MorphismCochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t)
    out.values_[t] = out.values_[t] - other.values_[t];
  return out;
}

MorphismCochain MorphismCochain::scaled(const Rat& s) const {
  MorphismCochain out = *this;
  for (PolyVecField& v : out.values_) v = v.scaled(s);
  return out;
}

bool MorphismCochain::operator==(const MorphismCochain& other) const {
  return degree_ == other.degree_ && src_dim_ == other.src_dim_ &&
         base_dim_ == other.base_dim_ && values_ == other.values_;
}

bool MorphismCochain::is_zero() const {
  for (const PolyVecField& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

MorphismCochain morphism_cochain(const ActionModel& m) {
  check_model_shape(m);
  MorphismCochain p(1, m.rb.algebra.dim, m.base_dim);
  for (int i = 0; i < m.rb.algebra.dim; ++i) p.value_at(i) = m.phi[i];
  return p;
}

PolyVecField dphi_apply(const ActionModel& m, const MorphismCochain& p,
                        const std::vector<int>& args) {
  check_model_shape(m);
  const int n = m.rb.algebra.dim;
  if (p.src_dim() != n || p.base_dim() != m.base_dim)
    throw std::invalid_argument("cochain shape does not match the model");
  const int k = p.degree();
  if (static_cast<int>(args.size()) != k + 1)
    throw std::invalid_argument("wrong argument count for the coboundary");
  for (int a : args)
    if (a < 0 || a >= n) throw std::invalid_argument("basis index out of range");
  LieAlgebra desc = descendent_bracket(m.rb);
  PolyVecField acc = PolyVecField::zero(m.base_dim);
  for (int i = 0; i <= k; ++i) {
    std::vector<int> rest;
    for (int a = 0; a <= k; ++a)
      if (a != i) rest.push_back(args[a]);
    PolyVecField term = poly_vf_bracket(m.phi[args[i]], p.eval(rest));
    acc = i % 2 == 0 ? acc + term : acc - term;
  }
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::vector<int> rest;
      for (int a = 0; a <= k; ++a)
        if (a != i && a != j) rest.push_back(args[a]);
      PolyVecField term = p.eval_front(desc.bracket_of(args[i], args[j]), rest);
      acc = (i + j) % 2 == 0 ? acc + term : acc - term;
    }
  }
  return acc;
}

MorphismCochain dphi_cochain(const ActionModel& m, const MorphismCochain& p) {
  MorphismCochain out(p.degree() + 1, p.src_dim(), p.base_dim());
  auto tuples = increasing_tuples(p.src_dim(), p.degree() + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    out.value_at(t) = dphi_apply(m, p, tuples[t]);
  return out;
}

PolySection xi_apply(const ActionModel& m, const Cochain& p1,
                     const MorphismCochain& p2,
                     const std::vector<PolySection>& args) {
  check_model_shape(m);
  const int n = m.rb.algebra.dim;
  if (p1.src_dim() != n || p1.val_dim() != n)
    throw std::invalid_argument("algebra cochain shape does not match the model");
  if (p2.src_dim() != n || p2.base_dim() != m.base_dim)
    throw std::invalid_argument("field cochain shape does not match the model");
  if (p1.degree() != p2.degree())
    throw std::invalid_argument("paired cochains have different degrees");
  const int k = p1.degree();
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("wrong argument count for the pairing map");
  for (const PolySection& s : args) {
    check_section_shape(m, s);
    if (!s.vf_part.is_zero())
      throw std::invalid_argument("section is not in the kernel of the anchor");
  }

  PolySection out = zero_section(m);
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<int> sorted = idx;
    if (sort_with_sign(sorted) != 0) {
      Poly coeff = Poly::constant(m.base_dim, Rat(1));
      bool vanished = false;
      for (int i = 0; i < k; ++i) {
        if (args[i].g_part[idx[i]].is_zero()) {
          vanished = true;
          break;
        }
        coeff = coeff * args[i].g_part[idx[i]];
      }
      if (!vanished) {
        QVec v = p1.eval(idx);
        for (int c = 0; c < n; ++c)
          if (v[c] != 0) out.g_part[c] += coeff.scaled(v[c]);
        PolyVecField w = p2.eval(idx);
        if (!w.is_zero()) out.vf_part = out.vf_part + w.multiplied(coeff);
      }
    }
    int slot = k - 1;
    while (slot >= 0 && idx[slot] == n - 1) {
      idx[slot] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++idx[slot];
  }
  return out;
}

PolySection xi_chain_residual(const ActionModel& m, const Cochain& p1,
                              const MorphismCochain& p2,
                              const std::vector<int>& args) {
  check_model_shape(m);
  const int n = m.rb.algebra.dim;
  const int k = p1.degree();
  if (p2.degree() != k)
    throw std::invalid_argument("paired cochains have different degrees");
  if (static_cast<int>(args.size()) != k + 1)
    throw std::invalid_argument("wrong argument count for the chain residual");
  for (int a : args)
    if (a < 0 || a >= n) throw std::invalid_argument("basis index out of range");

  std::vector<PolySection> cs;
  for (int a : args) cs.push_back(constant_section(m, a));

  PolySection acc = zero_section(m);
  for (int i = 0; i <= k; ++i) {
    std::vector<PolySection> rest;
    for (int a = 0; a <= k; ++a)
      if (a != i) rest.push_back(cs[a]);
    PolySection q = xi_apply(m, p1, p2, rest);
    PolySection term = algebroid_bracket(m, r_apply(m, cs[i]), q) +
                       r_apply(m, algebroid_bracket(m, q, cs[i]));
    acc = i % 2 == 0 ? acc + term : acc - term;
  }
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      PolySection front = algebroid_bracket(m, r_apply(m, cs[i]), cs[j]) -
                          algebroid_bracket(m, r_apply(m, cs[j]), cs[i]);
      std::vector<PolySection> rest{front};
      for (int a = 0; a <= k; ++a)
        if (a != i && a != j) rest.push_back(cs[a]);
      PolySection term = xi_apply(m, p1, p2, rest);
      acc = (i + j) % 2 == 0 ? acc + term : acc - term;
    }
  }

  PolySection mapped = xi_apply(m, db_apply(m.rb, p1), dphi_cochain(m, p2), cs);
  return acc - mapped;
}

}  // namespace rbx::action
