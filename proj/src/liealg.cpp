#include "rbx/liealg.hpp"

#include <sstream>
#include <stdexcept>

#include "rbx/assemble.hpp"
#include "rbx/linalg.hpp"

namespace rbx::lie {

using lin::basis_vec;
using lin::binom;
using lin::increasing_tuples;
using lin::operator+;
using lin::operator+=;
using lin::operator-=;

LieAlgebra LieAlgebra::abelian(int dim) {
  LieAlgebra g;
  g.dim = dim;
  g.bracket.assign(dim, std::vector<QVec>(dim, QVec(dim, Rat(0))));
  return g;
}

QVec LieAlgebra::bracket_vec(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("bracket argument dimension mismatch");
  QVec out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      const QVec& c = bracket[i][j];
      for (int k = 0; k < dim; ++k)
        if (c[k] != 0) out[k] += f * c[k];
    }
  }
  return out;
}

QMatrix Representation::of_vec(const QVec& x) const {
  QMatrix m(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    m = m + action[i].scaled(x[i]);
  }
  return m;
}

static void check_lie_shape(const LieAlgebra& g) {
  if (g.dim < 0) throw std::invalid_argument("negative Lie algebra dimension");
  if (static_cast<int>(g.bracket.size()) != g.dim)
    throw std::invalid_argument("bracket table has wrong row count");
  for (const auto& row : g.bracket) {
    if (static_cast<int>(row.size()) != g.dim)
      throw std::invalid_argument("bracket table has wrong column count");
    for (const auto& c : row)
      if (static_cast<int>(c.size()) != g.dim)
        throw std::invalid_argument("bracket coefficient vector has wrong length");
  }
}

ValidationReport validate_lie(const LieAlgebra& g) {
  check_lie_shape(g);
  ValidationReport rep;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i; j < g.dim; ++j) {
      QVec sum = g.bracket[i][j] + g.bracket[j][i];
      if (!lin::is_zero(sum)) {
        std::ostringstream os;
        os << "antisymmetry fails at basis pair (" << i << "," << j << ")";
        rep.violations.push_back(os.str());
      }
    }
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (int k = j + 1; k < g.dim; ++k) {
        QVec jac = g.bracket_vec(g.bracket[i][j], basis_vec(g.dim, k));
        jac += g.bracket_vec(g.bracket[j][k], basis_vec(g.dim, i));
        jac += g.bracket_vec(g.bracket[k][i], basis_vec(g.dim, j));
        if (!lin::is_zero(jac)) {
          std::ostringstream os;
          os << "Jacobi fails at basis triple (" << i << "," << j << "," << k << ")";
          rep.violations.push_back(os.str());
        }
      }
  rep.ok = rep.violations.empty();
  return rep;
}

ValidationReport validate_rep(const LieAlgebra& g, const Representation& r) {
  check_lie_shape(g);
  if (static_cast<int>(r.action.size()) != g.dim)
    throw std::invalid_argument("representation matrix count differs from algebra dimension");
  for (const QMatrix& m : r.action)
    if (static_cast<int>(m.rows()) != r.dim || static_cast<int>(m.cols()) != r.dim)
      throw std::invalid_argument("representation matrix has wrong shape");
  ValidationReport rep;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      QMatrix lhs = r.of_vec(g.bracket[i][j]);
      QMatrix rhs = r.action[i] * r.action[j] - r.action[j] * r.action[i];
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "representation commutator fails at basis pair (" << i << "," << j << ")";
        rep.violations.push_back(os.str());
      }
    }
  rep.ok = rep.violations.empty();
  return rep;
}

ValidationReport validate_pair(const LieRepPair& p) {
  ValidationReport a = validate_lie(p.algebra);
  ValidationReport b = validate_rep(p.algebra, p.rep);
  ValidationReport out;
  out.violations = a.violations;
  out.violations.insert(out.violations.end(), b.violations.begin(), b.violations.end());
  out.ok = out.violations.empty();
  return out;
}

Representation adjoint_rep(const LieAlgebra& g) {
  Representation r;
  r.dim = g.dim;
  for (int i = 0; i < g.dim; ++i) {
    QMatrix m(g.dim, g.dim);
    for (int j = 0; j < g.dim; ++j) {
      const QVec& c = g.bracket[i][j];
      for (int k = 0; k < g.dim; ++k) m.at(k, j) = c[k];
    }
    r.action.push_back(m);
  }
  return r;
}

Representation trivial_rep(const LieAlgebra& g, int dim) {
  Representation r;
  r.dim = dim;
  r.action.assign(g.dim, QMatrix(dim, dim));
  return r;
}

Representation dual_rep(const LieAlgebra& g, const Representation& r) {
  Representation d;
  d.dim = r.dim;
  for (int i = 0; i < g.dim; ++i) d.action.push_back(r.action[i].transpose().scaled(Rat(-1)));
  return d;
}

Representation direct_sum_rep(const Representation& a, const Representation& b) {
  if (a.action.size() != b.action.size())
    throw std::invalid_argument("direct sum of representations of different algebras");
  Representation s;
  s.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    QMatrix m(s.dim, s.dim);
    for (int p = 0; p < a.dim; ++p)
      for (int q = 0; q < a.dim; ++q) m.at(p, q) = a.action[i].at(p, q);
    for (int p = 0; p < b.dim; ++p)
      for (int q = 0; q < b.dim; ++q) m.at(a.dim + p, a.dim + q) = b.action[i].at(p, q);
    s.action.push_back(m);
  }
  return s;
}

Cochain ce_apply(const LieAlgebra& src, const Representation& coef, const Cochain& w) {
  if (w.src_dim() != src.dim || w.val_dim() != coef.dim)
    throw std::invalid_argument("cochain shape does not match the complex");
  int k = w.degree();
  Cochain out(k + 1, src.dim, coef.dim);
  auto tuples = increasing_tuples(src.dim, k + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const std::vector<int>& u = tuples[t];
    QVec acc(coef.dim, Rat(0));
    for (int a = 0; a <= k; ++a) {
      std::vector<int> rest;
      rest.reserve(k);
      for (int x = 0; x <= k; ++x)
        if (x != a) rest.push_back(u[x]);
      QVec term = coef.apply(u[a], w.eval(rest));
      if ((a % 2) == 0)
        acc += term;
      else
        acc -= term;
    }
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        std::vector<int> rest;
        rest.reserve(k - 1);
        for (int x = 0; x <= k; ++x)
          if (x != a && x != b) rest.push_back(u[x]);
        QVec term = w.eval_front(src.bracket_of(u[a], u[b]), rest);
        if (((a + b) % 2) == 0)
          acc += term;
        else
          acc -= term;
      }
    out.value_at(t) = acc;
  }
  return out;
}

static QMatrix ce_matrix_impl(const LieAlgebra& src, const Representation& coef, int k,
                              bool parallel) {
  std::size_t cols = binom(src.dim, k) * coef.dim;
  std::size_t rows = binom(src.dim, k + 1) * coef.dim;
  auto column = [&](std::size_t j) {
    Cochain basis =
        Cochain::basis_element(k, src.dim, coef.dim, j / coef.dim, static_cast<int>(j % coef.dim));
    return ce_apply(src, coef, basis).flatten();
  };
  return parallel ? lin::matrix_from_columns(rows, cols, column)
                  : lin::matrix_from_columns_serial(rows, cols, column);
}

QMatrix ce_matrix(const LieAlgebra& src, const Representation& coef, int k) {
  return ce_matrix_impl(src, coef, k, true);
}

QMatrix ce_matrix_serial(const LieAlgebra& src, const Representation& coef, int k) {
  return ce_matrix_impl(src, coef, k, false);
}

}  // namespace rbx::lie
