#include "rbx/deform.hpp"

#include <stdexcept>

#include "rbx/linalg.hpp"

namespace rbx::deform {

using lin::operator+=;
using lin::operator-=;
using rbcx::check_operator_shape;
using rbcx::dT_apply;
using rbcx::dT_matrix;
using rbcx::graded_bracket;
using rbcx::is_relative_rb;
using rbcx::operator_cochain;

const QMatrix& DeformationSeries::coefficient(int i) const {
  if (i == 0) return base;
  return terms.at(i - 1);
}

static void check_series(const LieRepPair& p, const DeformationSeries& s) {
  check_operator_shape(p, s.base);
  for (const QMatrix& t : s.terms) check_operator_shape(p, t);
}

std::vector<Cochain> order_residuals(const LieRepPair& p, const DeformationSeries& s) {
  check_series(p, s);
  const int ne = p.rep.dim;
  const int na = p.algebra.dim;
  std::vector<Cochain> out;
  auto tuples = lin::increasing_tuples(ne, 2);
  for (int k = 1; k <= s.order(); ++k) {
    Cochain r(2, ne, na);
    for (int i = 0; i <= k; ++i) {
      const QMatrix& ti = s.coefficient(i);
      const QMatrix& tj = s.coefficient(k - i);
      for (std::size_t tu = 0; tu < tuples.size(); ++tu) {
        int a = tuples[tu][0], b = tuples[tu][1];
        QVec term = p.algebra.bracket_vec(ti.column(a), tj.column(b));
        QVec inner = p.rep.of_vec(ti.column(a)).column(b);
        inner -= p.rep.of_vec(ti.column(b)).column(a);
        term -= tj.apply(inner);
        r.value_at(tu) += term;
      }
    }
    out.push_back(r);
  }
  return out;
}

bool is_deformation(const LieRepPair& p, const DeformationSeries& s) {
  if (!is_relative_rb(p, s.base)) return false;
  for (const Cochain& r : order_residuals(p, s))
    if (!r.is_zero()) return false;
  return true;
}

Cochain obstruction(const LieRepPair& p, const DeformationSeries& s) {
  if (!is_deformation(p, s))
    throw std::invalid_argument("obstruction of a series that is not an order-n deformation");
  const int n = s.order();
  Cochain theta(2, p.rep.dim, p.algebra.dim);
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (j < 1 || j > n) continue;
    theta = theta + graded_bracket(p, operator_cochain(p, s.coefficient(i)),
                                   operator_cochain(p, s.coefficient(j)));
  }
  theta = theta.scaled(Rat(1, 2));
  if (!dT_apply(p, s.base, theta).is_zero())
    throw std::logic_error("obstruction cochain fails to be closed");
  return theta;
}

std::optional<QMatrix> extend(const LieRepPair& p, const DeformationSeries& s) {
  Cochain theta = obstruction(p, s);
  QMatrix d1 = dT_matrix(p, s.base, 1);
  auto x = lin::solve_linear(d1, theta.flatten());
  if (!x.has_value()) return std::nullopt;
  QMatrix next = rbcx::cochain_operator(
      Cochain::unflatten(1, p.rep.dim, p.algebra.dim, *x));
  DeformationSeries extended = s;
  extended.terms.push_back(next);
  for (const Cochain& r : order_residuals(p, extended))
    if (!r.is_zero()) throw std::logic_error("extension fails the residual re-check");
  return next;
}

/* One application of ad_X = [[X, .]] to a coefficient list, collecting
   t-powers; X has no constant coefficient, so power k picks up blocks
   x_i against coefficient k-i for i >= 1. */
static std::vector<Cochain> ad_once(const LieRepPair& p, const std::vector<QVec>& x,
                                    const std::vector<Cochain>& c) {
  std::vector<Cochain> out(c.size(), Cochain(1, p.rep.dim, p.algebra.dim));
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 1; i <= x.size() && i <= k; ++i) {
      Cochain x0(0, p.rep.dim, p.algebra.dim);
      x0.value_at(0) = x[i - 1];
      out[k] = out[k] + graded_bracket(p, x0, c[k - i]);
    }
  }
  return out;
}

DeformationSeries gauge_transform(const LieRepPair& p, const DeformationSeries& s,
                                  const GaugeSeries& x, int order) {
  check_series(p, s);
  if (order < 0) throw std::invalid_argument("negative truncation order");
  for (const QVec& v : x.terms)
    if (static_cast<int>(v.size()) != p.algebra.dim)
      throw std::invalid_argument("gauge term is not an algebra vector");

  std::vector<Cochain> coeff(order + 1, Cochain(1, p.rep.dim, p.algebra.dim));
  for (int i = 0; i <= order; ++i)
    if (i <= s.order()) coeff[i] = operator_cochain(p, s.coefficient(i));

  std::vector<Cochain> acc = coeff;
  std::vector<Cochain> cur = coeff;
  Rat fact(1);
  for (int m = 1; m <= order; ++m) {
    cur = ad_once(p, x.terms, cur);
    fact *= m;
    bool all_zero = true;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (cur[k].is_zero()) continue;
      all_zero = false;
      acc[k] = acc[k] + cur[k].scaled(1 / fact);
    }
    if (all_zero) break;
  }

  DeformationSeries out;
  out.base = rbcx::cochain_operator(acc[0]);
  for (int i = 1; i <= order; ++i) out.terms.push_back(rbcx::cochain_operator(acc[i]));
  return out;
}

InfinitesimalClass infinitesimal_class(const LieRepPair& p, const QMatrix& t,
                                       const QMatrix& t1) {
  if (!is_relative_rb(p, t))
    throw std::invalid_argument("infinitesimal class relative to a non-Rota-Baxter base");
  check_operator_shape(p, t1);
  InfinitesimalClass out;
  Cochain c1 = operator_cochain(p, t1);
  out.cocycle = dT_apply(p, t, c1).is_zero();
  QMatrix d0 = dT_matrix(p, t, 0);
  out.coboundary = out.cocycle && lin::in_column_space(d0, c1.flatten());
  lin::Rref image_rows = lin::rref(d0.transpose());
  out.reduced = Cochain::unflatten(1, p.rep.dim, p.algebra.dim,
                                   lin::reduce_mod_rows(image_rows, c1.flatten()));
  return out;
}

}  // namespace rbx::deform
