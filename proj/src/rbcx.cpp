#include "rbx/rbcx.hpp"

#include <stdexcept>

#include "rbx/assemble.hpp"
#include "rbx/linalg.hpp"

namespace rbx::rbcx {

using lin::basis_vec;
using lin::binom;
using lin::block_splits;
using lin::BlockSplit;
using lin::combinations;
using lin::increasing_tuples;
using lin::inversion_sign;
using lin::middle_splits;
using lin::operator+=;
using lin::operator-=;
using lin::operator*;

void check_operator_shape(const LieRepPair& p, const QMatrix& t) {
  if (static_cast<int>(t.rows()) != p.algebra.dim || static_cast<int>(t.cols()) != p.rep.dim)
    throw std::invalid_argument("operator matrix must be dim(A) x dim(E)");
}

Cochain operator_cochain(const LieRepPair& p, const QMatrix& t) {
  check_operator_shape(p, t);
  Cochain c(1, p.rep.dim, p.algebra.dim);
  for (int j = 0; j < p.rep.dim; ++j) c.value_at(j) = t.column(j);
  return c;
}

QMatrix cochain_operator(const Cochain& c) {
  if (c.degree() != 1) throw std::invalid_argument("only degree-1 cochains are operators");
  QMatrix t(c.val_dim(), c.src_dim());
  for (int j = 0; j < c.src_dim(); ++j)
    for (int a = 0; a < c.val_dim(); ++a) t.at(a, j) = c.value_at(j)[a];
  return t;
}

static void check_cochain_shape(const LieRepPair& p, const Cochain& c) {
  if (c.src_dim() != p.rep.dim || c.val_dim() != p.algebra.dim)
    throw std::invalid_argument("cochain does not live in C^*(E,A)");
}

Cochain graded_bracket(const LieRepPair& p, const Cochain& P, const Cochain& Q) {
  check_cochain_shape(p, P);
  check_cochain_shape(p, Q);
  const int dp = P.degree();
  const int dq = Q.degree();
  const int m = dp + dq;
  const int ne = p.rep.dim;
  const int na = p.algebra.dim;
  const bool even_pq = ((dp * dq) % 2) == 0;

  Cochain out(m, ne, na);
  auto tuples = increasing_tuples(ne, m);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::vector<int>& u = tuples[ti];
    QVec acc(na, Rat(0));

    /* P(rho(Q(block)) u_t, rest) over S(q,1,p-1). */
    if (dp >= 1) {
      for (const BlockSplit& s : middle_splits(m, dq)) {
        std::vector<int> qargs(dq);
        for (int x = 0; x < dq; ++x) qargs[x] = u[s.first[x]];
        QVec qval = Q.eval(qargs);
        if (lin::is_zero(qval)) continue;
        QVec head = p.rep.of_vec(qval).column(u[s.rest[0]]);
        std::vector<int> pr(s.rest.size() - 1);
        for (std::size_t x = 1; x < s.rest.size(); ++x) pr[x - 1] = u[s.rest[x]];
        QVec term = P.eval_front(head, pr);
        if (s.sign == 1)
          acc += term;
        else
          acc -= term;
      }
    }

    /* -(-1)^{pq} Q(rho(P(block)) u_t, rest) over S(p,1,q-1). */
    if (dq >= 1) {
      for (const BlockSplit& s : middle_splits(m, dp)) {
        std::vector<int> pargs(dp);
        for (int x = 0; x < dp; ++x) pargs[x] = u[s.first[x]];
        QVec pval = P.eval(pargs);
        if (lin::is_zero(pval)) continue;
        QVec head = p.rep.of_vec(pval).column(u[s.rest[0]]);
        std::vector<int> qr(s.rest.size() - 1);
        for (std::size_t x = 1; x < s.rest.size(); ++x) qr[x - 1] = u[s.rest[x]];
        QVec term = Q.eval_front(head, qr);
        bool plus = (s.sign == 1) != even_pq;
        if (plus)
          acc += term;
        else
          acc -= term;
      }
    }

    /* (-1)^{pq} [P(block), Q(rest)]_A over S(p,q). */
    for (const BlockSplit& s : block_splits(m, dp)) {
      std::vector<int> pargs(dp), qargs(dq);
      for (int x = 0; x < dp; ++x) pargs[x] = u[s.first[x]];
      for (int x = 0; x < dq; ++x) qargs[x] = u[s.rest[x]];
      QVec term = p.algebra.bracket_vec(P.eval(pargs), Q.eval(qargs));
      bool plus = (s.sign == 1) == even_pq;
      if (plus)
        acc += term;
      else
        acc -= term;
    }

    out.value_at(ti) = acc;
  }
  return out;
}

Cochain rb_defect(const LieRepPair& p, const QMatrix& t) {
  check_operator_shape(p, t);
  const int ne = p.rep.dim;
  Cochain out(2, ne, p.algebra.dim);
  auto tuples = increasing_tuples(ne, 2);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    int i = tuples[ti][0], j = tuples[ti][1];
    QVec tu = t.column(i), tv = t.column(j);
    QVec acc = t.apply(p.rep.of_vec(tu).column(j));
    acc -= t.apply(p.rep.of_vec(tv).column(i));
    acc -= p.algebra.bracket_vec(tu, tv);
    out.value_at(ti) = acc;
  }
  return out;
}

bool is_relative_rb(const LieRepPair& p, const QMatrix& t) { return rb_defect(p, t).is_zero(); }

LieAlgebra induced_lie(const LieRepPair& p, const QMatrix& t) {
  check_operator_shape(p, t);
  const int ne = p.rep.dim;
  LieAlgebra g = LieAlgebra::abelian(ne);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      QVec v = p.rep.of_vec(t.column(i)).column(j);
      v -= p.rep.of_vec(t.column(j)).column(i);
      g.bracket[i][j] = v;
    }
  return g;
}

Representation induced_rep(const LieRepPair& p, const QMatrix& t) {
  check_operator_shape(p, t);
  const int ne = p.rep.dim;
  const int na = p.algebra.dim;
  Representation r;
  r.dim = na;
  for (int i = 0; i < ne; ++i) {
    QMatrix m(na, na);
    for (int a = 0; a < na; ++a) {
      QVec col = p.algebra.bracket_vec(t.column(i), basis_vec(na, a));
      col += t.apply(p.rep.of_basis(a).column(i));
      for (int b = 0; b < na; ++b) m.at(b, a) = col[b];
    }
    r.action.push_back(m);
  }
  return r;
}

LieRepPair induced_pair(const LieRepPair& p, const QMatrix& t) {
  return {induced_lie(p, t), induced_rep(p, t)};
}

Cochain dT_apply(const LieRepPair& p, const QMatrix& t, const Cochain& P) {
  check_operator_shape(p, t);
  check_cochain_shape(p, P);
  const int k = P.degree();
  const int ne = p.rep.dim;
  Cochain out(k + 1, ne, p.algebra.dim);
  auto tuples = increasing_tuples(ne, k + 1);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::vector<int>& u = tuples[ti];
    QVec acc(p.algebra.dim, Rat(0));
    for (int a = 0; a <= k; ++a) {
      std::vector<int> rest;
      rest.reserve(k);
      for (int x = 0; x <= k; ++x)
        if (x != a) rest.push_back(u[x]);
      QVec pv = P.eval(rest);
      QVec term = p.algebra.bracket_vec(t.column(u[a]), pv);
      term += t.apply(p.rep.of_vec(pv).column(u[a]));
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
        QVec head = p.rep.of_vec(t.column(u[a])).column(u[b]);
        head -= p.rep.of_vec(t.column(u[b])).column(u[a]);
        QVec term = P.eval_front(head, rest);
        if (((a + b) % 2) == 0)
          acc += term;
        else
          acc -= term;
      }
    out.value_at(ti) = acc;
  }
  return out;
}

static QMatrix dT_matrix_impl(const LieRepPair& p, const QMatrix& t, int k, bool parallel) {
  check_operator_shape(p, t);
  const int ne = p.rep.dim;
  const int na = p.algebra.dim;
  std::size_t cols = binom(ne, k) * na;
  std::size_t rows = binom(ne, k + 1) * na;
  auto column = [&](std::size_t j) {
    Cochain basis = Cochain::basis_element(k, ne, na, j / na, static_cast<int>(j % na));
    return dT_apply(p, t, basis).flatten();
  };
  return parallel ? lin::matrix_from_columns(rows, cols, column)
                  : lin::matrix_from_columns_serial(rows, cols, column);
}

QMatrix dT_matrix(const LieRepPair& p, const QMatrix& t, int k) {
  return dT_matrix_impl(p, t, k, true);
}

QMatrix dT_matrix_serial(const LieRepPair& p, const QMatrix& t, int k) {
  return dT_matrix_impl(p, t, k, false);
}

CohomologySummary rb_cohomology(const LieRepPair& p, const QMatrix& t, int k) {
  if (!is_relative_rb(p, t))
    throw std::invalid_argument("cohomology requested for an operator that is not Rota-Baxter");
  if (k < 0) throw std::invalid_argument("negative cohomology degree");
  const int ne = p.rep.dim;
  const int na = p.algebra.dim;
  QMatrix d_out = dT_matrix(p, t, k);
  QMatrix d_in =
      k == 0 ? QMatrix(binom(ne, 0) * na, 0) : dT_matrix(p, t, k - 1);
  lin::Cohomology h = lin::cohomology(d_out, d_in);
  CohomologySummary out;
  out.dim = h.dim;
  for (const QVec& rep : h.representatives)
    out.representatives.push_back(Cochain::unflatten(k, ne, na, rep));
  return out;
}

}  // namespace rbx::rbcx
