#include "rbx/kv.hpp"

#include <stdexcept>
#include <utility>

#include "rbx/assemble.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/linalg.hpp"

namespace rbx::kv {

using lin::operator+;
using lin::operator-;
using lin::operator*;
using lin::operator+=;
using lin::operator-=;

void check_symmetric(const QMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("symmetric tensor must be square");
  if (!h.is_symmetric())
    throw std::invalid_argument("tensor is not symmetric");
}

static void check_tensor(const PreLieAlgebra& a, const QMatrix& h) {
  check_symmetric(h);
  if (static_cast<int>(h.rows()) != a.dim)
    throw std::invalid_argument("tensor dimension mismatch with the algebra");
}

static void require_valid(const PreLieAlgebra& a) {
  if (!prelie::validate_prelie(a).ok)
    throw std::invalid_argument("product table is not left-symmetric");
}

KVCochain::KVCochain(int degree, int dim) : degree_(degree), dim_(dim) {
  if (degree < 1) throw std::invalid_argument("cochain degree must be positive");
  if (dim < 0) throw std::invalid_argument("cochain dimension must be nonnegative");
  values_.assign(lin::binom(dim, degree - 1), QVec(dim, Rat(0)));
}

KVCochain KVCochain::basis_element(int degree, int dim, std::size_t tuple_index,
                                   int last) {
  KVCochain f(degree, dim);
  f.value_at(tuple_index)[last] = 1;
  return f;
}

QVec& KVCochain::value_at(std::size_t tuple_index) {
  return values_.at(tuple_index);
}

const QVec& KVCochain::value_at(std::size_t tuple_index) const {
  return values_.at(tuple_index);
}

Rat KVCochain::eval(std::vector<int> front, int last) const {
  if (static_cast<int>(front.size()) != degree_ - 1)
    throw std::invalid_argument("cochain evaluated at wrong arity");
  if (last < 0 || last >= dim_)
    throw std::invalid_argument("cochain last index out of range");
  int sign = lin::sort_with_sign(front);
  if (sign == 0) return Rat(0);
  const Rat& v = values_[lin::tuple_rank(front, dim_)][last];
  return sign == 1 ? v : -v;
}

Rat KVCochain::eval_front(const QVec& head, const std::vector<int>& rest,
                          int last) const {
  if (static_cast<int>(head.size()) != dim_)
    throw std::invalid_argument("cochain front argument dimension mismatch");
  Rat out(0);
  std::vector<int> front(rest.size() + 1);
  for (int i = 0; i < dim_; ++i) {
    if (head[i] == 0) continue;
    front[0] = i;
    for (std::size_t t = 0; t < rest.size(); ++t) front[t + 1] = rest[t];
    Rat term = eval(front, last);
    if (term != 0) out += head[i] * term;
  }
  return out;
}

Rat KVCochain::eval_last(const std::vector<int>& front, const QVec& tail) const {
  if (static_cast<int>(tail.size()) != dim_)
    throw std::invalid_argument("cochain last argument dimension mismatch");
  Rat out(0);
  for (int j = 0; j < dim_; ++j) {
    if (tail[j] == 0) continue;
    Rat term = eval(front, j);
    if (term != 0) out += tail[j] * term;
  }
  return out;
}

QVec KVCochain::flatten() const {
  QVec out;
  out.reserve(flat_dim());
  for (const QVec& v : values_)
    for (const Rat& x : v) out.push_back(x);
  return out;
}

KVCochain KVCochain::unflatten(int degree, int dim, const QVec& flat) {
  KVCochain f(degree, dim);
  if (flat.size() != f.flat_dim())
    throw std::invalid_argument("cochain unflatten size mismatch");
  for (std::size_t t = 0; t < f.values_.size(); ++t)
    for (int j = 0; j < dim; ++j) f.values_[t][j] = flat[t * dim + j];
  return f;
}

static void check_same_shape(const KVCochain& a, const KVCochain& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim())
    throw std::invalid_argument("cochain shape mismatch");
}

KVCochain KVCochain::operator+(const KVCochain& other) const {
  check_same_shape(*this, other);
  KVCochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t)
    out.values_[t] += other.values_[t];
  return out;
}

KVCochain KVCochain::operator-(const KVCochain& other) const {
  check_same_shape(*this, other);
  KVCochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t)
    out.values_[t] -= other.values_[t];
  return out;
}

KVCochain KVCochain::scaled(const Rat& s) const {
  KVCochain out = *this;
  for (QVec& v : out.values_)
    for (Rat& x : v) x *= s;
  return out;
}

bool KVCochain::operator==(const KVCochain& other) const {
  return degree_ == other.degree_ && dim_ == other.dim_ &&
         values_ == other.values_;
}

bool KVCochain::is_zero() const {
  for (const QVec& v : values_)
    if (!lin::is_zero(v)) return false;
  return true;
}

KVCochain tensor_cochain(const QMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("tensor cochain needs a square matrix");
  int n = static_cast<int>(h.rows());
  KVCochain f(2, n);
  for (int i = 0; i < n; ++i) f.value_at(i) = h.row(i);
  return f;
}

QMatrix cochain_tensor(const KVCochain& f) {
  if (f.degree() != 2)
    throw std::invalid_argument("only degree-2 cochains are tensors");
  std::vector<QVec> rows;
  rows.reserve(f.tuple_count());
  for (std::size_t t = 0; t < f.tuple_count(); ++t) rows.push_back(f.value_at(t));
  return QMatrix::from_rows(rows);
}

QMatrix dual_left_action(const PreLieAlgebra& a, const QVec& x) {
  if (static_cast<int>(x.size()) != a.dim)
    throw std::invalid_argument("vector dimension mismatch with the algebra");
  QMatrix m(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    m = m + a.left_mult(i).scaled(x[i]);
  }
  return m.transpose().scaled(Rat(-1));
}

QMatrix dual_right_action(const PreLieAlgebra& a, const QVec& x) {
  if (static_cast<int>(x.size()) != a.dim)
    throw std::invalid_argument("vector dimension mismatch with the algebra");
  QMatrix m(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    m = m + a.right_mult(i).scaled(x[i]);
  }
  return m.transpose().scaled(Rat(-1));
}

QMatrix dual_lie_action(const PreLieAlgebra& a, const QVec& x) {
  return dual_left_action(a, x) - dual_right_action(a, x);
}

static Representation left_dual_rep_unchecked(const PreLieAlgebra& a) {
  Representation r;
  r.dim = a.dim;
  r.action.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i)
    r.action.push_back(a.left_mult(i).transpose().scaled(Rat(-1)));
  return r;
}

static LieRepPair dual_pair_unchecked(const PreLieAlgebra& a) {
  return LieRepPair{a.sub_adjacent(), left_dual_rep_unchecked(a)};
}

Representation left_dual_rep(const PreLieAlgebra& a) {
  require_valid(a);
  return left_dual_rep_unchecked(a);
}

LieRepPair dual_pair(const PreLieAlgebra& a) {
  require_valid(a);
  return dual_pair_unchecked(a);
}

KVCochain hh_bracket(const PreLieAlgebra& a, const QMatrix& h) {
  check_tensor(a, h);
  const int n = a.dim;
  KVCochain out(3, n);
  auto pairs = lin::increasing_tuples(n, 2);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    int i = pairs[t][0], j = pairs[t][1];
    QVec si = h.column(i), sj = h.column(j);
    QVec comm = a.product_vec(si, sj) - a.product_vec(sj, si);
    for (int c = 0; c < n; ++c) {
      QVec sc = h.column(c);
      out.value_at(t)[c] = a.product_vec(sj, sc)[i] - a.product_vec(si, sc)[j]
                           - comm[c];
    }
  }
  return out;
}

bool is_kv(const PreLieAlgebra& a, const QMatrix& h) {
  return hh_bracket(a, h).is_zero();
}

QVec dual_bracket(const PreLieAlgebra& a, const QMatrix& h, const QVec& alpha,
                  const QVec& beta) {
  check_tensor(a, h);
  return dual_left_action(a, h.apply(alpha)).apply(beta)
         - dual_left_action(a, h.apply(beta)).apply(alpha);
}

PreLieAlgebra induced_dual_prelie(const PreLieAlgebra& a, const QMatrix& h) {
  require_valid(a);
  if (!is_kv(a, h))
    throw std::invalid_argument("tensor is not Koszul-Vinberg");
  PreLieAlgebra dual;
  dual.dim = a.dim;
  dual.product.assign(a.dim, std::vector<QVec>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    QMatrix lie = dual_lie_action(a, h.column(i));
    for (int j = 0; j < a.dim; ++j) {
      QMatrix right = dual_right_action(a, h.column(j));
      dual.product[i][j] = lie.column(j) - right.column(i);
    }
  }
  return dual;
}

PreLieAlgebra induced_dual_prelie_left(const PreLieAlgebra& a, const QMatrix& h) {
  require_valid(a);
  if (!is_kv(a, h))
    throw std::invalid_argument("tensor is not Koszul-Vinberg");
  PreLieAlgebra dual;
  dual.dim = a.dim;
  dual.product.assign(a.dim, std::vector<QVec>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    QMatrix left = dual_left_action(a, h.column(i));
    for (int j = 0; j < a.dim; ++j) dual.product[i][j] = left.column(j);
  }
  return dual;
}

Cochain psi_map(const KVCochain& f) {
  Cochain c(f.degree() - 1, f.dim(), f.dim());
  for (std::size_t t = 0; t < f.tuple_count(); ++t) c.value_at(t) = f.value_at(t);
  return c;
}

KVCochain upsilon_map(const Cochain& c) {
  if (c.src_dim() != c.val_dim())
    throw std::invalid_argument("only square cochains lift to the tensor complex");
  KVCochain f(c.degree() + 1, c.src_dim());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) f.value_at(t) = c.value_at(t);
  return f;
}

KVCochain kv_bracket(const PreLieAlgebra& a, const KVCochain& f,
                     const KVCochain& g) {
  if (f.dim() != a.dim || g.dim() != a.dim)
    throw std::invalid_argument("cochain dimension mismatch with the algebra");
  LieRepPair p = dual_pair_unchecked(a);
  return upsilon_map(rbcx::graded_bracket(p, psi_map(f), psi_map(g)));
}

KVCochain delta_dual_apply(const PreLieAlgebra& a, const QMatrix& h,
                           const KVCochain& f) {
  check_tensor(a, h);
  KVCochain out = kv_bracket(a, tensor_cochain(h), f);
  return (f.degree() - 1) % 2 == 0 ? out : out.scaled(Rat(-1));
}

static QMatrix delta_dual_matrix_impl(const PreLieAlgebra& a, const QMatrix& h,
                                      int k, bool parallel) {
  require_valid(a);
  check_tensor(a, h);
  if (k < 1) throw std::invalid_argument("cochain degree must be positive");
  if (!is_kv(a, h))
    throw std::invalid_argument("tensor is not Koszul-Vinberg");
  const int n = a.dim;
  std::size_t rows = lin::binom(n, k) * n;
  std::size_t cols = lin::binom(n, k - 1) * n;
  auto column = [&](std::size_t j) {
    KVCochain basis =
        KVCochain::basis_element(k, n, j / n, static_cast<int>(j % n));
    return delta_dual_apply(a, h, basis).flatten();
  };
  return parallel ? lin::matrix_from_columns(rows, cols, column)
                  : lin::matrix_from_columns_serial(rows, cols, column);
}

QMatrix delta_dual_matrix(const PreLieAlgebra& a, const QMatrix& h, int k) {
  return delta_dual_matrix_impl(a, h, k, true);
}

QMatrix delta_dual_matrix_serial(const PreLieAlgebra& a, const QMatrix& h,
                                 int k) {
  return delta_dual_matrix_impl(a, h, k, false);
}

KVCochain lsca_delta_apply(const PreLieAlgebra& a, const KVCochain& f) {
  if (f.dim() != a.dim)
    throw std::invalid_argument("cochain dimension mismatch with the algebra");
  const int n = f.degree();
  KVCochain out(n + 1, a.dim);
  auto tuples = lin::increasing_tuples(a.dim, n);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::vector<int>& u = tuples[ti];
    for (int t = 0; t < a.dim; ++t) {
      Rat acc(0);
      for (int i = 0; i < n; ++i) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int s = 0; s < n; ++s)
          if (s != i) rest.push_back(u[s]);
        Rat term = f.eval_last(rest, a.product_of(u[i], t));
        if (i % 2 == 0) acc -= term; else acc += term;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          QVec head = a.product_of(u[i], u[j]) - a.product_of(u[j], u[i]);
          if (lin::is_zero(head)) continue;
          std::vector<int> rest;
          rest.reserve(n - 2);
          for (int s = 0; s < n; ++s)
            if (s != i && s != j) rest.push_back(u[s]);
          Rat term = f.eval_front(head, rest, t);
          if ((i + j) % 2 == 0) acc += term; else acc -= term;
        }
      }
      out.value_at(ti)[t] = acc;
    }
  }
  return out;
}

QMatrix lsca_delta_matrix(const PreLieAlgebra& a, int n) {
  require_valid(a);
  if (n < 1) throw std::invalid_argument("cochain degree must be positive");
  const int dim = a.dim;
  std::size_t rows = lin::binom(dim, n) * dim;
  std::size_t cols = lin::binom(dim, n - 1) * dim;
  auto column = [&](std::size_t j) {
    KVCochain basis =
        KVCochain::basis_element(n, dim, j / dim, static_cast<int>(j % dim));
    return lsca_delta_apply(a, basis).flatten();
  };
  return lin::matrix_from_columns(rows, cols, column);
}

bool pseudo_hessian_check(const PreLieAlgebra& a, const QMatrix& b) {
  check_tensor(a, b);
  if (lin::rank(b) != b.rows()) return false;
  return lsca_delta_apply(a, tensor_cochain(b)).is_zero();
}

bool inverse_correspondence_check(const PreLieAlgebra& a, const QMatrix& h) {
  check_tensor(a, h);
  auto inv = lin::inverse(h);
  if (!inv.has_value())
    throw std::invalid_argument("inverse correspondence needs a nondegenerate tensor");
  return is_kv(a, h) == pseudo_hessian_check(a, *inv);
}

static QVec matrix_flat(const QMatrix& m) {
  QVec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

QMatrix restricted_basis(const PreLieAlgebra& a, const QMatrix& h, int k) {
  check_tensor(a, h);
  if (k < 1) throw std::invalid_argument("cochain degree must be positive");
  const int n = a.dim;
  if (k == 1) {
    std::vector<QVec> cols;
    cols.reserve(n);
    for (int c = 0; c < n; ++c) {
      QMatrix rd = dual_right_action(a, lin::basis_vec(n, c));
      cols.push_back(matrix_flat(rd.transpose() * h - h * rd));
    }
    return lin::kernel_basis(QMatrix::from_columns(cols));
  }
  if (k == 2) {
    std::vector<QVec> cols;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        QVec v(static_cast<std::size_t>(n) * n, Rat(0));
        v[static_cast<std::size_t>(i) * n + j] = 1;
        v[static_cast<std::size_t>(j) * n + i] = 1;
        cols.push_back(std::move(v));
      }
    }
    return QMatrix::from_columns(cols);
  }
  std::size_t flat = lin::binom(n, k - 1) * n;
  if (k >= 4 || n < 3) return QMatrix::identity(flat);
  std::vector<QVec> rows;
  for (const auto& t : lin::increasing_tuples(n, 3)) {
    int x = t[0], y = t[1], z = t[2];
    QVec row(flat, Rat(0));
    row[lin::tuple_rank({x, y}, n) * n + z] = 1;
    row[lin::tuple_rank({x, z}, n) * n + y] = -1;
    row[lin::tuple_rank({y, z}, n) * n + x] = 1;
    rows.push_back(std::move(row));
  }
  return lin::kernel_basis(QMatrix::from_rows(rows));
}

/* Coordinates of the columns of m in the column basis s; the subcomplex
   property fails loudly rather than being patched over. */
static QMatrix restrict_map(const QMatrix& s, const QMatrix& m) {
  std::vector<QVec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto x = lin::solve_linear(s, m.column(j));
    if (!x.has_value())
      throw std::logic_error("coboundary leaves the restricted subcomplex");
    cols.push_back(*x);
  }
  QMatrix out = QMatrix::from_columns(cols);
  if (cols.empty()) out = QMatrix(s.cols(), 0);
  return out;
}

KVCohomologySummary kv_cohomology(const PreLieAlgebra& a, const QMatrix& h,
                                  int k, bool restricted) {
  require_valid(a);
  check_tensor(a, h);
  if (k < 1) throw std::invalid_argument("cochain degree must be positive");
  if (!is_kv(a, h))
    throw std::invalid_argument("tensor is not Koszul-Vinberg");
  const int n = a.dim;
  QMatrix d_out = delta_dual_matrix(a, h, k);
  QMatrix d_in = k >= 2 ? delta_dual_matrix(a, h, k - 1)
                        : QMatrix(lin::binom(n, 0) * n, 0);
  KVCohomologySummary out;
  if (!restricted) {
    lin::Cohomology c = lin::cohomology(d_out, d_in);
    out.dim = c.dim;
    for (const QVec& v : c.representatives)
      out.representatives.push_back(KVCochain::unflatten(k, n, v));
    return out;
  }
  QMatrix sk = restricted_basis(a, h, k);
  QMatrix sn = restricted_basis(a, h, k + 1);
  QMatrix m_out = restrict_map(sn, d_out * sk);
  QMatrix m_in(sk.cols(), 0);
  if (k >= 2) m_in = restrict_map(sk, d_in * restricted_basis(a, h, k - 1));
  lin::Cohomology c = lin::cohomology(m_out, m_in);
  out.dim = c.dim;
  for (const QVec& v : c.representatives)
    out.representatives.push_back(KVCochain::unflatten(k, n, sk.apply(v)));
  return out;
}

const QMatrix& KVDeformationSeries::coefficient(int i) const {
  if (i == 0) return base;
  return terms.at(i - 1);
}

deform::DeformationSeries sharp_series(const KVDeformationSeries& s) {
  return deform::DeformationSeries{s.base, s.terms};
}

static void check_kv_series(const PreLieAlgebra& a, const KVDeformationSeries& s) {
  check_tensor(a, s.base);
  for (const QMatrix& t : s.terms) check_tensor(a, t);
}

bool is_kv_deformation(const PreLieAlgebra& a, const KVDeformationSeries& s) {
  check_kv_series(a, s);
  return deform::is_deformation(dual_pair(a), sharp_series(s));
}

KVCochain kv_obstruction(const PreLieAlgebra& a, const KVDeformationSeries& s) {
  if (!is_kv_deformation(a, s))
    throw std::invalid_argument("obstruction of a series that is not a deformation");
  const int n = s.order();
  KVCochain theta(3, a.dim);
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (j < 1 || j > n) continue;
    theta = theta + kv_bracket(a, tensor_cochain(s.coefficient(i)),
                               tensor_cochain(s.coefficient(j)));
  }
  theta = theta.scaled(Rat(1, 2));
  for (const auto& t : lin::increasing_tuples(a.dim, 3)) {
    Rat cyc = theta.eval({t[0], t[1]}, t[2]) - theta.eval({t[0], t[2]}, t[1])
              + theta.eval({t[1], t[2]}, t[0]);
    if (cyc != 0)
      throw std::logic_error("obstruction cochain leaves the restricted subcomplex");
  }
  if (!delta_dual_apply(a, s.base, theta).is_zero())
    throw std::logic_error("obstruction cochain fails to be closed");
  return theta;
}

std::optional<QMatrix> kv_extend(const PreLieAlgebra& a,
                                 const KVDeformationSeries& s) {
  KVCochain theta = kv_obstruction(a, s);
  QMatrix d2 = delta_dual_matrix(a, s.base, 2);
  QMatrix s2 = restricted_basis(a, s.base, 2);
  auto y = lin::solve_linear(d2 * s2, theta.flatten());
  if (!y.has_value()) return std::nullopt;
  QMatrix next = cochain_tensor(KVCochain::unflatten(2, a.dim, s2.apply(*y)));
  KVDeformationSeries extended = s;
  extended.terms.push_back(next);
  if (!is_kv_deformation(a, extended))
    throw std::logic_error("extension fails the residual re-check");
  return next;
}

KVDeformationSeries kv_gauge_transform(const PreLieAlgebra& a,
                                       const KVDeformationSeries& s,
                                       const deform::GaugeSeries& x, int order) {
  check_kv_series(a, s);
  deform::DeformationSeries moved =
      deform::gauge_transform(dual_pair(a), sharp_series(s), x, order);
  KVDeformationSeries out;
  out.base = moved.base;
  for (const QMatrix& t : moved.terms) {
    if (!t.is_symmetric())
      throw std::invalid_argument("gauge does not preserve symmetric tensors");
    out.terms.push_back(t);
  }
  return out;
}

KVInfinitesimalClass kv_infinitesimal_class(const PreLieAlgebra& a,
                                            const QMatrix& h, const QMatrix& h1) {
  require_valid(a);
  check_tensor(a, h);
  check_tensor(a, h1);
  if (!is_kv(a, h))
    throw std::invalid_argument("tensor is not Koszul-Vinberg");
  KVInfinitesimalClass out;
  KVCochain c1 = tensor_cochain(h1);
  out.cocycle = delta_dual_apply(a, h, c1).is_zero();
  QMatrix image = delta_dual_matrix(a, h, 1) * restricted_basis(a, h, 1);
  out.coboundary = out.cocycle && lin::in_column_space(image, c1.flatten());
  lin::Rref image_rows = lin::rref(image.transpose());
  out.reduced = KVCochain::unflatten(
      2, a.dim, lin::reduce_mod_rows(image_rows, c1.flatten()));
  return out;
}

}  // namespace rbx::kv
