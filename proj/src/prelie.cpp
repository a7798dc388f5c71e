#include "rbx/prelie.hpp"

#include <stdexcept>

#include "rbx/assemble.hpp"
#include "rbx/combinatorics.hpp"
#include "rbx/rbcx.hpp"

namespace rbx::prelie {

using lin::basis_vec;
using lin::binom;
using lin::block_splits;
using lin::BlockSplit;
using lin::increasing_tuples;
using lin::middle_splits;
using lin::sort_with_sign;
using lin::tuple_rank;
using lin::operator+;
using lin::operator-;
using lin::operator+=;
using lin::operator-=;
using lin::operator*;

const QVec& PreLieAlgebra::product_of(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::invalid_argument("basis index out of range");
  return product[i][j];
}

QVec PreLieAlgebra::product_vec(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("vector size does not match algebra dimension");
  QVec out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      out += (x[i] * y[j]) * product[i][j];
    }
  }
  return out;
}

QMatrix PreLieAlgebra::left_mult(int i) const {
  QMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int c = 0; c < dim; ++c) m.at(c, j) = product_of(i, j)[c];
  return m;
}

QMatrix PreLieAlgebra::right_mult(int i) const {
  QMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int c = 0; c < dim; ++c) m.at(c, j) = product_of(j, i)[c];
  return m;
}

LieAlgebra PreLieAlgebra::sub_adjacent() const {
  LieAlgebra g = LieAlgebra::abelian(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g.bracket[i][j] = product_of(i, j) - product_of(j, i);
  return g;
}

static void check_prelie_shape(const PreLieAlgebra& p) {
  if (p.dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  if (static_cast<int>(p.product.size()) != p.dim)
    throw std::invalid_argument("product table has wrong size");
  for (const auto& row : p.product) {
    if (static_cast<int>(row.size()) != p.dim)
      throw std::invalid_argument("product table has wrong size");
    for (const QVec& v : row)
      if (static_cast<int>(v.size()) != p.dim)
        throw std::invalid_argument("product table has wrong size");
  }
}

ValidationReport validate_prelie(const PreLieAlgebra& p) {
  check_prelie_shape(p);
  ValidationReport rep;
  for (int i = 0; i < p.dim; ++i)
    for (int j = i + 1; j < p.dim; ++j)
      for (int k = 0; k < p.dim; ++k) {
        QVec aijk = p.product_vec(basis_vec(p.dim, i), p.product_of(j, k)) -
                    p.product_vec(p.product_of(i, j), basis_vec(p.dim, k));
        QVec ajik = p.product_vec(basis_vec(p.dim, j), p.product_of(i, k)) -
                    p.product_vec(p.product_of(j, i), basis_vec(p.dim, k));
        if (!(aijk == ajik)) {
          rep.ok = false;
          rep.violations.push_back("associator asymmetric on basis triple (" +
                                   std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
        }
      }
  return rep;
}

Multiderivation::Multiderivation(int degree, int dim) : degree_(degree), dim_(dim) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  tuple_count_ = binom(dim, degree);
  values_.assign(tuple_count_ * dim, QVec(dim, Rat(0)));
}

Multiderivation Multiderivation::basis_element(int degree, int dim, std::size_t tuple_index,
                                               int last, int component) {
  Multiderivation d(degree, dim);
  d.value_at(tuple_index, last)[component] = 1;
  return d;
}

QVec& Multiderivation::value_at(std::size_t tuple_index, int last) {
  if (tuple_index >= tuple_count_ || last < 0 || last >= dim_)
    throw std::invalid_argument("multiderivation slot out of range");
  return values_[tuple_index * dim_ + last];
}

const QVec& Multiderivation::value_at(std::size_t tuple_index, int last) const {
  if (tuple_index >= tuple_count_ || last < 0 || last >= dim_)
    throw std::invalid_argument("multiderivation slot out of range");
  return values_[tuple_index * dim_ + last];
}

QVec Multiderivation::eval(std::vector<int> front, int last) const {
  if (static_cast<int>(front.size()) != degree_)
    throw std::invalid_argument("wrong number of alternating arguments");
  if (last < 0 || last >= dim_) throw std::invalid_argument("free index out of range");
  for (int i : front)
    if (i < 0 || i >= dim_) throw std::invalid_argument("alternating index out of range");
  int sign = sort_with_sign(front);
  if (sign == 0) return QVec(dim_, Rat(0));
  const QVec& v = values_[tuple_rank(front, dim_) * dim_ + last];
  if (sign == 1) return v;
  QVec out(dim_);
  for (int c = 0; c < dim_; ++c) out[c] = -v[c];
  return out;
}

QVec Multiderivation::eval_front(const QVec& head, const std::vector<int>& rest,
                                 int last) const {
  if (degree_ < 1) throw std::invalid_argument("no alternating slot to fill");
  if (static_cast<int>(head.size()) != dim_)
    throw std::invalid_argument("head vector has wrong size");
  QVec out(dim_, Rat(0));
  std::vector<int> front(degree_);
  for (std::size_t x = 0; x < rest.size(); ++x) front[x + 1] = rest[x];
  for (int c = 0; c < dim_; ++c) {
    if (head[c] == 0) continue;
    front[0] = c;
    out += head[c] * eval(front, last);
  }
  return out;
}

QVec Multiderivation::eval_last(const std::vector<int>& front, const QVec& tail) const {
  if (static_cast<int>(tail.size()) != dim_)
    throw std::invalid_argument("tail vector has wrong size");
  QVec out(dim_, Rat(0));
  for (int c = 0; c < dim_; ++c) {
    if (tail[c] == 0) continue;
    out += tail[c] * eval(front, c);
  }
  return out;
}

QVec Multiderivation::flatten() const {
  QVec flat(flat_dim());
  for (std::size_t s = 0; s < values_.size(); ++s)
    for (int c = 0; c < dim_; ++c) flat[s * dim_ + c] = values_[s][c];
  return flat;
}

Multiderivation Multiderivation::unflatten(int degree, int dim, const QVec& flat) {
  Multiderivation d(degree, dim);
  if (flat.size() != d.flat_dim()) throw std::invalid_argument("flat vector has wrong size");
  for (std::size_t s = 0; s < d.values_.size(); ++s)
    for (int c = 0; c < dim; ++c) d.values_[s][c] = flat[s * dim + c];
  return d;
}

static void check_same_shape(const Multiderivation& a, const Multiderivation& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim())
    throw std::invalid_argument("multiderivation shapes differ");
}

Multiderivation Multiderivation::operator+(const Multiderivation& other) const {
  check_same_shape(*this, other);
  Multiderivation out = *this;
  for (std::size_t s = 0; s < values_.size(); ++s) out.values_[s] += other.values_[s];
  return out;
}

Multiderivation Multiderivation::operator-(const Multiderivation& other) const {
  check_same_shape(*this, other);
  Multiderivation out = *this;
  for (std::size_t s = 0; s < values_.size(); ++s) out.values_[s] -= other.values_[s];
  return out;
}

Multiderivation Multiderivation::scaled(const Rat& s) const {
  Multiderivation out = *this;
  for (auto& v : out.values_) v = s * v;
  return out;
}

bool Multiderivation::operator==(const Multiderivation& other) const {
  return degree_ == other.degree_ && dim_ == other.dim_ && values_ == other.values_;
}

bool Multiderivation::is_zero() const {
  for (const QVec& v : values_)
    if (!lin::is_zero(v)) return false;
  return true;
}

Multiderivation mn_compose(const Multiderivation& d1, const Multiderivation& d2) {
  if (d1.dim() != d2.dim()) throw std::invalid_argument("multiderivation spaces differ");
  const int m = d1.degree();
  const int n = d2.degree();
  const int dim = d1.dim();
  const bool even_mn = ((m * n) % 2) == 0;

  Multiderivation out(m + n, dim);
  auto tuples = increasing_tuples(dim, m + n);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::vector<int>& u = tuples[ti];
    for (int t = 0; t < dim; ++t) {
      QVec acc(dim, Rat(0));

      /* d1(d2(block, single), rest, t) over the (n,1,m-1) unshuffles */
      if (m >= 1) {
        for (const BlockSplit& s : middle_splits(m + n, n)) {
          std::vector<int> inner_front(n);
          for (int x = 0; x < n; ++x) inner_front[x] = u[s.first[x]];
          QVec inner = d2.eval(inner_front, u[s.rest[0]]);
          if (lin::is_zero(inner)) continue;
          std::vector<int> rest(s.rest.size() - 1);
          for (std::size_t x = 1; x < s.rest.size(); ++x) rest[x - 1] = u[s.rest[x]];
          QVec term = d1.eval_front(inner, rest, t);
          if (s.sign == 1)
            acc += term;
          else
            acc -= term;
        }
      }

      /* (-1)^{mn} d1(block, d2(rest, t)) over the (m,n) unshuffles */
      for (const BlockSplit& s : block_splits(m + n, m)) {
        std::vector<int> outer_front(m);
        for (int x = 0; x < m; ++x) outer_front[x] = u[s.first[x]];
        std::vector<int> inner_front(n);
        for (int x = 0; x < n; ++x) inner_front[x] = u[s.rest[x]];
        QVec inner = d2.eval(inner_front, t);
        if (lin::is_zero(inner)) continue;
        QVec term = d1.eval_last(outer_front, inner);
        bool plus = (s.sign == 1) == even_mn;
        if (plus)
          acc += term;
        else
          acc -= term;
      }

      out.value_at(ti, t) = acc;
    }
  }
  return out;
}

Multiderivation mn_bracket(const Multiderivation& d1, const Multiderivation& d2) {
  const bool even_mn = ((d1.degree() * d2.degree()) % 2) == 0;
  Multiderivation swapped = mn_compose(d2, d1);
  if (!even_mn) swapped = swapped.scaled(-1);
  return mn_compose(d1, d2) - swapped;
}

Multiderivation product_derivation(const PreLieAlgebra& p) {
  check_prelie_shape(p);
  Multiderivation d(1, p.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < p.dim; ++j) d.value_at(i, j) = p.product_of(i, j);
  return d;
}

Multiderivation ddef_apply(const PreLieAlgebra& p, const Multiderivation& d) {
  check_prelie_shape(p);
  if (d.dim() != p.dim) throw std::invalid_argument("multiderivation space differs");
  const int n = d.degree() + 1;
  const int dim = p.dim;

  Multiderivation out(n, dim);
  auto tuples = increasing_tuples(dim, n);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::vector<int>& u = tuples[ti];
    for (int t = 0; t < dim; ++t) {
      QVec acc(dim, Rat(0));

      for (int a = 0; a < n; ++a) {
        std::vector<int> rest;
        for (int x = 0; x < n; ++x)
          if (x != a) rest.push_back(u[x]);
        bool plus = (a % 2) == 0;

        QVec t1 = p.product_vec(basis_vec(dim, u[a]), d.eval(rest, t));
        QVec t2 = p.product_vec(d.eval(rest, u[a]), basis_vec(dim, t));
        QVec t3 = d.eval_last(rest, p.product_of(u[a], t));
        QVec term = t1 + t2 - t3;
        if (plus)
          acc += term;
        else
          acc -= term;
      }

      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          QVec head = p.product_of(u[a], u[b]) - p.product_of(u[b], u[a]);
          std::vector<int> rest;
          for (int x = 0; x < n; ++x)
            if (x != a && x != b) rest.push_back(u[x]);
          QVec term = d.eval_front(head, rest, t);
          if (((a + b) % 2) == 0)
            acc += term;
          else
            acc -= term;
        }

      out.value_at(ti, t) = acc;
    }
  }
  return out;
}

Multiderivation ddef_apply_bracket(const PreLieAlgebra& p, const Multiderivation& d) {
  Multiderivation br = mn_bracket(product_derivation(p), d);
  return (d.degree() % 2) == 0 ? br : br.scaled(-1);
}

static QMatrix ddef_matrix_impl(const PreLieAlgebra& p, int n, bool parallel) {
  check_prelie_shape(p);
  if (n < 1) throw std::invalid_argument("differential degree must be at least 1");
  if (!validate_prelie(p).ok)
    throw std::invalid_argument("product is not left-symmetric");
  const int dim = p.dim;
  Multiderivation domain_probe(n - 1, dim);
  Multiderivation range_probe(n, dim);
  const std::size_t rows = range_probe.flat_dim();
  const std::size_t cols = domain_probe.flat_dim();

  lin::ColumnFn col = [&](std::size_t j) {
    std::size_t ti = j / (dim * dim);
    int rem = static_cast<int>(j % (dim * dim));
    Multiderivation b =
        Multiderivation::basis_element(n - 1, dim, ti, rem / dim, rem % dim);
    return ddef_apply(p, b).flatten();
  };
  return parallel ? lin::matrix_from_columns(rows, cols, col)
                  : lin::matrix_from_columns_serial(rows, cols, col);
}

QMatrix ddef_matrix(const PreLieAlgebra& p, int n) { return ddef_matrix_impl(p, n, true); }

QMatrix ddef_matrix_serial(const PreLieAlgebra& p, int n) {
  return ddef_matrix_impl(p, n, false);
}

Cohomology def_cohomology(const PreLieAlgebra& p, int k) {
  if (k < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
  QMatrix d_out = ddef_matrix(p, k + 1);
  QMatrix d_in = k >= 1 ? ddef_matrix(p, k)
                        : QMatrix(Multiderivation(0, p.dim).flat_dim(), 0);
  return lin::cohomology(d_out, d_in);
}

Multiderivation phi_map(const LieRepPair& pair, const Cochain& c) {
  if (c.src_dim() != pair.rep.dim || c.val_dim() != pair.algebra.dim)
    throw std::invalid_argument("cochain does not live in C^*(E,A)");
  Multiderivation out(c.degree(), pair.rep.dim);
  for (std::size_t ti = 0; ti < c.tuple_count(); ++ti) {
    QMatrix m = pair.rep.of_vec(c.value_at(ti));
    for (int j = 0; j < pair.rep.dim; ++j) out.value_at(ti, j) = m.column(j);
  }
  return out;
}

PreLieAlgebra induced_prelie(const LieRepPair& pair, const QMatrix& t) {
  if (!rbcx::is_relative_rb(pair, t))
    throw std::invalid_argument("operator does not satisfy the Rota-Baxter identity");
  PreLieAlgebra p;
  p.dim = pair.rep.dim;
  p.product.assign(p.dim, std::vector<QVec>(p.dim));
  for (int i = 0; i < p.dim; ++i) {
    QMatrix m = pair.rep.of_vec(t.column(i));
    for (int j = 0; j < p.dim; ++j) p.product[i][j] = m.column(j);
  }
  return p;
}

}  // namespace rbx::prelie
