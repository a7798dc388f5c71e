#include "rbx/linalg.hpp"

#include <stdexcept>

namespace rbx::lin {

Rref rref(const QMatrix& m) {
  Rref out{m, {}};
  QMatrix& a = out.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    Rat inv = 1 / a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pivot_row, j);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

QMatrix kernel_basis(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  QMatrix out = QMatrix::from_columns(basis);
  if (basis.empty()) out = QMatrix(m.cols(), 0);
  return out;
}

std::optional<QVec> solve_linear(const QMatrix& m, const QVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  QMatrix rhs(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
  QMatrix aug = hconcat(m, rhs);
  Rref r = rref(aug);
  for (std::size_t c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  QVec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.mat.at(i, m.cols());
  return x;
}

bool in_column_space(const QMatrix& m, const QVec& v) {
  return solve_linear(m, v).has_value();
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Rref r = rref(hconcat(m, QMatrix::identity(n)));
  if (r.pivot_cols.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (r.pivot_cols[i] != i) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

QVec reduce_mod_rows(const Rref& rows, const QVec& v) {
  QVec out = v;
  for (std::size_t i = 0; i < rows.pivot_cols.size(); ++i) {
    std::size_t p = rows.pivot_cols[i];
    if (out[p] == 0) continue;
    Rat f = out[p];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * rows.mat.at(i, j);
  }
  return out;
}

Cohomology cohomology(const QMatrix& d_out, const QMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("cohomology: chain space dimension mismatch");
  if (d_in.cols() > 0 && !(d_out * d_in).is_zero())
    throw std::invalid_argument("cohomology: differentials do not compose to zero");

  QMatrix ker = kernel_basis(d_out);
  Rref image_rows = rref(d_in.transpose());

  std::size_t rk_in = image_rows.pivot_cols.size();
  Cohomology out;
  out.dim = (d_out.cols() - rank(d_out)) - rk_in;

  /* Reduce each kernel vector modulo the image, then keep the ones that
     extend the span, in order. */
  std::vector<QVec> kept_rows;
  std::vector<QVec> reduced_all;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    QVec red = reduce_mod_rows(image_rows, ker.column(j));
    if (is_zero(red)) continue;
    std::vector<QVec> trial = kept_rows;
    trial.push_back(red);
    if (rank(QMatrix::from_rows(trial)) > kept_rows.size()) {
      kept_rows.push_back(red);
      Rat lead(0);
      for (const Rat& x : red)
        if (x != 0) {
          lead = x;
          break;
        }
      QVec norm(red.size());
      for (std::size_t t = 0; t < red.size(); ++t) norm[t] = red[t] / lead;
      out.representatives.push_back(std::move(norm));
    }
  }
  if (out.representatives.size() != out.dim)
    throw std::logic_error("cohomology: representative count disagrees with dimension");
  return out;
}

}  // namespace rbx::lin
