#include "rbx/cochain.hpp"

#include <stdexcept>

namespace rbx::lie {

using lin::binom;
using lin::sort_with_sign;
using lin::tuple_rank;
using lin::operator+=;
using lin::operator-=;

Cochain::Cochain(int degree, int src_dim, int val_dim)
    : degree_(degree), src_dim_(src_dim), val_dim_(val_dim) {
  if (degree < 0 || src_dim < 0 || val_dim < 0)
    throw std::invalid_argument("cochain with negative shape");
  values_.assign(binom(src_dim, degree), QVec(val_dim, Rat(0)));
}

Cochain Cochain::basis_element(int degree, int src_dim, int val_dim,
                               std::size_t tuple_index, int component) {
  Cochain c(degree, src_dim, val_dim);
  c.value_at(tuple_index)[component] = 1;
  return c;
}

QVec& Cochain::value_at(std::size_t tuple_index) {
  if (tuple_index >= values_.size()) throw std::out_of_range("cochain tuple index");
  return values_[tuple_index];
}

const QVec& Cochain::value_at(std::size_t tuple_index) const {
  if (tuple_index >= values_.size()) throw std::out_of_range("cochain tuple index");
  return values_[tuple_index];
}

QVec Cochain::eval(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("cochain evaluated at wrong arity");
  int sign = sort_with_sign(idx);
  if (sign == 0) return QVec(val_dim_, Rat(0));
  const QVec& v = values_[tuple_rank(idx, src_dim_)];
  if (sign == 1) return v;
  QVec out(val_dim_);
  for (int a = 0; a < val_dim_; ++a) out[a] = -v[a];
  return out;
}

QVec Cochain::eval_front(const QVec& head, const std::vector<int>& rest) const {
  if (static_cast<int>(head.size()) != src_dim_)
    throw std::invalid_argument("cochain front argument dimension mismatch");
  QVec out(val_dim_, Rat(0));
  std::vector<int> idx(rest.size() + 1);
  for (int i = 0; i < src_dim_; ++i) {
    if (head[i] == 0) continue;
    idx[0] = i;
    for (std::size_t t = 0; t < rest.size(); ++t) idx[t + 1] = rest[t];
    QVec term = eval(idx);
    for (int a = 0; a < val_dim_; ++a)
      if (term[a] != 0) out[a] += head[i] * term[a];
  }
  return out;
}

QVec Cochain::flatten() const {
  QVec out;
  out.reserve(flat_dim());
  for (const QVec& v : values_)
    for (const Rat& x : v) out.push_back(x);
  return out;
}

Cochain Cochain::unflatten(int degree, int src_dim, int val_dim, const QVec& flat) {
  Cochain c(degree, src_dim, val_dim);
  if (flat.size() != c.flat_dim())
    throw std::invalid_argument("cochain unflatten size mismatch");
  for (std::size_t t = 0; t < c.values_.size(); ++t)
    for (int a = 0; a < val_dim; ++a) c.values_[t][a] = flat[t * val_dim + a];
  return c;
}

Cochain Cochain::operator+(const Cochain& other) const {
  if (degree_ != other.degree_ || src_dim_ != other.src_dim_ || val_dim_ != other.val_dim_)
    throw std::invalid_argument("cochain shape mismatch");
  Cochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t) out.values_[t] += other.values_[t];
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const {
  if (degree_ != other.degree_ || src_dim_ != other.src_dim_ || val_dim_ != other.val_dim_)
    throw std::invalid_argument("cochain shape mismatch");
  Cochain out = *this;
  for (std::size_t t = 0; t < values_.size(); ++t) out.values_[t] -= other.values_[t];
  return out;
}

Cochain Cochain::scaled(const Rat& s) const {
  Cochain out = *this;
  for (QVec& v : out.values_)
    for (Rat& x : v) x *= s;
  return out;
}

bool Cochain::operator==(const Cochain& other) const {
  return degree_ == other.degree_ && src_dim_ == other.src_dim_ &&
         val_dim_ == other.val_dim_ && values_ == other.values_;
}

bool Cochain::is_zero() const {
  for (const QVec& v : values_)
    if (!lin::is_zero(v)) return false;
  return true;
}

}  // namespace rbx::lie
