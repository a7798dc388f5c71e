#include "rbx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rbx::lin {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

QVec basis_vec(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("basis vector index out of range");
  QVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec operator*(const Rat& s, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

QVec& operator+=(QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVec& operator-=(QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace rbx::lin
