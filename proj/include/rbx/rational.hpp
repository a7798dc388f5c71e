#ifndef RBX_RATIONAL_HPP
#define RBX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rbx::lin {

/* Exact rational scalar.  mpq_class keeps values in lowest terms with a
   positive denominator, which is the invariant everything downstream
   relies on for reproducible output. */
using Rat = mpq_class;

using QVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

/* Accepts "p/q" or a plain integer string.  Throws std::invalid_argument
   on malformed input or a zero denominator. */
Rat parse_rat(const std::string& text);

std::string rat_string(const Rat& r);

bool is_zero(const QVec& v);

QVec basis_vec(std::size_t n, std::size_t i);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& s, const QVec& v);
QVec& operator+=(QVec& a, const QVec& b);
QVec& operator-=(QVec& a, const QVec& b);

}  // namespace rbx::lin

#endif
