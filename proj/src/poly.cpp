#include "rbx/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rbx::poly {

Poly::Poly(int vars) : vars_(vars) {
  if (vars < 0) throw std::invalid_argument("negative variable count");
}

Poly Poly::constant(int vars, const Rat& c) {
  Poly p(vars);
  p.add_term(std::vector<int>(vars, 0), c);
  return p;
}

Poly Poly::variable(int vars, int index) {
  if (index < 0 || index >= vars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> exps(vars, 0);
  exps[index] = 1;
  Poly p(vars);
  p.add_term(exps, Rat(1));
  return p;
}

Poly Poly::monomial(int vars, const std::vector<int>& exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != vars)
    throw std::invalid_argument("exponent tuple length does not match variable count");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Poly p(vars);
  p.add_term(exps, c);
  return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  out += other;
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  Poly out = *this;
  out -= other;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (vars_ != other.vars_)
    throw std::invalid_argument("polynomials over different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (vars_ != other.vars_)
    throw std::invalid_argument("polynomials over different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("polynomials over different variable counts");
  Poly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<int> e(vars_);
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Rat& s) const {
  Poly out(vars_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, s * c);
  return out;
}

bool Poly::operator==(const Poly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

Poly Poly::derivative(int index) const {
  if (index < 0 || index >= vars_)
    throw std::invalid_argument("variable index out of range");
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    std::vector<int> d = e;
    --d[index];
    out.add_term(d, c * Rat(e[index]));
  }
  return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < vars_; ++i)
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    acc += term;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;

    std::string factors;
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += lin::rat_string(a);
    } else if (a == 1) {
      out += factors;
    } else {
      out += lin::rat_string(a) + "*" + factors;
    }
  }
  return out;
}

namespace {

/* Single-pass tokenizer plus term folder for the polynomial grammar. */
class Parser {
 public:
  Parser(const std::string& text, int vars) : text_(text), vars_(vars) {}

  Poly run() {
    Poly out(vars_);
    skip_space();
    if (at_end()) throw std::invalid_argument("empty polynomial literal");
    while (!at_end()) {
      int sign = 1;
      while (peek() == '+' || peek() == '-') {
        if (take() == '-') sign = -sign;
        skip_space();
        if (at_end()) throw std::invalid_argument("dangling sign in polynomial literal");
      }
      out += term().scaled(Rat(sign));
      skip_space();
    }
    return out;
  }

 private:
  const std::string& text_;
  int vars_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw std::invalid_argument("expected a number in polynomial literal");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (take() - '0');
    return v;
  }

  /* One factor: a rational literal or x<i>[^<e>]. */
  Poly factor() {
    if (at_end()) throw std::invalid_argument("unexpected end of polynomial literal");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long num = integer();
      long den = 1;
      skip_space();
      if (peek() == '/') {
        take();
        skip_space();
        den = integer();
        if (den == 0) throw std::invalid_argument("zero denominator in polynomial literal");
      }
      return Poly::constant(vars_, lin::rat(num, den));
    }
    if (peek() == 'x') {
      take();
      long index = integer();
      if (index < 1 || index > vars_)
        throw std::invalid_argument("variable x" + std::to_string(index) +
                                    " outside x1..x" + std::to_string(vars_));
      long power = 1;
      skip_space();
      if (peek() == '^') {
        take();
        skip_space();
        power = integer();
      }
      std::vector<int> exps(vars_, 0);
      exps[static_cast<int>(index) - 1] = static_cast<int>(power);
      return Poly::monomial(vars_, exps, Rat(1));
    }
    throw std::invalid_argument(std::string("unexpected character '") + peek() +
                                "' in polynomial literal");
  }

  bool starts_factor() const {
    return std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'x';
  }

  Poly term() {
    Poly prod = factor();
    skip_space();
    while (!at_end()) {
      if (peek() == '*') {
        take();
        skip_space();
        prod = prod * factor();
        skip_space();
      } else if (starts_factor()) {
        prod = prod * factor();
        skip_space();
      } else {
        break;
      }
    }
    return prod;
  }
};

}  // namespace

Poly Poly::parse(const std::string& text, int vars) {
  return Parser(text, vars).run();
}

PolyVecField PolyVecField::zero(int base_dim) {
  PolyVecField x;
  x.components.assign(base_dim, Poly(base_dim));
  return x;
}

Poly PolyVecField::apply(const Poly& h) const {
  Poly out(h.vars());
  for (int i = 0; i < base_dim(); ++i) out += components[i] * h.derivative(i);
  return out;
}

static void check_same_base(const PolyVecField& a, const PolyVecField& b) {
  if (a.base_dim() != b.base_dim())
    throw std::invalid_argument("vector fields over different base dimensions");
}

PolyVecField PolyVecField::operator+(const PolyVecField& other) const {
  check_same_base(*this, other);
  PolyVecField out = *this;
  for (int i = 0; i < base_dim(); ++i) out.components[i] += other.components[i];
  return out;
}

PolyVecField PolyVecField::operator-(const PolyVecField& other) const {
  check_same_base(*this, other);
  PolyVecField out = *this;
  for (int i = 0; i < base_dim(); ++i) out.components[i] -= other.components[i];
  return out;
}

PolyVecField PolyVecField::scaled(const Rat& s) const {
  PolyVecField out = *this;
  for (Poly& c : out.components) c = c.scaled(s);
  return out;
}

PolyVecField PolyVecField::multiplied(const Poly& h) const {
  PolyVecField out = *this;
  for (Poly& c : out.components) c = c * h;
  return out;
}

bool PolyVecField::operator==(const PolyVecField& other) const {
  return components == other.components;
}

bool PolyVecField::is_zero() const {
  for (const Poly& c : components)
    if (!c.is_zero()) return false;
  return true;
}

PolyVecField poly_vf_bracket(const PolyVecField& x, const PolyVecField& y) {
  check_same_base(x, y);
  PolyVecField out = PolyVecField::zero(x.base_dim());
  for (int i = 0; i < x.base_dim(); ++i) {
    out.components[i] = x.apply(y.components[i]) - y.apply(x.components[i]);
  }
  return out;
}

}  // namespace rbx::poly
