#include "lcw/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lcw {

Poly1::Poly1(RVec coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::constant(const Rat& c) { return Poly1(RVec{c}); }
Poly1 Poly1::x() { return Poly1(RVec{Rat(0), Rat(1)}); }

Rat Poly1::leading() const {
  if (c_.empty()) return Rat(0);
  return c_.back();
}

Rat Poly1::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  RVec out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly1(std::move(out));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  RVec out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  RVec out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Poly1(std::move(out));
}

Poly1 Poly1::scaled(const Rat& k) const {
  RVec out(c_);
  for (auto& v : out) v *= k;
  return Poly1(std::move(out));
}

void Poly1::divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r) {
  if (b.is_zero()) throw std::invalid_argument("poly division by zero");
  RVec rem(a.c_);
  RVec quot;
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 >= db) quot.assign(rem.size() - db, Rat(0));
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    if (rem[d] == 0) continue;
    Rat f = rem[d] / b.c_.back();
    quot[d - db] = f;
    for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * b.c_[j];
  }
  q = Poly1(std::move(quot));
  r = Poly1(std::move(rem));
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());
}

RatFunc::RatFunc(Poly1 n, Poly1 d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  Poly1 g = Poly1::gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    Poly1 q, r;
    Poly1::divmod(num, g, q, r);
    num = q;
    Poly1::divmod(den, g, q, r);
    den = q;
  }
  Rat lead = den.leading();
  num = num.scaled(Rat(1) / lead);
  den = den.scaled(Rat(1) / lead);
}

RatFunc RatFunc::constant(const Rat& c) { return RatFunc(Poly1::constant(c), Poly1::constant(1)); }

Rat RatFunc::eval(const Rat& t) const {
  Rat d = den.eval(t);
  if (d == 0) throw std::domain_error("rational function pole");
  return num.eval(t) / d;
}

bool RatFunc::is_constant(Rat* value) const {
  // Certified as a polynomial identity: num == c * den.
  if (num.is_zero()) {
    if (value) *value = 0;
    return true;
  }
  if (num.degree() != den.degree()) return false;
  Rat c = num.leading() / den.leading();
  if (!(num - den.scaled(c)).is_zero()) return false;
  if (value) *value = c;
  return true;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num * o.den + o.num * den, den * o.den);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num * o.den - o.num * den, den * o.den);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

static std::string poly_str(const Poly1& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rat& c = p.coeffs()[d];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = c > 0 ? c : Rat(-c);
    if (a != 1 || d == 0) os << rat_str(a);
    if (d >= 1) {
      if (a != 1) os << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

std::string RatFunc::str() const {
  Rat c;
  if (is_constant(&c)) return rat_str(c);
  return "(" + poly_str(num) + ") / (" + poly_str(den) + ")";
}

}  // namespace lcw
