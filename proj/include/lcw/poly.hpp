#pragma once
#include "lcw/rat.hpp"

namespace lcw {

// Dense univariate polynomial over Rat, coefficients lowest degree first,
// trailing zeros trimmed (zero polynomial = empty coefficient list).
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(RVec coeffs);
  static Poly1 constant(const Rat& c);
  static Poly1 x();

  const RVec& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero poly: -1
  bool is_zero() const { return c_.empty(); }
  Rat leading() const;

  Rat eval(const Rat& t) const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 scaled(const Rat& k) const;
  bool operator==(const Poly1& o) const { return c_ == o.c_; }

  // Euclidean division; remainder has degree < divisor degree.
  static void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r);
  static Poly1 gcd(Poly1 a, Poly1 b);

 private:
  RVec c_;
  void trim();
};

// num/den with gcd cancelled and den normalized to leading coefficient 1.
struct RatFunc {
  Poly1 num, den = Poly1::constant(1);

  RatFunc() = default;
  RatFunc(Poly1 n, Poly1 d);
  static RatFunc constant(const Rat& c);

  Rat eval(const Rat& t) const;  // throws on den(t) = 0
  bool is_constant(Rat* value = nullptr) const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

  std::string str() const;
};

}  // namespace lcw
