#ifndef LATTICEMAPS_RATFUN_HPP
#define LATTICEMAPS_RATFUN_HPP

//---------------------------------------------------------------------------
// ratfun.hpp — reduced rational functions in the spectral parameter.
//
// Canonical form: gcd(num, den) = 1 and den monic, so equality is plain
// component comparison. Construction from an arbitrary num/den pair reduces;
// a zero denominator is the error "zero-denominator".
//---------------------------------------------------------------------------

#include <string>

#include "latticemaps/poly.hpp"
#include "latticemaps/rational.hpp"

namespace latticemaps {

class RatFun {
public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& constant) : num_(constant), den_(Rat(1)) {}
  RatFun(long constant) : RatFun(Rat(constant)) {}
  RatFun(const Poly& p) : num_(p), den_(Rat(1)) {}
  RatFun(const Poly& num, const Poly& den);  // reduces

  // The identity function  lambda.
  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value; only valid when is_constant().
  Rat constant_value() const { return num_.coeff(0); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;
  RatFun inverse() const;
  RatFun pow(long e) const;

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) {
    return !(a == b);
  }

  // Exact evaluation; a denominator root is the error "zero-denominator".
  Rat eval(const Rat& x) const;

  // Composition f(g): substitutes g for the variable (used for the
  // parameter involution acting on the spectral parameter).
  RatFun substitute(const RatFun& g) const;

  std::string to_string() const;

private:
  Poly num_;
  Poly den_;  // monic, nonzero
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

//---------------------------------------------------------------------------
// Multiplies f by the given product of linear factors (each with a
// multiplicity) and returns the coefficient list (lowest degree first) of
// the resulting polynomial. The factor product must be divisible by den(f);
// otherwise the error is "denominator-mismatch". A zero input yields {0}.
// These coefficients are the candidate invariants read off a monodromy
// trace once its structural denominator is cleared.
//---------------------------------------------------------------------------
std::vector<Rat> clear_known_denominator(
    const RatFun& f, const std::vector<std::pair<Poly, int>>& factors);

}  // namespace latticemaps

#endif  // LATTICEMAPS_RATFUN_HPP
