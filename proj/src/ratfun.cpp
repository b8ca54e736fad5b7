#include "latticemaps/ratfun.hpp"

#include <stdexcept>

namespace latticemaps {

RatFun::RatFun(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero-denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  Poly n = Poly::divmod(num, g).first;
  Poly d = Poly::divmod(den, g).first;
  // Make the denominator monic; the scale moves into the numerator.
  Rat lead = d.leading();
  num_ = n.scaled(lead.inverse());
  den_ = d.scaled(lead.inverse());
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("zero-denominator");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("zero-denominator");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
  if (e == 0) return RatFun(Rat(1));
  RatFun base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  RatFun acc(Rat(1));
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval<Rat>(x);
  if (d.is_zero()) throw std::domain_error("zero-denominator");
  return num_.eval<Rat>(x) / d;
}

RatFun RatFun::substitute(const RatFun& g) const {
  RatFun n = num_.eval<RatFun>(g);
  RatFun d = den_.eval<RatFun>(g);
  if (d.is_zero()) throw std::domain_error("zero-denominator");
  return n / d;
}

std::string RatFun::to_string() const {
  if (den_ == Poly(Rat(1))) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::vector<Rat> clear_known_denominator(
    const RatFun& f, const std::vector<std::pair<Poly, int>>& factors) {
  Poly product(Rat(1));
  for (const auto& [factor, mult] : factors) {
    for (int k = 0; k < mult; ++k) product = product * factor;
  }
  auto [quot, rem] = Poly::divmod(product, f.den());
  if (!rem.is_zero()) throw std::runtime_error("denominator-mismatch");
  Poly cleared = f.num() * quot;
  if (cleared.is_zero()) return {Rat(0)};
  return cleared.coeffs();
}

}  // namespace latticemaps
