#ifndef LATTICEMAPS_POLY_HPP
#define LATTICEMAPS_POLY_HPP

//---------------------------------------------------------------------------
// poly.hpp — univariate polynomials over Rat in the spectral parameter.
//
// Coefficients are stored lowest-degree first; the representation is kept
// normalized (no trailing zero coefficients; the zero polynomial is the
// empty list). Division, gcd, and evaluation are exact.
//---------------------------------------------------------------------------

#include <string>
#include <utility>
#include <vector>

#include "latticemaps/rational.hpp"

namespace latticemaps {

class Poly {
public:
  Poly() = default;
  Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }
  Poly(long constant) : Poly(Rat(constant)) {}
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  // The monomial  coeff * lambda^deg.
  static Poly monomial(const Rat& coeff, std::size_t deg);
  // The identity polynomial  lambda.
  static Poly variable() { return monomial(Rat(1), 1); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rat(0);
  }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rat& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient and remainder with remainder.degree() < b.degree().
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd (gcd of anything with 0 is the other argument made monic).
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;
  Poly pow(unsigned e) const;

  // Horner evaluation over any ring that supports +, * and construction
  // from Rat (Rat itself, RatFun, DualRat).
  template <class S>
  S eval(const S& x) const {
    S acc(Rat(0));
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + S(c_[i]);
    }
    return acc;
  }

  std::string to_string() const;  // human-readable, for diagnostics

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;  // lowest degree first
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace latticemaps

#endif  // LATTICEMAPS_POLY_HPP
