#include "latticemaps/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace latticemaps {

Poly Poly::monomial(const Rat& coeff, std::size_t deg) {
  if (coeff.is_zero()) return Poly();
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = coeff;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rat> c;
  c.reserve(c_.size());
  for (const Rat& x : c_) c.push_back(-x);
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
  if (s.is_zero()) return Poly();
  std::vector<Rat> c;
  c.reserve(c_.size());
  for (const Rat& x : c_) c.push_back(x * s);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("zero-denominator");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;  // degree of the divisor
  std::vector<Rat> quot(rem.size() - db, Rat(0));
  const Rat lead_inv = b.leading().inverse();
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    Rat q = rem[shift + db] * lead_inv;
    if (!q.is_zero()) {
      quot[shift] = q;
      for (std::size_t j = 0; j <= db; ++j) {
        rem[shift + j] -= q * b.c_[j];
      }
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  // Euclid with monic normalization each round to keep coefficients tame.
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a.is_zero() ? Poly() : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return scaled(leading().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly acc(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].to_string();
    if (i >= 1) out += "*L";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace latticemaps
