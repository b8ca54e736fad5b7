#ifndef LATTICEMAPS_RATIONAL_HPP
#define LATTICEMAPS_RATIONAL_HPP

//---------------------------------------------------------------------------
// rational.hpp — arbitrary-precision rational numbers.
//
// Thin RAII wrapper around GMP's mpq_t. Every value is kept canonical:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. All arithmetic is exact; there
// is no floating point anywhere in this library. Serialization is the plain
// "p/q" (or "p" when q = 1) string format used throughout the CLI reports.
//---------------------------------------------------------------------------

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace latticemaps {

class Rat {
public:
  //--- construction --------------------------------------------------------
  Rat() { mpq_init(q_); }

  Rat(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }

  Rat(int n) : Rat(static_cast<long>(n)) {}

  Rat(long n, long d) {
    if (d == 0) throw std::domain_error("zero-denominator");
    mpq_init(q_);
    mpz_set_si(mpq_numref(q_), n);
    mpz_set_si(mpq_denref(q_), d);
    mpq_canonicalize(q_);  // reduces and moves the sign to the numerator
  }

  // Parses "p", "p/q", optionally signed, base 10. Rejects anything else.
  static Rat parse(const std::string& text) {
    Rat r;
    if (text.empty() || !looks_like_rational(text))
      throw std::domain_error("malformed rational: \"" + text + "\"");
    if (mpq_set_str(r.q_, text.c_str(), 10) != 0)
      throw std::domain_error("malformed rational: \"" + text + "\"");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
      throw std::domain_error("zero-denominator");
    mpq_canonicalize(r.q_);
    return r;
  }

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rat() { mpq_clear(q_); }

  //--- queries --------------------------------------------------------------
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  std::string to_string() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  // Numerator / denominator as standalone rationals (denominator > 0).
  Rat numerator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
  }
  Rat denominator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
  }

  //--- arithmetic -----------------------------------------------------------
  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("zero-denominator");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("zero-denominator");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
  }

  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }

  Rat pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k > 0) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  //--- comparison -----------------------------------------------------------
  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rat& a, const Rat& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

private:
  static bool looks_like_rational(const std::string& t) {
    std::size_t i = 0;
    auto digits = [&](std::size_t& k) {
      std::size_t start = k;
      while (k < t.size() && t[k] >= '0' && t[k] <= '9') ++k;
      return k > start;
    };
    if (t[i] == '+' || t[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == t.size()) return true;
    if (t[i] != '/') return false;
    ++i;
    if (t.size() > i && (t[i] == '+' || t[i] == '-')) ++i;
    if (!digits(i)) return false;
    return i == t.size();
  }

  mpq_t q_;
};

// Free-function forms used by generic (templated) code.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline std::string to_string(const Rat& r) { return r.to_string(); }

}  // namespace latticemaps

#endif  // LATTICEMAPS_RATIONAL_HPP
