#ifndef LATTICEMAPS_DUAL_HPP
#define LATTICEMAPS_DUAL_HPP

//---------------------------------------------------------------------------
// dual.hpp — forward-mode dual numbers over Rat.
//
// A DualRat carries an exact value together with a sparse vector of exact
// partial derivatives (indexed by variable number), obeying the truncated
// first-order rules (a + eps a')(b + eps b') = ab + eps(ab' + a'b). They are
// used to compute exact Jacobians of invariants; there is no epsilon
// tolerance anywhere.
//---------------------------------------------------------------------------

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latticemaps/rational.hpp"

namespace latticemaps {

class DualRat {
public:
  DualRat() : v_(0) {}
  DualRat(const Rat& v) : v_(v) {}
  DualRat(long v) : v_(v) {}

  // A seeded variable: value v with d/d(var_index) = 1.
  static DualRat variable(const Rat& v, int index) {
    DualRat d(v);
    d.d_.emplace_back(index, Rat(1));
    return d;
  }

  const Rat& value() const { return v_; }
  // Partial derivative with respect to variable `index` (0 if unseeded).
  Rat partial(int index) const {
    for (const auto& [i, g] : d_) {
      if (i == index) return g;
    }
    return Rat(0);
  }
  const std::vector<std::pair<int, Rat>>& partials() const { return d_; }
  bool is_zero() const { return v_.is_zero(); }

  friend DualRat operator+(const DualRat& a, const DualRat& b) {
    return DualRat(a.v_ + b.v_, merge(a.d_, Rat(1), b.d_, Rat(1)));
  }
  friend DualRat operator-(const DualRat& a, const DualRat& b) {
    return DualRat(a.v_ - b.v_, merge(a.d_, Rat(1), b.d_, Rat(-1)));
  }
  friend DualRat operator*(const DualRat& a, const DualRat& b) {
    // (ab)' = a b' + a' b
    return DualRat(a.v_ * b.v_, merge(a.d_, b.v_, b.d_, a.v_));
  }
  friend DualRat operator/(const DualRat& a, const DualRat& b) {
    if (b.v_.is_zero()) throw std::domain_error("singular-point");
    // (a/b)' = (a' b - a b') / b^2  =  a'/b - (a/b^2) b'
    Rat binv = b.v_.inverse();
    return DualRat(a.v_ * binv,
                   merge(a.d_, binv, b.d_, -(a.v_ * binv * binv)));
  }
  DualRat operator-() const {
    return DualRat(-v_, merge(d_, Rat(-1), {}, Rat(0)));
  }
  DualRat& operator+=(const DualRat& o) { return *this = *this + o; }
  DualRat& operator-=(const DualRat& o) { return *this = *this - o; }
  DualRat& operator*=(const DualRat& o) { return *this = *this * o; }
  DualRat& operator/=(const DualRat& o) { return *this = *this / o; }

  DualRat inverse() const { return DualRat(Rat(1)) / *this; }

  DualRat pow(long e) const {
    if (e == 0) return DualRat(Rat(1));
    DualRat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    DualRat acc(Rat(1));
    while (k > 0) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  // Full equality: value and all partials.
  friend bool operator==(const DualRat& a, const DualRat& b) {
    return a.v_ == b.v_ && a.d_ == b.d_;
  }
  friend bool operator!=(const DualRat& a, const DualRat& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string out = v_.to_string();
    for (const auto& [i, g] : d_) {
      out += " + eps_" + std::to_string(i) + "*" + g.to_string();
    }
    return out;
  }

private:
  DualRat(Rat v, std::vector<std::pair<int, Rat>> d)
      : v_(std::move(v)), d_(std::move(d)) {}

  // sa * a + sb * b over sparse derivative vectors (both sorted by index).
  static std::vector<std::pair<int, Rat>> merge(
      const std::vector<std::pair<int, Rat>>& a, const Rat& sa,
      const std::vector<std::pair<int, Rat>>& b, const Rat& sb) {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        Rat g = a[i].second * sa;
        if (!g.is_zero()) out.emplace_back(a[i].first, std::move(g));
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        Rat g = b[j].second * sb;
        if (!g.is_zero()) out.emplace_back(b[j].first, std::move(g));
        ++j;
      } else {
        Rat g = a[i].second * sa + b[j].second * sb;
        if (!g.is_zero()) out.emplace_back(a[i].first, std::move(g));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Rat v_;
  // Sparse, sorted by variable index, no zero entries.
  std::vector<std::pair<int, Rat>> d_;
};

inline bool is_zero(const DualRat& d) { return d.is_zero(); }
inline std::string to_string(const DualRat& d) { return d.to_string(); }

//---------------------------------------------------------------------------
// Exact Jacobian of a vector function by dual-number evaluation. The
// function is written over DualRat so the same source text serves both
// plain evaluation and differentiation. Entry [i][j] = d g_i / d x_j.
//---------------------------------------------------------------------------
template <class Fn>
std::vector<std::vector<Rat>> dual_jacobian(Fn&& g,
                                            const std::vector<Rat>& point) {
  std::vector<DualRat> seeded;
  seeded.reserve(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    seeded.push_back(DualRat::variable(point[j], static_cast<int>(j)));
  }
  std::vector<DualRat> out = g(seeded);
  std::vector<std::vector<Rat>> jac(out.size(),
                                    std::vector<Rat>(point.size(), Rat(0)));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < point.size(); ++j) {
      jac[i][j] = out[i].partial(static_cast<int>(j));
    }
  }
  return jac;
}

}  // namespace latticemaps

#endif  // LATTICEMAPS_DUAL_HPP
