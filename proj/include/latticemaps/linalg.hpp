#ifndef LATTICEMAPS_LINALG_HPP
#define LATTICEMAPS_LINALG_HPP

//---------------------------------------------------------------------------
// linalg.hpp — 2x2 matrices with formal radical prefactors.
//
// A Scaled<S> is  (radical monomial) * (scalar in S) * (2x2 core over S).
// The radical monomial maps a symbol name to a twice-exponent together with
// the symbol's defining radicand (symbol^2 = radicand); even powers reduce
// into the scalar via that relation, odd residues stay formal and are only
// ever compared symbol-by-symbol — no square-root branch is ever chosen.
//
// S is any exact field-like ring here: Rat, RatFun (symbolic spectral
// parameter), or DualRat (numeric spectral parameter with seeded partials).
//---------------------------------------------------------------------------

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace latticemaps {

//--- generic helpers --------------------------------------------------------

template <class S>
S power(const S& base, long e) {
  return base.pow(e);
}

// Twice-exponent floor halving: the largest k with 2k <= t (toward -inf).
inline long floor_half(long t) {
  return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

//--- spectral parameter handle ----------------------------------------------

// The spectral argument passed to matrix builders: its value (the parameter
// itself or its involution image) plus which of the two radical-symbol slots
// the builder should use for its prefactor.
template <class S>
struct SpectralPoint {
  S value;
  bool reflected = false;  // false: the parameter itself; true: sigma image
};

//--- radical monomials --------------------------------------------------------

template <class S>
struct RadicalFactor {
  S radicand;  // symbol^2 = radicand
  long texp = 0;  // twice-exponent: symbol^(texp/2)
};

template <class S>
class Radical {
public:
  Radical() = default;

  void multiply_symbol(const std::string& name, const S& radicand,
                       long texp) {
    if (texp == 0) return;
    auto it = m_.find(name);
    if (it == m_.end()) {
      m_.emplace(name, RadicalFactor<S>{radicand, texp});
      return;
    }
    if (!(it->second.radicand == radicand)) {
      throw std::logic_error("radical symbol \"" + name +
                             "\" used with two different radicands");
    }
    it->second.texp += texp;
    if (it->second.texp == 0) m_.erase(it);
  }

  void multiply(const Radical& o) {
    for (const auto& [name, f] : o.m_) {
      multiply_symbol(name, f.radicand, f.texp);
    }
  }

  // Moves every even part into `scalar` via symbol^2 = radicand (flooring
  // toward -inf), leaving every surviving twice-exponent equal to 1.
  void fold_even_into(S& scalar) {
    for (auto it = m_.begin(); it != m_.end();) {
      long k = floor_half(it->second.texp);
      if (k != 0) {
        scalar = scalar * power(it->second.radicand, k);
        it->second.texp -= 2 * k;
      }
      if (it->second.texp == 0) {
        it = m_.erase(it);
      } else {
        ++it;
      }
    }
  }

  bool empty() const { return m_.empty(); }
  const std::map<std::string, RadicalFactor<S>>& factors() const { return m_; }

  friend bool operator==(const Radical& a, const Radical& b) {
    if (a.m_.size() != b.m_.size()) return false;
    auto ia = a.m_.begin();
    auto ib = b.m_.begin();
    for (; ia != a.m_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (ia->second.texp != ib->second.texp) return false;
      if (!(ia->second.radicand == ib->second.radicand)) return false;
    }
    return true;
  }
  friend bool operator!=(const Radical& a, const Radical& b) {
    return !(a == b);
  }

  std::string signature() const {
    std::string out;
    for (const auto& [name, f] : m_) {
      if (!out.empty()) out += " ";
      out += name + "^(" + std::to_string(f.texp) + "/2)";
    }
    return out.empty() ? "1" : out;
  }

private:
  std::map<std::string, RadicalFactor<S>> m_;
};

//--- 2x2 matrices -------------------------------------------------------------

template <class S>
struct Mat2 {
  S a, b, c, d;  // row-major [[a, b], [c, d]]

  static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  Mat2 scaled(const S& s) const { return {a * s, b * s, c * s, d * s}; }
  S trace() const { return a + d; }
  S det() const { return a * d - b * c; }
};

//--- scaled matrices ----------------------------------------------------------

template <class S>
struct Scaled {
  Mat2<S> core;
  S scalar = S(1);
  Radical<S> radical;

  static Scaled identity() {
    return Scaled{Mat2<S>::identity(), S(1), Radical<S>{}};
  }

  friend Scaled operator*(const Scaled& x, const Scaled& y) {
    Scaled out{x.core * y.core, x.scalar * y.scalar, x.radical};
    out.radical.multiply(y.radical);
    return out;
  }

  Scaled scaled_by(const S& s) const { return {core, scalar * s, radical}; }

  // Folds even radical powers into the scalar and the scalar into the core,
  // so equal objects have identical components.
  Scaled normalized() const {
    Scaled out = *this;
    out.radical.fold_even_into(out.scalar);
    out.core = out.core.scaled(out.scalar);
    out.scalar = S(1);
    return out;
  }

  // Trace as (residual radical, ring value); the radical residue is formal.
  std::pair<Radical<S>, S> trace() const {
    Scaled n = *this;
    S s = n.scalar;
    n.radical.fold_even_into(s);
    return {n.radical, s * n.core.trace()};
  }

  // Determinant; the squared radical always folds completely, so the result
  // lives in S.
  S det() const {
    S s = scalar * scalar;
    Radical<S> sq = radical;
    sq.multiply(radical);
    sq.fold_even_into(s);
    if (!sq.empty()) {
      throw std::logic_error("squared radical failed to fold");
    }
    return s * core.det();
  }
};

// Exact equality of scaled matrices: identical residual radicals and equal
// scalar-folded cores.
template <class S>
bool scaled_equal(const Scaled<S>& x, const Scaled<S>& y) {
  Scaled<S> nx = x.normalized();
  Scaled<S> ny = y.normalized();
  return nx.radical == ny.radical && nx.core == ny.core;
}

// x == factor * y as scaled matrices.
template <class S>
bool scaled_equal_up_to(const Scaled<S>& x, const Scaled<S>& y,
                        const S& factor) {
  return scaled_equal(x, y.scaled_by(factor));
}

}  // namespace latticemaps

#endif  // LATTICEMAPS_LINALG_HPP
