#ifndef LATTICEMAPS_QUAD_HPP
#define LATTICEMAPS_QUAD_HPP

//---------------------------------------------------------------------------
// quad.hpp — the quad-equation registry.
//
// Three affine-linear lattice equations are registered: the discrete wave
// form ("h1"), and two normalizations of the cross-ratio form with additive
// and multiplicative parameter involutions ("q1_add", "q1_mult"). For each
// the module provides the polynomial evaluator, corner solvers (affine
// solve in any slot), the 2x2 Lax matrix with its radical-prefactor
// normalization, the function ell with L(x,y) L(y,x) = ell * id, and the
// bulk verifiers: symmetry report, consistency around the cube, and the
// zero curvature identity.
//
// Everything that mixes field values with the spectral parameter is
// templated on the scalar ring S (RatFun for symbolic identities, Rat for
// numeric spot checks, DualRat for derivatives at numeric spectral values).
//---------------------------------------------------------------------------

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticemaps/dual.hpp"
#include "latticemaps/linalg.hpp"
#include "latticemaps/ratfun.hpp"
#include "latticemaps/rational.hpp"
#include "latticemaps/sampling.hpp"

namespace latticemaps {

enum class QuadId { H1, Q1_ADD, Q1_MULT };

std::string to_string(QuadId id);
QuadId quad_id_from_string(const std::string& s);

// D4 symmetry signs (omega, delta): Q(u,ut,uh,uth;a,b) equals
// omega * Q(ut,u,uth,uh;a,b) and delta * Q(u,uh,ut,uth;b,a).
std::pair<int, int> d4_signs(QuadId id);

// Sign in L(x,y;a,L) L(y,x;a,L) = sign * ell(a,L) * id.
int ll_sign(QuadId id);

// Post-rescale ell as a function of the spectral parameter.
RatFun ell(QuadId id, const Rat& alpha, const Rat& mu);

//--- radical symbol naming ---------------------------------------------------

inline std::string radical_key(const Rat& v) { return v.to_string(); }
inline std::string radical_key(const RatFun& v) { return v.to_string(); }
inline std::string radical_key(const DualRat& v) {
  return v.value().to_string();
}

//--- evaluator ---------------------------------------------------------------

template <class S>
S quad_eval_t(QuadId id, const S& u, const S& ut, const S& uh, const S& uth,
              const S& a, const S& b) {
  switch (id) {
    case QuadId::H1:
      return (u - uth) * (ut - uh) + b - a;
    case QuadId::Q1_ADD:
      return a * (u - uh) * (ut - uth) - b * (u - ut) * (uh - uth);
    case QuadId::Q1_MULT:
      return (u - uh) * (ut - uth) / (a * a) -
             (u - ut) * (uh - uth) / (b * b);
  }
  throw std::logic_error("unknown quad id");
}

Rat quad_eval(QuadId id, const Rat& u, const Rat& ut, const Rat& uh,
              const Rat& uth, const Rat& a, const Rat& b);

//--- corner solvers ----------------------------------------------------------

// Argument slots of Q(u, ut, uh, uth; a, b) in order.
enum class Corner { U = 0, UT = 1, UH = 2, UTH = 3 };

// Solves Q = 0 for the `slot` argument; `known` holds the other three
// values in argument order. Affine linearity makes this a two-point solve:
// with f(t) the evaluation at slot value t, the root is -f(0)/(f(1)-f(0)).
template <class S>
S quad_solve_t(QuadId id, Corner slot, const std::array<S, 3>& known,
               const S& a, const S& b) {
  auto eval_at = [&](const S& t) {
    std::array<S, 4> w{S(0), S(0), S(0), S(0)};
    std::size_t j = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == static_cast<std::size_t>(slot)) {
        w[i] = t;
      } else {
        w[i] = known[j++];
      }
    }
    return quad_eval_t<S>(id, w[0], w[1], w[2], w[3], a, b);
  };
  S f0 = eval_at(S(0));
  S f1 = eval_at(S(1));
  S lin = f1 - f0;
  if (is_zero(lin)) throw std::runtime_error("degenerate-corner");
  return -f0 / lin;
}

// The staircase workhorse: w with Q(u, ut, uh, w; a, b) = 0.
template <class S>
S corner_solve_t(QuadId id, const S& u, const S& ut, const S& uh, const S& a,
                 const S& b) {
  return quad_solve_t<S>(id, Corner::UTH, {u, ut, uh}, a, b);
}

Rat corner_solve(QuadId id, const Rat& u, const Rat& ut, const Rat& uh,
                 const Rat& a, const Rat& b);

//--- Lax matrices ------------------------------------------------------------

// L(x_new, x_old; alpha, lambda) as a scaled matrix. The prefactor radical
// depends on the registry entry:
//   h1:      (lambda - mu)^(-1/2)
//   q1_add:  (lambda (lambda - mu))^(-1/2)
//   q1_mult: (lambda^2 - mu^2)^(-1/2) and a formal sqrt(alpha) factor
// The `reflected` flag of the spectral point selects the involution-image
// symbol slot so that a product over both slots stays formally consistent.
template <class S>
Scaled<S> lax_matrix_t(QuadId id, const S& x_new, const S& x_old, const S& a,
                       const SpectralPoint<S>& lam, const S& mu) {
  const S& L = lam.value;
  Scaled<S> out = Scaled<S>::identity();
  switch (id) {
    case QuadId::H1: {
      out.core = {x_old, a - L - x_new * x_old, S(1), -x_new};
      out.radical.multiply_symbol(lam.reflected ? "h1.s2" : "h1.s1", L - mu,
                                  -1);
      return out;
    }
    case QuadId::Q1_ADD: {
      S d = x_new - x_old;
      if (is_zero(d)) throw std::runtime_error("degenerate-edge");
      out.core = {L * d - a * x_new, a * x_new * x_old, -a, L * d + a * x_old};
      out.scalar = S(1) / d;
      out.radical.multiply_symbol(lam.reflected ? "q1a.t2" : "q1a.t1",
                                  L * (L - mu), -1);
      return out;
    }
    case QuadId::Q1_MULT: {
      S d = x_new - x_old;
      if (is_zero(d)) throw std::runtime_error("degenerate-edge");
      S a2 = a * a;
      S L2 = L * L;
      out.core = {a2 * d - L2 * x_new, L2 * x_new * x_old, -L2,
                  a2 * d + L2 * x_old};
      out.scalar = mu / (a2 * d);
      out.radical.multiply_symbol(lam.reflected ? "q1m.sbar" : "q1m.s",
                                  L2 - mu * mu, -1);
      out.radical.multiply_symbol("q1m.sqrt_a(" + radical_key(a) + ")", a, 1);
      return out;
    }
  }
  throw std::logic_error("unknown quad id");
}

Scaled<RatFun> lax_matrix(QuadId id, const Rat& x_new, const Rat& x_old,
                          const Rat& alpha, const Rat& mu);

//--- bulk verifiers ----------------------------------------------------------

struct SymmetryReport {
  bool affine_linear = false;
  bool d4 = false;
  bool tetrahedron = false;
  bool all() const { return affine_linear && d4 && tetrahedron; }
};

// Randomized identity testing of affine linearity (vanishing second divided
// difference in every slot), the D4 relations with the stored signs, and the
// tetrahedron property (the far cube corner does not depend on the base
// value when the three neighbours are held fixed).
SymmetryReport check_symmetries(QuadId id, Rng& rng, int samples = 25);

struct CubeResult {
  bool consistent = false;
  Rat value;  // the common far corner when consistent
};

// Imposes the equation on all six faces of a cube with the third lattice
// direction carrying parameter lp and compares the three routes to the far
// corner. Degenerate intermediate solves raise "degenerate-corner: <face>".
CubeResult check_3d_consistency(QuadId id, const Rat& u, const Rat& ut,
                                const Rat& uh, const Rat& v, const Rat& a,
                                const Rat& b, const Rat& lp);

// Exact matrix identity L(w,ut;b) L(ut,u;a) = L(w,uh;a) L(uh,u;b) with
// w the solved corner; checked symbolically in the spectral parameter and
// spot-checked at the supplied numeric samples (inadmissible samples are
// skipped).
bool check_zero_curvature(QuadId id, const Rat& u, const Rat& ut,
                          const Rat& uh, const Rat& a, const Rat& b,
                          const Rat& mu,
                          const std::vector<Rat>& lambda_samples = {});

}  // namespace latticemaps

#endif  // LATTICEMAPS_QUAD_HPP
