#ifndef LATTICEMAPS_BOUNDARY_HPP
#define LATTICEMAPS_BOUNDARY_HPP

//---------------------------------------------------------------------------
// boundary.hpp — the boundary-equation registry.
//
// Eight boundary rows are registered, two for the wave form and two/four for
// the additive/multiplicative cross-ratio normalizations. Each row carries:
//   * a boundary polynomial q(x,y,z; a,b), stored in its two-parameter form
//     (the one-parameter table form is recovered at b = sigma(a)),
//   * a dual polynomial p(y,x,c; l,e), likewise two-parameter,
//   * a boundary matrix K(x; lambda) with a sign epsilon,
//   * the reversal factor h with q(x,y,z;a,b) = h(a,b) q(z,y,x;b,a).
// The involution sigma is additive (2 mu - a) or multiplicative (mu^2 / a)
// according to the bulk equation the row extends.
//
// Verifiers: the duality between q and p (randomized polynomial-identity
// testing), the Moebius extraction of K from p, K(l) K(sigma l) = id,
// boundary consistency (the half-rhombic-dodecahedron stencil), its dual
// formulation, and the boundary zero curvature identity with the sign.
//---------------------------------------------------------------------------

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticemaps/quad.hpp"

namespace latticemaps {

//--- involutions --------------------------------------------------------------

enum class InvKind { ADDITIVE, MULTIPLICATIVE };

struct Involution {
  InvKind kind = InvKind::ADDITIVE;
  Rat mu;
};

// The parameter involution attached to each bulk equation.
Involution involution_for(QuadId id, const Rat& mu);

template <class S>
S sigma_apply_t(const Involution& inv, const S& v) {
  S m{inv.mu};
  if (inv.kind == InvKind::ADDITIVE) return S(2) * m - v;
  if (is_zero(v)) throw std::runtime_error("involution-pole");
  return m * m / v;
}

Rat sigma_apply(const Involution& inv, const Rat& v);

// sigma(lambda) as a function of the spectral parameter.
RatFun sigma_lambda(const Involution& inv);

//--- registry -----------------------------------------------------------------

enum class BoundaryId {
  H1_YZX,      // y(z-x) + alpha - mu
  H1_XZ,       // x + z
  Q1ADD_ROW1,  // alpha(xz - y^2) - mu(x-y)(y+z)
  Q1ADD_ROW2,  // x + z
  Q1MULT_ROW1, // alpha^2(x-y) + mu^2(y-z)
  Q1MULT_ROW2, // alpha^2(x-y) - mu^2(y-z)
  Q1MULT_ROW3, // alpha^2(x-y)z + mu^2(y-z)x
  Q1MULT_ROW4, // alpha^2(x-y)z - mu^2(y-z)x
};

std::string to_string(BoundaryId id);
BoundaryId boundary_id_from_string(const std::string& s);
std::vector<BoundaryId> all_boundary_ids();
std::vector<BoundaryId> boundary_ids_of(QuadId quad);
QuadId quad_of(BoundaryId id);
int epsilon_of(BoundaryId id);

struct BoundarySpec {
  BoundaryId id;
  QuadId quad;
  Involution inv;
  int epsilon;
};

BoundarySpec make_boundary(BoundaryId id, const Rat& mu);

//--- polynomial data ----------------------------------------------------------

// Two-parameter boundary polynomial q(x, y, z; a, b).
template <class S>
S boundary_q2_t(BoundaryId id, const S& x, const S& y, const S& z, const S& a,
                const S& b) {
  switch (id) {
    case BoundaryId::H1_YZX:
      return y * (z - x) + (a - b) / S(2);
    case BoundaryId::H1_XZ:
      return x + z;
    case BoundaryId::Q1ADD_ROW1:
      return a * (x * z - y * y) - ((a + b) / S(2)) * (x - y) * (y + z);
    case BoundaryId::Q1ADD_ROW2:
      return x + z;
    case BoundaryId::Q1MULT_ROW1:
      return a * a * (x - y) + a * b * (y - z);
    case BoundaryId::Q1MULT_ROW2:
      return a * a * (x - y) - a * b * (y - z);
    case BoundaryId::Q1MULT_ROW3:
      return a * a * (x - y) * z + a * b * (y - z) * x;
    case BoundaryId::Q1MULT_ROW4:
      return a * a * (x - y) * z - a * b * (y - z) * x;
  }
  throw std::logic_error("unknown boundary id");
}

// Two-parameter dual polynomial p(y, x, c; l, e).
template <class S>
S boundary_p2_t(BoundaryId id, const S& y, const S& x, const S& c, const S& l,
                const S& e) {
  switch (id) {
    case BoundaryId::H1_YZX:
    case BoundaryId::Q1ADD_ROW1:
      return y + c;
    case BoundaryId::H1_XZ:
      return x * (y - c) + (e - l) / S(2);
    case BoundaryId::Q1ADD_ROW2:
      return l * (x * x - c * y) + ((l + e) / S(2)) * (c + x) * (y - x);
    case BoundaryId::Q1MULT_ROW1:
      return l * l * (y - x) - l * e * (x - c);
    case BoundaryId::Q1MULT_ROW2:
      return l * l * (y - x) + l * e * (x - c);
    case BoundaryId::Q1MULT_ROW3:
      return l * l * (y - x) * c - l * e * (x - c) * y;
    case BoundaryId::Q1MULT_ROW4:
      return l * l * (y - x) * c + l * e * (x - c) * y;
  }
  throw std::logic_error("unknown boundary id");
}

// One-parameter forms (the table entries), with the partner parameter set to
// its involution image.
template <class S>
S boundary_q_t(const BoundarySpec& spec, const S& x, const S& y, const S& z,
               const S& a) {
  return boundary_q2_t<S>(spec.id, x, y, z, a, sigma_apply_t<S>(spec.inv, a));
}

template <class S>
S boundary_p_t(const BoundarySpec& spec, const S& y, const S& x, const S& c,
               const S& l) {
  return boundary_p2_t<S>(spec.id, y, x, c, l, sigma_apply_t<S>(spec.inv, l));
}

// Reversal factor h(a, b) with q(x,y,z;a,b) = h(a,b) q(z,y,x;b,a).
template <class S>
S h_factor_t(BoundaryId id, const S& a, const S& b) {
  switch (id) {
    case BoundaryId::H1_YZX:
    case BoundaryId::Q1ADD_ROW1:
      return S(-1);
    case BoundaryId::H1_XZ:
    case BoundaryId::Q1ADD_ROW2:
      return S(1);
    case BoundaryId::Q1MULT_ROW1:
    case BoundaryId::Q1MULT_ROW3:
      return -a / b;
    case BoundaryId::Q1MULT_ROW2:
    case BoundaryId::Q1MULT_ROW4:
      return a / b;
  }
  throw std::logic_error("unknown boundary id");
}

//--- solvers ------------------------------------------------------------------

// z with q(x, y, z; a) = 0 (affine solve in the last slot).
template <class S>
S boundary_solve_t(const BoundarySpec& spec, const S& x, const S& y,
                   const S& a) {
  S f0 = boundary_q_t<S>(spec, x, y, S(0), a);
  S f1 = boundary_q_t<S>(spec, x, y, S(1), a);
  S lin = f1 - f0;
  if (is_zero(lin)) throw std::runtime_error("degenerate-boundary");
  return -f0 / lin;
}

// x with q(x, y, z; a) = 0.
template <class S>
S boundary_solve_x_t(const BoundarySpec& spec, const S& y, const S& z,
                     const S& a) {
  S f0 = boundary_q_t<S>(spec, S(0), y, z, a);
  S f1 = boundary_q_t<S>(spec, S(1), y, z, a);
  S lin = f1 - f0;
  if (is_zero(lin)) throw std::runtime_error("degenerate-boundary");
  return -f0 / lin;
}

// c with p(y, x, c; l) = 0.
template <class S>
S dual_solve_c_t(const BoundarySpec& spec, const S& y, const S& x,
                 const S& l) {
  S f0 = boundary_p_t<S>(spec, y, x, S(0), l);
  S f1 = boundary_p_t<S>(spec, y, x, S(1), l);
  S lin = f1 - f0;
  if (is_zero(lin)) throw std::runtime_error("degenerate-dual");
  return -f0 / lin;
}

Rat boundary_solve(const BoundarySpec& spec, const Rat& x, const Rat& y,
                   const Rat& a);

//--- boundary matrices ----------------------------------------------------------

// K(x; lambda). Rows whose entries carry 1/x require x != 0. The additive
// cross-ratio row stores the radical prefactor (lambda(2 mu - lambda))^(-1/2)
// whose radicand is invariant under the involution, making K(l) K(sigma l)
// the exact identity.
template <class S>
Scaled<S> k_matrix_t(BoundaryId id, const S& x, const SpectralPoint<S>& lam,
                     const S& mu) {
  const S& L = lam.value;
  Scaled<S> out = Scaled<S>::identity();
  auto need_x = [&] {
    if (is_zero(x)) throw std::runtime_error("degenerate-boundary");
  };
  switch (id) {
    case BoundaryId::H1_YZX:
    case BoundaryId::Q1ADD_ROW1:
      out.core = {S(-1), S(0), S(0), S(1)};
      return out;
    case BoundaryId::H1_XZ:
      need_x();
      out.core = {S(1), (mu - L) / x, S(0), S(1)};
      return out;
    case BoundaryId::Q1ADD_ROW2:
      need_x();
      out.core = {mu, (L - mu) * x, (L - mu) / x, mu};
      out.radical.multiply_symbol("q1a.k1", L * (S(2) * mu - L), -1);
      return out;
    case BoundaryId::Q1MULT_ROW1:
      out.core = {-L / mu, (L * L + mu * mu) * x / (L * mu), S(0), mu / L};
      return out;
    case BoundaryId::Q1MULT_ROW2:
      out.core = {L / mu, (mu * mu - L * L) * x / (L * mu), S(0), mu / L};
      return out;
    case BoundaryId::Q1MULT_ROW3:
      need_x();
      out.core = {-mu / L, S(0), -(L * L + mu * mu) / (L * mu * x), L / mu};
      return out;
    case BoundaryId::Q1MULT_ROW4:
      need_x();
      out.core = {mu / L, S(0), (mu * mu - L * L) / (L * mu * x), L / mu};
      return out;
  }
  throw std::logic_error("unknown boundary id");
}

// Stored K over the symbolic spectral parameter.
Scaled<RatFun> k_matrix(const BoundarySpec& spec, const Rat& x);

// Raw Moebius core [[-B,-D],[A,C]] read off from p(y,x,c;lambda) = Ayc + By
// + Cc + D, i.e. c = K[y] solves p = 0. Throws "degenerate-dual" when the
// c-coefficient vanishes identically in y.
Mat2<RatFun> dual_mobius_core(const BoundarySpec& spec, const Rat& x);

// Extracts the Moebius action from the dual polynomial, checks it agrees
// with the stored table entry up to proportionality, and returns the stored
// normalized matrix.
Scaled<RatFun> boundary_matrix_from_dual(const BoundarySpec& spec,
                                         const Rat& x);

// K(x;lambda) K(x;sigma(lambda)) == id as a spectral identity.
bool check_k_involution(const BoundarySpec& spec, const Rat& x);

// det K as a spectral function (field-independence is a registry property).
RatFun k_determinant(const BoundarySpec& spec, const Rat& x);

//--- verifiers ------------------------------------------------------------------

struct DualityReport {
  bool holds = false;
  std::vector<Rat> chi_samples;  // main-identity ratios, one per sample
};

// Randomized polynomial-identity test of the duality between q and p, plus
// the three companion eliminations. `dual_override` substitutes another
// row's dual polynomial (negative controls).
DualityReport verify_duality(const BoundarySpec& spec, Rng& rng, int samples,
                             std::optional<BoundaryId> dual_override = {});

struct BoundaryConsistency {
  bool consistent = false;
  Rat t;  // the common value when consistent
};

// The three-route computation of the far boundary value t on the half
// rhombic dodecahedron. `beta_eta_override` replaces (sigma(a), sigma(lp))
// for negative controls.
BoundaryConsistency check_boundary_consistency(
    const BoundarySpec& spec, const Rat& x, const Rat& y, const Rat& u,
    const Rat& a, const Rat& lp,
    std::optional<std::pair<Rat, Rat>> beta_eta_override = {});

struct DualConsistency {
  bool consistent = false;
  Rat e;
};

// The two-route computation of the dual value e. `dual_override` substitutes
// another row's dual polynomial for the c-solves (negative controls).
DualConsistency check_dual_boundary_consistency(
    const BoundarySpec& spec, const Rat& x, const Rat& y, const Rat& u,
    const Rat& a, const Rat& lp, std::optional<BoundaryId> dual_override = {});

// Boundary zero curvature with an explicit sign in place of the stored one.
bool check_boundary_zcc_signed(const BoundarySpec& spec, const Rat& x,
                               const Rat& u, const Rat& a, int sign);

// L(r,u;sa,sl) L(u,x;a,sl) K(x;l) = epsilon K(r;l) L(r,u;sa,l) L(u,x;a,l).
bool check_boundary_zcc(const BoundarySpec& spec, const Rat& x, const Rat& u,
                        const Rat& a);

// q(x,y,z;a,b) = h(a,b) q(z,y,x;b,a) and h(a,b) h(b,a) = 1 on random samples.
bool check_z2_symmetry(const BoundarySpec& spec, Rng& rng, int samples);

}  // namespace latticemaps

#endif  // LATTICEMAPS_BOUNDARY_HPP
