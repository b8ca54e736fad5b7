#include "latticemaps/quad.hpp"

#include <stdexcept>

namespace latticemaps {

std::string to_string(QuadId id) {
  switch (id) {
    case QuadId::H1:
      return "h1";
    case QuadId::Q1_ADD:
      return "q1_add";
    case QuadId::Q1_MULT:
      return "q1_mult";
  }
  throw std::logic_error("unknown quad id");
}

QuadId quad_id_from_string(const std::string& s) {
  if (s == "h1") return QuadId::H1;
  if (s == "q1_add") return QuadId::Q1_ADD;
  if (s == "q1_mult") return QuadId::Q1_MULT;
  throw std::runtime_error("unknown equation id: " + s);
}

std::pair<int, int> d4_signs(QuadId) {
  // All three registered equations flip sign under the swap of lattice
  // directions and are even under reversal within a direction.
  return {1, -1};
}

int ll_sign(QuadId) { return 1; }

RatFun ell(QuadId id, const Rat& alpha, const Rat& mu) {
  RatFun L = RatFun::variable();
  RatFun a(alpha);
  RatFun m(mu);
  switch (id) {
    case QuadId::H1:
      return (a - L) / (L - m);
    case QuadId::Q1_ADD:
      return (L - a) / (L - m);
    case QuadId::Q1_MULT:
      return m * m * (a * a - L * L) / (a * (L * L - m * m));
  }
  throw std::logic_error("unknown quad id");
}

Rat quad_eval(QuadId id, const Rat& u, const Rat& ut, const Rat& uh,
              const Rat& uth, const Rat& a, const Rat& b) {
  return quad_eval_t<Rat>(id, u, ut, uh, uth, a, b);
}

Rat corner_solve(QuadId id, const Rat& u, const Rat& ut, const Rat& uh,
                 const Rat& a, const Rat& b) {
  return corner_solve_t<Rat>(id, u, ut, uh, a, b);
}

Scaled<RatFun> lax_matrix(QuadId id, const Rat& x_new, const Rat& x_old,
                          const Rat& alpha, const Rat& mu) {
  SpectralPoint<RatFun> lam{RatFun::variable(), false};
  return lax_matrix_t<RatFun>(id, RatFun(x_new), RatFun(x_old), RatFun(alpha),
                              lam, RatFun(mu));
}

namespace {

// Draws a parameter admissible for the given equation (multiplicative
// normalization divides by the parameters).
Rat draw_param(QuadId id, Rng& rng) {
  if (id == QuadId::Q1_MULT || id == QuadId::Q1_ADD) return rng.nonzero_rat();
  return rng.rat();
}

bool check_affine_linear(QuadId id, Rng& rng, int samples) {
  for (int s = 0; s < samples; ++s) {
    Rat a = draw_param(id, rng);
    Rat b = draw_param(id, rng);
    std::array<Rat, 3> known{rng.rat(), rng.rat(), rng.rat()};
    for (int slot = 0; slot < 4; ++slot) {
      auto eval_at = [&](const Rat& t) {
        std::array<Rat, 4> w;
        std::size_t j = 0;
        for (std::size_t i = 0; i < 4; ++i)
          w[i] = (i == static_cast<std::size_t>(slot)) ? t : known[j++];
        return quad_eval(id, w[0], w[1], w[2], w[3], a, b);
      };
      Rat f0 = eval_at(Rat(0));
      Rat f1 = eval_at(Rat(1));
      Rat f2 = eval_at(Rat(2));
      if (!(f0 - Rat(2) * f1 + f2).is_zero()) return false;
    }
  }
  return true;
}

bool check_d4(QuadId id, Rng& rng, int samples) {
  auto [omega, delta] = d4_signs(id);
  for (int s = 0; s < samples; ++s) {
    Rat a = draw_param(id, rng);
    Rat b = draw_param(id, rng);
    Rat u = rng.rat(), ut = rng.rat(), uh = rng.rat(), uth = rng.rat();
    Rat q = quad_eval(id, u, ut, uh, uth, a, b);
    Rat q_rev = quad_eval(id, ut, u, uth, uh, a, b);
    Rat q_swap = quad_eval(id, u, uh, ut, uth, b, a);
    if (q != Rat(omega) * q_rev) return false;
    if (q != Rat(delta) * q_swap) return false;
  }
  return true;
}

bool check_tetrahedron(QuadId id, Rng& rng, int samples) {
  for (int s = 0; s < samples; ++s) {
    Rat a = draw_param(id, rng);
    Rat b = draw_param(id, rng);
    Rat lp = draw_param(id, rng);
    Rat ut = rng.rat(), uh = rng.rat(), v = rng.rat();
    bool have_ref = false;
    Rat ref;
    int kept = 0;
    for (int trial = 0; trial < 64 && kept < 5; ++trial) {
      Rat u = rng.rat();
      try {
        // Far corner via the top face; its independence of u is the claim.
        Rat vt = corner_solve(id, u, ut, v, a, lp);
        Rat vh = corner_solve(id, u, uh, v, b, lp);
        Rat w = corner_solve(id, v, vt, vh, a, b);
        if (!have_ref) {
          ref = w;
          have_ref = true;
        } else if (w != ref) {
          return false;
        }
        ++kept;
      } catch (const std::runtime_error&) {
        continue;  // degenerate draw; try another base value
      }
    }
    if (kept < 5) throw std::runtime_error("no-valid-samples");
  }
  return true;
}

}  // namespace

SymmetryReport check_symmetries(QuadId id, Rng& rng, int samples) {
  SymmetryReport r;
  r.affine_linear = check_affine_linear(id, rng, samples);
  r.d4 = check_d4(id, rng, samples);
  r.tetrahedron = check_tetrahedron(id, rng, samples);
  return r;
}

namespace {

Rat solve_face(QuadId id, const Rat& u, const Rat& ut, const Rat& uh,
               const Rat& a, const Rat& b, const char* face) {
  try {
    return corner_solve(id, u, ut, uh, a, b);
  } catch (const std::runtime_error&) {
    throw std::runtime_error(std::string("degenerate-corner: ") + face);
  }
}

}  // namespace

CubeResult check_3d_consistency(QuadId id, const Rat& u, const Rat& ut,
                                const Rat& uh, const Rat& v, const Rat& a,
                                const Rat& b, const Rat& lp) {
  // Bottom and the two vertical faces adjacent to u determine the mixed
  // corners; the remaining three faces each determine the far corner.
  Rat uth = solve_face(id, u, ut, uh, a, b, "bottom");
  Rat vt = solve_face(id, u, ut, v, a, lp, "front");
  Rat vh = solve_face(id, u, uh, v, b, lp, "left");
  Rat w_top = solve_face(id, v, vt, vh, a, b, "top");
  Rat w_right = solve_face(id, ut, uth, vt, b, lp, "right");
  Rat w_back = solve_face(id, uh, uth, vh, a, lp, "back");
  CubeResult res;
  res.consistent = (w_top == w_right) && (w_top == w_back);
  res.value = w_top;
  return res;
}

bool check_zero_curvature(QuadId id, const Rat& u, const Rat& ut,
                          const Rat& uh, const Rat& a, const Rat& b,
                          const Rat& mu,
                          const std::vector<Rat>& lambda_samples) {
  Rat w = corner_solve(id, u, ut, uh, a, b);

  // Symbolic check over the spectral parameter.
  {
    SpectralPoint<RatFun> lam{RatFun::variable(), false};
    RatFun m(mu);
    auto lhs = lax_matrix_t<RatFun>(id, RatFun(w), RatFun(ut), RatFun(b), lam,
                                    m) *
               lax_matrix_t<RatFun>(id, RatFun(ut), RatFun(u), RatFun(a), lam,
                                    m);
    auto rhs = lax_matrix_t<RatFun>(id, RatFun(w), RatFun(uh), RatFun(a), lam,
                                    m) *
               lax_matrix_t<RatFun>(id, RatFun(uh), RatFun(u), RatFun(b), lam,
                                    m);
    if (!scaled_equal(lhs, rhs)) return false;
  }

  // Numeric spot checks; skip values where a prefactor or radicand
  // degenerates (those are poles of the normalization, not of the
  // identity).
  for (const Rat& ls : lambda_samples) {
    bool admissible = true;
    switch (id) {
      case QuadId::H1:
        admissible = (ls != mu);
        break;
      case QuadId::Q1_ADD:
        admissible = !ls.is_zero() && (ls != mu);
        break;
      case QuadId::Q1_MULT:
        admissible = (ls * ls != mu * mu);
        break;
    }
    if (!admissible) continue;
    SpectralPoint<Rat> lam{ls, false};
    auto lhs = lax_matrix_t<Rat>(id, w, ut, b, lam, mu) *
               lax_matrix_t<Rat>(id, ut, u, a, lam, mu);
    auto rhs = lax_matrix_t<Rat>(id, w, uh, a, lam, mu) *
               lax_matrix_t<Rat>(id, uh, u, b, lam, mu);
    if (!scaled_equal(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace latticemaps
