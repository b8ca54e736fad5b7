#include "latticemaps/boundary.hpp"

#include <functional>

namespace latticemaps {

Involution involution_for(QuadId id, const Rat& mu) {
  switch (id) {
    case QuadId::H1:
    case QuadId::Q1_ADD:
      return {InvKind::ADDITIVE, mu};
    case QuadId::Q1_MULT:
      if (mu.is_zero()) throw std::runtime_error("involution-pole");
      return {InvKind::MULTIPLICATIVE, mu};
  }
  throw std::logic_error("unknown quad id");
}

Rat sigma_apply(const Involution& inv, const Rat& v) {
  return sigma_apply_t<Rat>(inv, v);
}

RatFun sigma_lambda(const Involution& inv) {
  return sigma_apply_t<RatFun>(inv, RatFun::variable());
}

std::string to_string(BoundaryId id) {
  switch (id) {
    case BoundaryId::H1_YZX:
      return "h1_yzx";
    case BoundaryId::H1_XZ:
      return "h1_xz";
    case BoundaryId::Q1ADD_ROW1:
      return "q1add_row1";
    case BoundaryId::Q1ADD_ROW2:
      return "q1add_row2";
    case BoundaryId::Q1MULT_ROW1:
      return "q1mult_row1";
    case BoundaryId::Q1MULT_ROW2:
      return "q1mult_row2";
    case BoundaryId::Q1MULT_ROW3:
      return "q1mult_row3";
    case BoundaryId::Q1MULT_ROW4:
      return "q1mult_row4";
  }
  throw std::logic_error("unknown boundary id");
}

BoundaryId boundary_id_from_string(const std::string& s) {
  for (BoundaryId id : all_boundary_ids()) {
    if (to_string(id) == s) return id;
  }
  throw std::runtime_error("unknown boundary id: " + s);
}

std::vector<BoundaryId> all_boundary_ids() {
  return {BoundaryId::H1_YZX,      BoundaryId::H1_XZ,
          BoundaryId::Q1ADD_ROW1,  BoundaryId::Q1ADD_ROW2,
          BoundaryId::Q1MULT_ROW1, BoundaryId::Q1MULT_ROW2,
          BoundaryId::Q1MULT_ROW3, BoundaryId::Q1MULT_ROW4};
}

std::vector<BoundaryId> boundary_ids_of(QuadId quad) {
  std::vector<BoundaryId> out;
  for (BoundaryId id : all_boundary_ids()) {
    if (quad_of(id) == quad) out.push_back(id);
  }
  return out;
}

QuadId quad_of(BoundaryId id) {
  switch (id) {
    case BoundaryId::H1_YZX:
    case BoundaryId::H1_XZ:
      return QuadId::H1;
    case BoundaryId::Q1ADD_ROW1:
    case BoundaryId::Q1ADD_ROW2:
      return QuadId::Q1_ADD;
    default:
      return QuadId::Q1_MULT;
  }
}

int epsilon_of(BoundaryId id) {
  switch (id) {
    case BoundaryId::H1_YZX:
    case BoundaryId::Q1ADD_ROW1:
    case BoundaryId::Q1MULT_ROW1:
    case BoundaryId::Q1MULT_ROW3:
      return 1;
    default:
      return -1;
  }
}

BoundarySpec make_boundary(BoundaryId id, const Rat& mu) {
  QuadId quad = quad_of(id);
  return BoundarySpec{id, quad, involution_for(quad, mu), epsilon_of(id)};
}

Rat boundary_solve(const BoundarySpec& spec, const Rat& x, const Rat& y,
                   const Rat& a) {
  return boundary_solve_t<Rat>(spec, x, y, a);
}

Scaled<RatFun> k_matrix(const BoundarySpec& spec, const Rat& x) {
  SpectralPoint<RatFun> lam{RatFun::variable(), false};
  return k_matrix_t<RatFun>(spec.id, RatFun(x), lam, RatFun(spec.inv.mu));
}

Mat2<RatFun> dual_mobius_core(const BoundarySpec& spec, const Rat& x) {
  RatFun lam = RatFun::variable();
  RatFun xf(x);
  auto p = [&](long y, long c) {
    return boundary_p_t<RatFun>(spec, RatFun(Rat(y)), xf, RatFun(Rat(c)),
                                lam);
  };
  RatFun p00 = p(0, 0), p10 = p(1, 0), p01 = p(0, 1), p11 = p(1, 1);
  RatFun D = p00;
  RatFun B = p10 - p00;
  RatFun C = p01 - p00;
  RatFun A = p11 - p10 - p01 + p00;
  if (A.is_zero() && C.is_zero())
    throw std::runtime_error("degenerate-dual");
  return {-B, -D, A, C};
}

namespace {

bool mat_proportional(const Mat2<RatFun>& e, const Mat2<RatFun>& t) {
  const RatFun* ev[4] = {&e.a, &e.b, &e.c, &e.d};
  const RatFun* tv[4] = {&t.a, &t.b, &t.c, &t.d};
  bool e_nonzero = false;
  for (int i = 0; i < 4; ++i) e_nonzero = e_nonzero || !ev[i]->is_zero();
  if (!e_nonzero) return false;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*ev[i] * *tv[j] != *ev[j] * *tv[i]) return false;
    }
  }
  return true;
}

}  // namespace

Scaled<RatFun> boundary_matrix_from_dual(const BoundarySpec& spec,
                                         const Rat& x) {
  Mat2<RatFun> extracted = dual_mobius_core(spec, x);
  Scaled<RatFun> stored = k_matrix(spec, x);
  if (!mat_proportional(extracted, stored.core)) {
    throw std::logic_error("dual Moebius action does not match the stored "
                           "boundary matrix");
  }
  return stored;
}

bool check_k_involution(const BoundarySpec& spec, const Rat& x) {
  RatFun lam = RatFun::variable();
  RatFun mu(spec.inv.mu);
  RatFun xf(x);
  auto k1 = k_matrix_t<RatFun>(spec.id, xf, {lam, false}, mu);
  auto k2 = k_matrix_t<RatFun>(spec.id, xf, {sigma_lambda(spec.inv), true},
                               mu);
  return scaled_equal(k1 * k2, Scaled<RatFun>::identity());
}

RatFun k_determinant(const BoundarySpec& spec, const Rat& x) {
  return k_matrix(spec, x).det();
}

//--- duality ---------------------------------------------------------------

namespace {

// G and P evaluated at the same sweep values must have a constant ratio.
// Returns {decided, ratio}; undecided means both sides vanished everywhere.
struct RatioCheck {
  bool decided = false;
  bool constant = false;
  Rat chi;
};

RatioCheck constant_ratio(const std::vector<Rat>& G, const std::vector<Rat>& P) {
  RatioCheck out;
  std::size_t pivot = G.size();
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!P[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == G.size()) {
    for (const Rat& g : G) {
      if (!g.is_zero()) {
        out.decided = true;
        out.constant = false;  // G lives where P vanished identically
        return out;
      }
    }
    return out;  // undecided: 0/0 on the whole sweep
  }
  out.decided = true;
  out.constant = true;
  out.chi = G[pivot] / P[pivot];
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i] * P[pivot] != G[pivot] * P[i]) {
      out.constant = false;
      break;
    }
  }
  return out;
}

std::array<Rat, 3> distinct_triple(Rng& rng) {
  std::array<Rat, 3> out;
  out[0] = rng.rat();
  out[1] = draw_admissible([&] { return rng.rat(); },
                           [&](const Rat& v) { return v != out[0]; });
  out[2] = draw_admissible(
      [&] { return rng.rat(); },
      [&](const Rat& v) { return v != out[0] && v != out[1]; });
  return out;
}

}  // namespace

DualityReport verify_duality(const BoundarySpec& spec, Rng& rng, int samples,
                             std::optional<BoundaryId> dual_override) {
  BoundaryId pid = dual_override.value_or(spec.id);
  QuadId quad = spec.quad;
  auto q2 = [&](const Rat& x, const Rat& y, const Rat& z, const Rat& a,
                const Rat& b) {
    return boundary_q2_t<Rat>(spec.id, x, y, z, a, b);
  };
  auto p2 = [&](const Rat& y, const Rat& x, const Rat& c, const Rat& a,
                const Rat& b) { return boundary_p2_t<Rat>(pid, y, x, c, a, b); };

  DualityReport report;
  report.holds = true;

  // One elimination round: solve `lhs_lin` for the eliminated slot, sweep
  // the designated variable, and demand a constant ratio against `rhs`.
  // Each part redraws on degenerate samples with bounded retries.
  auto run_part = [&](const std::function<RatioCheck(Rng&)>& part,
                      bool record_chi) {
    for (int s = 0; s < samples; ++s) {
      bool done = false;
      for (int attempt = 0; attempt < 64 && !done; ++attempt) {
        RatioCheck rc = part(rng);
        if (!rc.decided) continue;
        if (!rc.constant) report.holds = false;
        if (record_chi && rc.constant) report.chi_samples.push_back(rc.chi);
        done = true;
      }
      if (!done) throw std::runtime_error("no-valid-samples");
    }
  };

  auto draw_params = [&](Rng& r) {
    return std::pair<Rat, Rat>{r.nonzero_rat(), r.nonzero_rat()};
  };

  // Main identity: q1 * Q(x, y, c, -q2/q1) against p(y, x, c).
  run_part(
      [&](Rng& r) -> RatioCheck {
        auto [a, b] = draw_params(r);
        Rat x = r.rat(), y = r.rat();
        Rat f0 = q2(x, y, Rat(0), a, b);
        Rat lin = q2(x, y, Rat(1), a, b) - f0;
        if (lin.is_zero()) return {};
        Rat w = -f0 / lin;
        std::array<Rat, 3> cs = distinct_triple(r);
        std::vector<Rat> G, P;
        for (const Rat& c : cs) {
          G.push_back(lin * quad_eval(quad, x, y, c, w, a, b));
          P.push_back(p2(y, x, c, a, b));
        }
        return constant_ratio(G, P);
      },
      true);

  // Part (a): eliminate x from q; compare against p(c, z, y).
  run_part(
      [&](Rng& r) -> RatioCheck {
        auto [a, b] = draw_params(r);
        Rat y = r.rat(), z = r.rat();
        Rat f0 = q2(Rat(0), y, z, a, b);
        Rat lin = q2(Rat(1), y, z, a, b) - f0;
        if (lin.is_zero()) return {};
        Rat xs = -f0 / lin;
        std::array<Rat, 3> cs = distinct_triple(r);
        std::vector<Rat> G, P;
        for (const Rat& c : cs) {
          G.push_back(lin * quad_eval(quad, xs, y, c, z, a, b));
          P.push_back(p2(c, z, y, a, b));
        }
        return constant_ratio(G, P);
      },
      false);

  // Part (b): eliminate c from p; compare against q(x, y, z).
  run_part(
      [&](Rng& r) -> RatioCheck {
        auto [a, b] = draw_params(r);
        Rat x = r.rat(), y = r.rat();
        Rat f0 = p2(y, x, Rat(0), a, b);
        Rat lin = p2(y, x, Rat(1), a, b) - f0;
        if (lin.is_zero()) return {};
        Rat cs = -f0 / lin;
        std::array<Rat, 3> zs = distinct_triple(r);
        std::vector<Rat> G, P;
        for (const Rat& z : zs) {
          G.push_back(lin * quad_eval(quad, x, y, cs, z, a, b));
          P.push_back(q2(x, y, z, a, b));
        }
        return constant_ratio(G, P);
      },
      false);

  // Part (c): eliminate y from p; compare against q(z, c, x).
  run_part(
      [&](Rng& r) -> RatioCheck {
        auto [a, b] = draw_params(r);
        Rat x = r.rat(), c = r.rat();
        Rat f0 = p2(Rat(0), x, c, a, b);
        Rat lin = p2(Rat(1), x, c, a, b) - f0;
        if (lin.is_zero()) return {};
        Rat ys = -f0 / lin;
        std::array<Rat, 3> zs = distinct_triple(r);
        std::vector<Rat> G, P;
        for (const Rat& z : zs) {
          G.push_back(lin * quad_eval(quad, x, ys, c, z, a, b));
          P.push_back(q2(z, c, x, a, b));
        }
        return constant_ratio(G, P);
      },
      false);

  return report;
}

//--- consistency stencils -----------------------------------------------------

namespace {

Rat with_face(const char* face, const std::function<Rat()>& f) {
  try {
    return f();
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(e.what()) + ": " + face);
  }
}

}  // namespace

BoundaryConsistency check_boundary_consistency(
    const BoundarySpec& spec, const Rat& x, const Rat& y, const Rat& u,
    const Rat& a, const Rat& lp,
    std::optional<std::pair<Rat, Rat>> beta_eta_override) {
  QuadId quad = spec.quad;
  Rat beta = beta_eta_override ? beta_eta_override->first
                               : sigma_apply(spec.inv, a);
  Rat eta = beta_eta_override ? beta_eta_override->second
                              : sigma_apply(spec.inv, lp);

  Rat z = with_face("z-face", [&] { return boundary_solve(spec, x, y, a); });
  Rat v =
      with_face("v-face", [&] { return corner_solve(quad, x, y, u, a, lp); });
  Rat r = with_face("r-face", [&] { return boundary_solve(spec, x, u, lp); });
  Rat w = with_face("w-face",
                    [&] { return corner_solve(quad, y, z, v, beta, lp); });
  Rat s = with_face("s-face",
                    [&] { return corner_solve(quad, u, v, r, a, eta); });
  Rat t1 =
      with_face("t1-face", [&] { return boundary_solve(spec, r, s, a); });
  Rat t2 =
      with_face("t2-face", [&] { return boundary_solve(spec, z, w, lp); });
  Rat t3 = with_face("t3-face",
                     [&] { return corner_solve(quad, v, w, s, beta, eta); });

  BoundaryConsistency out;
  out.consistent = (t1 == t2) && (t1 == t3);
  out.t = t1;
  return out;
}

DualConsistency check_dual_boundary_consistency(
    const BoundarySpec& spec, const Rat& x, const Rat& y, const Rat& u,
    const Rat& a, const Rat& lp, std::optional<BoundaryId> dual_override) {
  QuadId quad = spec.quad;
  BoundarySpec dual_spec =
      dual_override ? make_boundary(*dual_override, spec.inv.mu) : spec;
  Rat beta = sigma_apply(spec.inv, a);
  Rat eta = sigma_apply(spec.inv, lp);

  // Field-first route.
  Rat v =
      with_face("v-face", [&] { return corner_solve(quad, x, y, u, lp, a); });
  Rat r = with_face("r-face", [&] { return boundary_solve(spec, x, u, a); });
  Rat s = with_face("s-face",
                    [&] { return corner_solve(quad, u, v, r, lp, beta); });
  Rat eA = with_face("eA-face",
                     [&] { return dual_solve_c_t<Rat>(dual_spec, s, r, lp); });

  // Dual-first route.
  Rat c = with_face("c-face",
                    [&] { return dual_solve_c_t<Rat>(dual_spec, y, x, lp); });
  Rat d = with_face("d-face",
                    [&] { return corner_solve(quad, x, c, u, eta, a); });
  Rat eB = with_face("eB-face",
                     [&] { return corner_solve(quad, u, d, r, eta, beta); });

  DualConsistency out;
  out.consistent = (eA == eB);
  out.e = eA;
  return out;
}

//--- boundary zero curvature ----------------------------------------------------

bool check_boundary_zcc_signed(const BoundarySpec& spec, const Rat& x,
                               const Rat& u, const Rat& a, int sign) {
  QuadId quad = spec.quad;
  Rat r = boundary_solve(spec, x, u, a);
  Rat sa = sigma_apply(spec.inv, a);

  RatFun lam = RatFun::variable();
  RatFun slam = sigma_lambda(spec.inv);
  RatFun mu(spec.inv.mu);
  SpectralPoint<RatFun> base{lam, false};
  SpectralPoint<RatFun> refl{slam, true};
  RatFun xf(x), uf(u), rf(r), af(a), saf(sa);

  auto lhs = lax_matrix_t<RatFun>(quad, rf, uf, saf, refl, mu) *
             lax_matrix_t<RatFun>(quad, uf, xf, af, refl, mu) *
             k_matrix_t<RatFun>(spec.id, xf, base, mu);
  auto rhs = k_matrix_t<RatFun>(spec.id, rf, base, mu) *
             lax_matrix_t<RatFun>(quad, rf, uf, saf, base, mu) *
             lax_matrix_t<RatFun>(quad, uf, xf, af, base, mu);
  return scaled_equal(lhs, rhs.scaled_by(RatFun(Rat(sign))));
}

bool check_boundary_zcc(const BoundarySpec& spec, const Rat& x, const Rat& u,
                        const Rat& a) {
  return check_boundary_zcc_signed(spec, x, u, a, spec.epsilon);
}

bool check_z2_symmetry(const BoundarySpec& spec, Rng& rng, int samples) {
  for (int s = 0; s < samples; ++s) {
    Rat a = rng.nonzero_rat(), b = rng.nonzero_rat();
    Rat x = rng.rat(), y = rng.rat(), z = rng.rat();
    Rat h = h_factor_t<Rat>(spec.id, a, b);
    Rat hr = h_factor_t<Rat>(spec.id, b, a);
    if (h * hr != Rat(1)) return false;
    Rat lhs = boundary_q2_t<Rat>(spec.id, x, y, z, a, b);
    Rat rhs = h * boundary_q2_t<Rat>(spec.id, z, y, x, b, a);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace latticemaps
