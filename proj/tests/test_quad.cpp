#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <vector>

#include "latticemaps/quad.hpp"

using namespace latticemaps;

TEST_CASE("equation ids round-trip") {
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    CHECK(quad_id_from_string(to_string(id)) == id);
  }
  CHECK_THROWS_WITH(quad_id_from_string("h2"), "unknown equation id: h2");
}

TEST_CASE("evaluator oracles") {
  // Discrete wave form: (u-uth)(ut-uh) + b - a.
  CHECK(quad_eval(QuadId::H1, Rat(0), Rat(1), Rat(2), Rat(-2), Rat(1),
                  Rat(3)) == Rat(0));
  CHECK(quad_eval(QuadId::H1, Rat(0), Rat(0), Rat(0), Rat(0), Rat(5),
                  Rat(5)) == Rat(0));
  // Constant fields solve the cross-ratio forms for any parameters.
  CHECK(quad_eval(QuadId::Q1_ADD, Rat(1), Rat(1), Rat(1), Rat(1), Rat(2),
                  Rat(3)) == Rat(0));
  CHECK(quad_eval(QuadId::Q1_MULT, Rat(4), Rat(4), Rat(4), Rat(4), Rat(2),
                  Rat(3)) == Rat(0));
  // A hand value for the additive cross-ratio form:
  // 2*(1-3)*(2-4) - 5*(1-2)*(3-4) = 8 - 5 = 3.
  CHECK(quad_eval(QuadId::Q1_ADD, Rat(1), Rat(2), Rat(3), Rat(4), Rat(2),
                  Rat(5)) == Rat(3));
}

TEST_CASE("corner solve oracles") {
  CHECK(corner_solve(QuadId::H1, Rat(0), Rat(1), Rat(2), Rat(1), Rat(3)) ==
        Rat(-2));
  CHECK(corner_solve(QuadId::H1, Rat(2), Rat(5), Rat(3), Rat(1), Rat(4)) ==
        Rat(7, 2));
  // Solved corners satisfy the equation in every slot.
  Rng rng(11);
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    for (int s = 0; s < 20; ++s) {
      Rat a = rng.nonzero_rat(), b = rng.nonzero_rat();
      std::array<Rat, 3> known{rng.rat(), rng.rat(), rng.rat()};
      for (Corner slot :
           {Corner::U, Corner::UT, Corner::UH, Corner::UTH}) {
        try {
          Rat x = quad_solve_t<Rat>(id, slot, known, a, b);
          std::array<Rat, 4> w;
          std::size_t j = 0;
          for (std::size_t i = 0; i < 4; ++i)
            w[i] = (i == static_cast<std::size_t>(slot)) ? x : known[j++];
          CHECK(quad_eval(id, w[0], w[1], w[2], w[3], a, b) == Rat(0));
        } catch (const std::runtime_error&) {
          // degenerate draw is acceptable here
        }
      }
    }
  }
}

TEST_CASE("degenerate corner is reported") {
  // With ut == uh and equal parameters the wave form vanishes identically
  // in the far corner, so no solve is possible.
  Rat u(7), a(3);
  CHECK_THROWS_WITH(corner_solve(QuadId::H1, u, a, a, Rat(2), Rat(2)),
                    "degenerate-corner");
}

TEST_CASE("symmetry report per equation") {
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    CAPTURE(to_string(id));
    Rng rng(101);
    SymmetryReport r = check_symmetries(id, rng, 100);
    CHECK(r.affine_linear);
    CHECK(r.d4);
    CHECK(r.tetrahedron);
    CHECK(r.all());
  }
}

TEST_CASE("stored reversal/swap signs are the only consistent ones") {
  auto [omega, delta] = d4_signs(QuadId::H1);
  CHECK(omega == 1);
  CHECK(delta == -1);
  Rng rng(5);
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    Rat a = rng.nonzero_rat(), b = rng.nonzero_rat();
    Rat u = rng.rat(), ut = rng.rat(), uh = rng.rat(), uth = rng.rat();
    Rat q = quad_eval(id, u, ut, uh, uth, a, b);
    if (q.is_zero()) continue;
    // Opposite signs must fail on a generic sample.
    CHECK(q != -quad_eval(id, ut, u, uth, uh, a, b));
    CHECK(q != quad_eval(id, u, uh, ut, uth, b, a));
  }
}

TEST_CASE("consistency around the cube: worked example") {
  CubeResult res = check_3d_consistency(QuadId::H1, Rat(0), Rat(1), Rat(3),
                                        Rat(5), Rat(2), Rat(3), Rat(7));
  CHECK(res.consistent);
  CHECK(res.value == Rat(19, 3));
}

TEST_CASE("consistency around the cube: random samples") {
  Rng rng(23);
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    CAPTURE(to_string(id));
    int kept = 0;
    for (int trial = 0; trial < 200 && kept < 25; ++trial) {
      Rat a = rng.nonzero_rat(), b = rng.nonzero_rat(),
          lp = rng.nonzero_rat();
      try {
        CubeResult res = check_3d_consistency(id, rng.rat(), rng.rat(),
                                              rng.rat(), rng.rat(), a, b, lp);
        CHECK(res.consistent);
        ++kept;
      } catch (const std::runtime_error&) {
        continue;
      }
    }
    CHECK(kept == 25);
  }
}

TEST_CASE("cube route disagreement is detectable") {
  // Re-solving the right face with its parameters swapped must, on a
  // generic sample, disagree with the top-face value.
  Rat u(0), ut(1), uh(3), v(5), a(2), b(3), lp(7);
  Rat uth = corner_solve(QuadId::H1, u, ut, uh, a, b);
  Rat vt = corner_solve(QuadId::H1, u, ut, v, a, lp);
  Rat wrong = corner_solve(QuadId::H1, ut, uth, vt, lp, b);
  CHECK(wrong != Rat(19, 3));
}

TEST_CASE("degenerate cube face carries the face tag") {
  // ut == uh makes the bottom solve degenerate for the wave form when the
  // parameters coincide.
  CHECK_THROWS_WITH(check_3d_consistency(QuadId::H1, Rat(7), Rat(2), Rat(2),
                                         Rat(5), Rat(3), Rat(3), Rat(4)),
                    "degenerate-corner: bottom");
}

TEST_CASE("transition matrix oracle for the wave form") {
  auto L = lax_matrix(QuadId::H1, Rat(1), Rat(0), Rat(1), Rat(3));
  RatFun lam = RatFun::variable();
  CHECK(L.core.a == RatFun(Rat(0)));
  CHECK(L.core.b == RatFun(Rat(1)) - lam);
  CHECK(L.core.c == RatFun(Rat(1)));
  CHECK(L.core.d == RatFun(Rat(-1)));
  CHECK(L.scalar == RatFun(Rat(1)));
  REQUIRE(L.radical.factors().size() == 1);
  const auto& f = L.radical.factors().begin()->second;
  CHECK(L.radical.factors().begin()->first == "h1.s1");
  CHECK(f.texp == -1);
  CHECK(f.radicand == lam - RatFun(Rat(3)));
}

TEST_CASE("reflected spectral slot uses the image radicand") {
  // At the reflected point 2*mu - lambda the radicand becomes mu - lambda.
  RatFun lam = RatFun::variable();
  RatFun mu(Rat(3));
  SpectralPoint<RatFun> refl{RatFun(Rat(6)) - lam, true};
  auto L = lax_matrix_t<RatFun>(QuadId::H1, RatFun(Rat(1)), RatFun(Rat(0)),
                                RatFun(Rat(1)), refl, mu);
  REQUIRE(L.radical.factors().count("h1.s2") == 1);
  CHECK(L.radical.factors().at("h1.s2").radicand == mu - lam);
}

TEST_CASE("two-step product collapses to ell times identity") {
  RatFun lam = RatFun::variable();
  SUBCASE("wave form") {
    auto fwd = lax_matrix(QuadId::H1, Rat(1), Rat(0), Rat(1), Rat(3));
    auto rev = lax_matrix(QuadId::H1, Rat(0), Rat(1), Rat(1), Rat(3));
    auto prod = (fwd * rev).normalized();
    RatFun l = ell(QuadId::H1, Rat(1), Rat(3));
    CHECK(l == (RatFun(Rat(1)) - lam) / (lam - RatFun(Rat(3))));
    CHECK(prod.radical.factors().empty());
    CHECK(prod.core.a == l);
    CHECK(prod.core.b == RatFun(Rat(0)));
    CHECK(prod.core.c == RatFun(Rat(0)));
    CHECK(prod.core.d == l);
  }
  SUBCASE("all equations, random edges") {
    Rng rng(77);
    for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
      CAPTURE(to_string(id));
      for (int s = 0; s < 10; ++s) {
        Rat mu = rng.nonzero_rat();
        Rat alpha = draw_admissible(
            [&] { return rng.nonzero_rat(); },
            [&](const Rat& v) { return v * v != mu * mu; });
        Rat x = rng.rat();
        Rat y = draw_admissible([&] { return rng.rat(); },
                                [&](const Rat& v) { return v != x; });
        SpectralPoint<RatFun> lp{lam, false};
        auto fwd = lax_matrix_t<RatFun>(id, RatFun(x), RatFun(y),
                                        RatFun(alpha), lp, RatFun(mu));
        auto rev = lax_matrix_t<RatFun>(id, RatFun(y), RatFun(x),
                                        RatFun(alpha), lp, RatFun(mu));
        auto prod = fwd * rev;
        Scaled<RatFun> expect = Scaled<RatFun>::identity();
        CHECK(ll_sign(id) == 1);
        CHECK(scaled_equal_up_to(prod, expect, ell(id, alpha, mu)));
      }
    }
  }
}

TEST_CASE("ell oracle for the multiplicative normalization") {
  RatFun lam = RatFun::variable();
  RatFun expect = (RatFun(Rat(4)) - lam * lam) /
                  (RatFun(Rat(2)) * (lam * lam - RatFun(Rat(1))));
  CHECK(ell(QuadId::Q1_MULT, Rat(2), Rat(1)) == expect);
}

TEST_CASE("coincident edge values reject the cross-ratio transition") {
  SpectralPoint<RatFun> lp{RatFun::variable(), false};
  CHECK_THROWS_WITH(lax_matrix_t<RatFun>(QuadId::Q1_ADD, RatFun(Rat(2)),
                                         RatFun(Rat(2)), RatFun(Rat(1)), lp,
                                         RatFun(Rat(5))),
                    "degenerate-edge");
  CHECK_THROWS_WITH(lax_matrix_t<RatFun>(QuadId::Q1_MULT, RatFun(Rat(2)),
                                         RatFun(Rat(2)), RatFun(Rat(1)), lp,
                                         RatFun(Rat(5))),
                    "degenerate-edge");
  // The wave-form transition has no such restriction.
  CHECK_NOTHROW(lax_matrix(QuadId::H1, Rat(2), Rat(2), Rat(1), Rat(5)));
}

TEST_CASE("zero curvature: worked example with explicit cores") {
  // u=0, ut=1, uh=3, a=2, b=3, mu=5 solves the far corner to -1/2 and both
  // ordered products share the core [[7/2-l, -3/2], [1/2, 3/2-l]].
  Rat u(0), ut(1), uh(3), a(2), b(3), mu(5);
  Rat w = corner_solve(QuadId::H1, u, ut, uh, a, b);
  CHECK(w == Rat(-1, 2));
  auto lhs = lax_matrix(QuadId::H1, w, ut, b, mu) *
             lax_matrix(QuadId::H1, ut, u, a, mu);
  auto rhs = lax_matrix(QuadId::H1, w, uh, a, mu) *
             lax_matrix(QuadId::H1, uh, u, b, mu);
  RatFun lam = RatFun::variable();
  for (const auto* side : {&lhs, &rhs}) {
    CHECK(side->core.a == RatFun(Rat(7, 2)) - lam);
    CHECK(side->core.b == RatFun(Rat(-3, 2)));
    CHECK(side->core.c == RatFun(Rat(1, 2)));
    CHECK(side->core.d == RatFun(Rat(3, 2)) - lam);
  }
  CHECK(scaled_equal(lhs, rhs));
  CHECK(check_zero_curvature(QuadId::H1, u, ut, uh, a, b, mu,
                             {Rat(0), Rat(1), Rat(5), Rat(7)}));
}

TEST_CASE("zero curvature holds on random samples for all equations") {
  Rng rng(301);
  for (QuadId id : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    CAPTURE(to_string(id));
    int kept = 0;
    for (int trial = 0; trial < 200 && kept < 15; ++trial) {
      Rat mu = rng.nonzero_rat();
      Rat a = rng.nonzero_rat(), b = rng.nonzero_rat();
      if (id == QuadId::Q1_MULT && (a * a == mu * mu || b * b == mu * mu))
        continue;
      try {
        CHECK(check_zero_curvature(id, rng.rat(), rng.rat(), rng.rat(), a, b,
                                   mu, {rng.rat(), rng.rat()}));
        ++kept;
      } catch (const std::runtime_error&) {
        continue;
      }
    }
    CHECK(kept == 15);
  }
}

TEST_CASE("zero curvature fails for a tampered corner") {
  Rat u(0), ut(1), uh(3), a(2), b(3), mu(5);
  Rat w = corner_solve(QuadId::H1, u, ut, uh, a, b) + Rat(1);
  auto lhs = lax_matrix(QuadId::H1, w, ut, b, mu) *
             lax_matrix(QuadId::H1, ut, u, a, mu);
  auto rhs = lax_matrix(QuadId::H1, w, uh, a, mu) *
             lax_matrix(QuadId::H1, uh, u, b, mu);
  CHECK(!scaled_equal(lhs, rhs));
}
