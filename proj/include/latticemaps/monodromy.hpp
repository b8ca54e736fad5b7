#ifndef LATTICEMAPS_MONODROMY_HPP
#define LATTICEMAPS_MONODROMY_HPP

//---------------------------------------------------------------------------
// monodromy.hpp — single-row and double-row transfer matrices over a strip,
// the conjugation identity satisfied under one step of the strip map, and
// invariant extraction from the double-row trace.
//
// The double-row matrix is
//     M(lambda) = K_minus(x_1; sigma(lambda)) * R(sigma(lambda))
//               * K_plus(x_n; lambda) * F(lambda),
// with F the forward ordered product L(x_n,x_{n-1}) ... L(x_2,x_1) and R the
// reverse product L(x_1,x_2) ... L(x_{n-1},x_n). One strip step transforms M
// by conjugation with E = L(x_1', x_2; sigma(a_1)) L(x_2, x_1; a_1) up to the
// sign eps_minus * eps_plus and an ell-ratio that is identically one for the
// registry families (it is still computed, never assumed).
//
// The trace is a rational function of lambda once even radical parts fold;
// clearing its structural denominator yields coefficient functions of the
// fields. Coefficients constant across random field seeds are discarded as
// pure-parameter terms; the survivors are classified by the smallest k with
// I composed with the k-th power of the map equal to I, and their functional
// independence is measured by an exact Jacobian rank via dual numbers.
//---------------------------------------------------------------------------

#include <string>
#include <utility>
#include <vector>

#include "latticemaps/dual.hpp"
#include "latticemaps/strip.hpp"

namespace latticemaps {

enum class RowDirection { FORWARD, REVERSE };

template <class S>
std::vector<S> lift_values(const std::vector<Rat>& v) {
  std::vector<S> out;
  out.reserve(v.size());
  for (const Rat& r : v) out.push_back(S(r));
  return out;
}

// Ordered product of Lax matrices along the strip at the given spectral
// point. FORWARD: L(x_n, x_{n-1}; a_{n-1}) ... L(x_2, x_1; a_1).
// REVERSE: L(x_1, x_2; a_1) ... L(x_{n-1}, x_n; a_{n-1}).
template <class S>
Scaled<S> single_row_product(QuadId quad, const std::vector<S>& x,
                             const std::vector<S>& a,
                             const SpectralPoint<S>& sp, const S& mu,
                             RowDirection dir) {
  int n = static_cast<int>(x.size());
  Scaled<S> m = Scaled<S>::identity();
  if (dir == RowDirection::FORWARD) {
    for (int j = n - 1; j >= 1; --j) {
      m = m * lax_matrix_t<S>(quad, x[j], x[j - 1], a[j - 1], sp, mu);
    }
  } else {
    for (int j = 1; j <= n - 1; ++j) {
      m = m * lax_matrix_t<S>(quad, x[j - 1], x[j], a[j - 1], sp, mu);
    }
  }
  return m;
}

// The double-row product at spectral value `lambda` with involution image
// `slambda`; works for symbolic (RatFun) and numeric (Rat, DualRat) rings.
template <class S>
Scaled<S> double_row_product(QuadId quad, BoundaryId minus_id,
                             BoundaryId plus_id, const std::vector<S>& x,
                             const std::vector<S>& a, const S& mu,
                             const S& lambda, const S& slambda) {
  SpectralPoint<S> base{lambda, false};
  SpectralPoint<S> refl{slambda, true};
  Scaled<S> fwd = single_row_product(quad, x, a, base, mu,
                                     RowDirection::FORWARD);
  Scaled<S> rev = single_row_product(quad, x, a, refl, mu,
                                     RowDirection::REVERSE);
  Scaled<S> km = k_matrix_t<S>(minus_id, x.front(), refl, mu);
  Scaled<S> kp = k_matrix_t<S>(plus_id, x.back(), base, mu);
  return km * rev * kp * fwd;
}

// Symbolic single row at the strip state (base spectral slot).
Scaled<RatFun> single_row_T(const StripConfig& config, const StripState& state,
                            RowDirection dir);

struct DoubleRow {
  Scaled<RatFun> matrix;      // M(lambda)
  Scaled<RatFun> conjugator;  // E(lambda), needs one nonsingular step
  StripConfig config;
  StripState state;
};

// Builds the double-row matrix and its conjugator at the given state.
// Propagates StripSingular when the conjugator's step does not exist.
DoubleRow double_row(const StripConfig& config, const StripState& state);

// Trace as (residual radical monomial, reduced rational part).
std::pair<Radical<RatFun>, RatFun> trace_t(const DoubleRow& dr);

// Exact check of M'(lambda) E = eps_minus eps_plus * ratio * E M(lambda),
// with the ell-ratio computed from the registry normalisations.
bool check_conjugation(const StripConfig& config, const StripState& state);

// Checks that each of the first `steps` steps multiplies the trace's
// rational part by eps_minus*eps_plus with an identical radical monomial.
bool check_trace_ratio(const StripConfig& config, const StripState& state,
                       long steps);

struct InvariantReport {
  std::vector<Rat> values;      // deduplicated survivor coefficients
  std::vector<long> k_class;    // smallest k with I^(k) = I along the probe
  int jacobian_rank = 0;        // exact rank of the survivor Jacobian
};

// The state-independent part of invariant extraction: the structural
// denominator cleared from the trace, the numerator degree bound, and the
// coefficient slots that carry field dependence (pure-parameter slots
// filtered by multi-seed constancy). Computed once per orbit, reusable at
// every state of that orbit.
struct InvariantScheme {
  bool zero_trace = false;
  Poly denom;
  int degree = 0;
  std::vector<int> kept;  // coefficient indices, highest power first
};

// Errors: "denominator-mismatch" if a non-structural lambda-factor remains.
InvariantScheme invariant_scheme(const StripConfig& config,
                                 const StripState& state);

// The kept trace coefficients at one state, in scheme order. Built from the
// double-row matrix alone, so it works at every state, including the last
// one before a singular step.
std::vector<Rat> invariant_values(const StripConfig& config,
                                  const StripState& state,
                                  const InvariantScheme& scheme);

// Clears the structural denominator of the trace, filters pure-parameter
// coefficients by multi-seed constancy, classifies each survivor's k and
// computes the Jacobian rank (including the plumbed x_1^2 invariant when the
// lower boundary forces x_1' = -x_1).
// Errors: "denominator-mismatch" if a non-structural lambda-factor remains.
InvariantReport extract_invariants(const DoubleRow& dr);

// {"values": ["p/q", ...], "k_class": [...], "jacobian_rank": r}
std::string invariant_report_json(const InvariantReport& report);

}  // namespace latticemaps

#endif  // LATTICEMAPS_MONODROMY_HPP
