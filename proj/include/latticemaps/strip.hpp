#ifndef LATTICEMAPS_STRIP_HPP
#define LATTICEMAPS_STRIP_HPP

//---------------------------------------------------------------------------
// strip.hpp — open-boundary reduction maps on a width-n strip.
//
// A strip carries fields x_1..x_n on a staircase between two boundary lines
// and parameters a_1..a_{n-1} on the lattice edges. One upward step solves
// the lower boundary triangle, the interior quadrilaterals (odd columns
// against old neighbours, even columns against new ones), and the upper
// boundary triangle; in GENERAL mode the parameter list is rotated through
// the involution, in AUTONOMOUS mode the alternating list (a, sigma a, ...)
// is a fixed point of the same rotation. The downward step is the literal
// inverse (same faces, solved in the opposite slots).
//
// A degenerate solve surfaces as StripSingular ("singular-orbit(step,face)");
// iterate() converts it into data on the orbit record.
//---------------------------------------------------------------------------

#include <optional>
#include <string>
#include <vector>

#include "latticemaps/boundary.hpp"

namespace latticemaps {

enum class StripMode { AUTONOMOUS, GENERAL };

struct StripConfig {
  QuadId quad;
  BoundaryId minus_id;
  BoundaryId plus_id;
  int n = 2;
  Rat mu;
  StripMode mode = StripMode::AUTONOMOUS;
  Rat alpha;                // AUTONOMOUS
  std::vector<Rat> alphas;  // GENERAL, length n-1

  Involution involution() const { return involution_for(quad, mu); }
  BoundarySpec minus() const { return make_boundary(minus_id, mu); }
  BoundarySpec plus() const { return make_boundary(plus_id, mu); }
};

StripConfig strip_autonomous(QuadId quad, BoundaryId minus, BoundaryId plus,
                             int n, const Rat& mu, const Rat& alpha);
StripConfig strip_general(QuadId quad, BoundaryId minus, BoundaryId plus,
                          int n, const Rat& mu,
                          const std::vector<Rat>& alphas);

// The initial parameter list: alternating (a, sigma a, ...) in AUTONOMOUS
// mode, the given list in GENERAL mode.
std::vector<Rat> expand_params(const StripConfig& config);

struct StripState {
  std::vector<Rat> x;  // length n
  std::vector<Rat> a;  // length n-1
  long step = 0;
};

StripState initial_state(const StripConfig& config,
                         const std::vector<Rat>& fields);

struct SingularInfo {
  long step = 0;
  std::string face;
};

// Raised when a staircase solve degenerates; message is
// "singular-orbit(step,face)".
class StripSingular : public std::runtime_error {
public:
  StripSingular(long step, const std::string& face);
  const SingularInfo& info() const { return info_; }

private:
  SingularInfo info_;
};

struct OrbitRecord {
  std::vector<StripState> states;
  std::optional<SingularInfo> singular_at;
};

// One upward step. By default every produced field is re-checked against its
// defining face equation; pass check_relations = false to skip that redundant
// re-verification (the solves enforce the relations by construction) on long
// exact orbits where field sizes grow and a conserved quantity is being
// monitored anyway.
StripState step_up(const StripConfig& config, const StripState& s,
                   bool check_relations = true);

// The literal inverse of step_up: step_down(step_up(s)) == s.
StripState step_down(const StripConfig& config, const StripState& s,
                     bool check_relations = true);

// Applies step_up `steps` times, recording every state; a singularity ends
// the record early and is reported as data.
OrbitRecord iterate(const StripConfig& config, const StripState& start,
                    long steps);

// The (n-1)-th power of step_up; in GENERAL mode this restores the
// parameter list.
StripState autonomous_power(const StripConfig& config, const StripState& s);

// Independent recheck that `next` solves every face equation over `prev`
// and carries the rotated parameters. Throws std::logic_error on violation.
void verify_step_relations(const StripConfig& config, const StripState& prev,
                           const StripState& next);

// The parameter rotation applied by one upward step.
std::vector<Rat> rotate_params_up(const StripConfig& config,
                                  const std::vector<Rat>& a);
std::vector<Rat> rotate_params_down(const StripConfig& config,
                                    const std::vector<Rat>& a);

}  // namespace latticemaps

#endif  // LATTICEMAPS_STRIP_HPP
