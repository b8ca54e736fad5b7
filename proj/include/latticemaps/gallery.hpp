#ifndef LATTICEMAPS_GALLERY_HPP
#define LATTICEMAPS_GALLERY_HPP

//---------------------------------------------------------------------------
// gallery.hpp — closed-form reduced maps with their exact invariants.
//
// Each gallery entry is a birational map of Q^d given in closed form, the
// end product of eliminating the staircase construction for one small strip
// (or of a further change of variables on such a map). An entry carries named
// parameters; for the staircase-parameter entries (h1_3d_na, q1_3d,
// q1_reduced) one application of the map also transforms the parameters, so
// a GalleryMap instance is stateful: step() advances the point AND the
// stored parameter list. Every invariant is exact and carries a law factor:
// +1 (conserved) or -1 (alternating, so its square is conserved).
//
// A vanishing denominator in a step or an invariant raises
// std::runtime_error("singular-point").
//
// gallery_crosscheck runs a gallery map side by side with the strip engine
// that it condenses: both engines must produce identical points step by
// step, and if one orbit terminates in a singularity the other must
// terminate at the same step. The report records how far the budget was
// realized; a shared singular truncation still counts as a match.
//---------------------------------------------------------------------------

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "latticemaps/strip.hpp"

namespace latticemaps {

struct GalleryInvariant {
  std::string name;
  Rat law;  // +1 conserved, -1 alternating
  // Evaluates the invariant at a point, with the parameter list in the same
  // order as GalleryMap::param_names.
  std::function<Rat(const std::vector<Rat>&, const std::vector<Rat>&)> eval;
};

class GalleryMap {
public:
  const std::string& id() const { return id_; }
  int arity() const { return arity_; }
  const std::vector<std::string>& param_names() const { return param_names_; }
  const std::vector<Rat>& params() const { return params_; }

  // Applies the map once. For the staircase-parameter entries the stored
  // parameter list is updated in place; all other entries leave it fixed.
  std::vector<Rat> step(const std::vector<Rat>& point);

  // All invariants of the entry, evaluated with the current parameters.
  std::vector<Rat> invariants(const std::vector<Rat>& point) const;
  const std::vector<GalleryInvariant>& invariant_specs() const {
    return invariants_;
  }

private:
  friend GalleryMap make_gallery_map(
      const std::string& id,
      const std::vector<std::pair<std::string, Rat>>& overrides);

  std::string id_;
  int arity_ = 0;
  std::vector<std::string> param_names_;
  std::vector<Rat> params_;
  std::function<std::vector<Rat>(const std::vector<Rat>&,
                                 const std::vector<Rat>&)>
      step_fn_;
  // Parameter action of one application; empty for autonomous entries.
  std::function<std::vector<Rat>(const std::vector<Rat>&)> param_update_;
  std::vector<GalleryInvariant> invariants_;
};

// The registry listing, in display order.
std::vector<std::string> gallery_ids();

// Builds an entry with its documented default parameters; `overrides`
// replaces defaults by name. Unknown ids or parameter names throw
// std::invalid_argument.
GalleryMap make_gallery_map(
    const std::string& id,
    const std::vector<std::pair<std::string, Rat>>& overrides = {});

struct CrosscheckReport {
  std::string id;
  bool match = false;
  long steps_requested = 0;
  long steps_realized = 0;
  // True when both engines hit the same singular step; the orbit before it
  // still matched.
  bool truncated_singular = false;
  std::string detail;  // empty on match, first disagreement otherwise
};

// Runs the gallery map against the strip engine from the same seed. The
// strip configuration must realize the entry (family, boundary rows, width,
// mode); the gallery parameters are derived from it. Entries without a strip
// realization (h1_3d_y, h1_delta, q1_reduced, gamma) throw
// std::runtime_error.
CrosscheckReport gallery_crosscheck(const std::string& id,
                                    const StripConfig& config,
                                    const std::vector<Rat>& seed, long steps);

std::string crosscheck_report_json(const CrosscheckReport& report);

}  // namespace latticemaps

#endif  // LATTICEMAPS_GALLERY_HPP
