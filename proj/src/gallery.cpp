#include "latticemaps/gallery.hpp"

#include <optional>
#include <stdexcept>

namespace latticemaps {
namespace {

Rat ratdiv(const Rat& num, const Rat& den) {
  if (den.is_zero()) throw std::runtime_error("singular-point");
  return num / den;
}

//---------------------------------------------------------------------------
// Step rules. Each takes (point, params) with params in registry order.
//---------------------------------------------------------------------------

std::vector<Rat> step_h1_2d(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  const Rat& c = q[0];
  return {-p[0], p[1] + ratdiv(c, Rat(2) * p[0])};
}

std::vector<Rat> step_h1_3d(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  const Rat& c = q[0];
  Rat x2 = p[1] + ratdiv(Rat(2) * c * p[1],
                         Rat(2) * p[0] * p[1] + Rat(2) * p[1] * p[2] - c);
  Rat x3 = p[2] - ratdiv(c, Rat(2) * p[1]);
  return {-p[0], x2, x3};
}

std::vector<Rat> step_h1_3d_y(const std::vector<Rat>& p,
                              const std::vector<Rat>&) {
  Rat y2 = p[1] - ratdiv((p[0] - p[1]) * (p[1] + p[2]),
                         Rat(2) * p[0] + p[2] - p[1]);
  return {p[1], y2, -p[2]};
}

std::vector<Rat> step_h1_4d(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  const Rat& c = q[0];
  Rat d = p[1] - p[3];
  Rat x2 = p[1] + ratdiv(c * d, d * (p[0] + p[2]) - c);
  Rat x3 = p[2] + ratdiv(c, -d);
  Rat x4 = p[3] + ratdiv(c * d, Rat(2) * p[2] * (-d) + Rat(2) * c);
  return {-p[0], x2, x3, x4};
}

std::vector<Rat> step_h1_3d_na(const std::vector<Rat>& p,
                               const std::vector<Rat>& q) {
  const Rat& a1 = q[0];
  const Rat& a2 = q[1];
  const Rat& mu = q[2];
  Rat x2 = p[1] + ratdiv(p[1] * (a2 - a1), p[1] * (p[0] + p[2]) + mu - a2);
  Rat x3 = p[2] + ratdiv(mu - a2, p[1]);
  return {-p[0], x2, x3};
}

std::vector<Rat> step_h1_delta(const std::vector<Rat>& p,
                               const std::vector<Rat>& q) {
  Rat x1s = q[0] * q[0];
  Rat y2 = -ratdiv(x1s * p[0] - Rat(2) * x1s * p[1] + p[0] * p[1] * p[1],
                   x1s - Rat(2) * p[0] * p[1] + p[1] * p[1]);
  return {p[1], y2};
}

std::vector<Rat> step_q1_2d(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  Rat cs = q[0] * q[0];
  Rat top = p[0] + (cs - Rat(1)) * p[1];
  return {ratdiv(top, cs), ratdiv(p[1] * top, cs * p[0])};
}

std::vector<Rat> step_q1_3d(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  Rat c1s = q[0] * q[0];
  Rat c2s = q[1] * q[1];
  Rat cross = (p[0] - p[1]) * (p[1] - p[2]);
  Rat core = p[1] * p[1] + p[0] * p[2] - Rat(2) * p[1] * p[2];
  Rat x1 = c1s * (p[0] - p[1]) + p[1];
  Rat x2 = ratdiv(p[1] * (core + c1s * cross), core + c2s * cross);
  Rat x3 = ratdiv(p[1] * p[2], c2s * (p[1] - p[2]) + p[2]);
  return {x1, x2, x3};
}

std::vector<Rat> step_q1_reduced(const std::vector<Rat>& p,
                                 const std::vector<Rat>& q) {
  const Rat& z1 = p[0];
  const Rat& z2 = p[1];
  Rat c1s = q[0] * q[0];
  Rat c2s = q[1] * q[1];
  Rat lift = c2s * z2 * (Rat(1) + z2) + c1s * (z1 + c2s * z1 * z2);
  Rat den = z1 + z2 + c2s * z1 * z2 + z2 * z2;
  Rat z1p = ratdiv(z1 * (Rat(1) + c2s * z2) * lift, (Rat(1) + z2) * den);
  Rat z2p = ratdiv(z2 * lift, den);
  return {z1p, z2p};
}

std::vector<Rat> step_gamma(const std::vector<Rat>& p,
                            const std::vector<Rat>& q) {
  const Rat& x = p[0];
  const Rat& y = p[1];
  const Rat& al = q[0];
  const Rat& be = q[1];
  Rat w = al * x + be * (al * x + y + Rat(1)) * y;
  Rat scale =
      ratdiv((x + y) * w * w,
             be * (x + (x * be + y + Rat(1)) * y) *
                 ((al * al + be) * x * y * y + al * (be * x * x + y * y) * y +
                  al * (x + y) * (x + y)));
  Rat first = ratdiv(x * (al * x + (al * be * x + be * y + al) * y),
                     al * (x + (al * x + y + Rat(1)) * y));
  return {scale * first, scale * y};
}

//---------------------------------------------------------------------------
// Parameter actions of one application.
//---------------------------------------------------------------------------

std::vector<Rat> swap_sigma_additive(const std::vector<Rat>& q) {
  const Rat& mu = q[2];
  return {Rat(2) * mu - q[1], Rat(2) * mu - q[0], mu};
}

std::vector<Rat> swap_reciprocal(const std::vector<Rat>& q) {
  return {ratdiv(Rat(1), q[1]), ratdiv(Rat(1), q[0])};
}

//---------------------------------------------------------------------------
// Invariants.
//---------------------------------------------------------------------------

Rat na_integral_numerator(const std::vector<Rat>& p,
                          const std::vector<Rat>& q) {
  const Rat& a1 = q[0];
  const Rat& a2 = q[1];
  const Rat& mu = q[2];
  return p[1] * (p[0] * p[0] - p[2] * p[2]) + mu * (p[0] - p[2]) -
         a1 * p[0] + a2 * p[2];
}

std::vector<GalleryInvariant> invariants_for(const std::string& id) {
  using P = const std::vector<Rat>&;
  if (id == "h1_2d") return {};
  if (id == "h1_3d") {
    return {
        {"x1_squared", Rat(1), [](P p, P) { return p[0] * p[0]; }},
        {"pair_product", Rat(1),
         [](P p, P q) {
           return (p[0] + p[2]) * (Rat(2) * p[1] * (p[0] - p[2]) + q[0]);
         }},
    };
  }
  if (id == "h1_3d_y") {
    return {{"j_ratio", Rat(1), [](P p, P) {
               return ratdiv((p[1] - p[2]) * (p[0] + p[2]), p[0] - p[1]);
             }}};
  }
  if (id == "h1_4d") {
    return {{"triple_product", Rat(1), [](P p, P q) {
               return (p[0] + p[2]) *
                      (Rat(2) * p[2] * (p[3] - p[1]) + q[0]) *
                      ((p[1] - p[3]) * (p[0] - p[2]) + q[0]);
             }}};
  }
  if (id == "h1_3d_na") {
    return {
        {"integral_ratio", Rat(-1),
         [](P p, P q) { return ratdiv(na_integral_numerator(p, q), p[0]); }},
        {"integral_product", Rat(1),
         [](P p, P q) { return na_integral_numerator(p, q); }},
    };
  }
  if (id == "h1_delta") {
    return {{"r_ratio", Rat(1), [](P p, P q) {
               return ratdiv(q[0] * q[0] - p[0] * p[1], p[0] - p[1]);
             }}};
  }
  if (id == "q1_2d") {
    return {{"field_ratio", Rat(1),
             [](P p, P) { return ratdiv(p[0], p[1]); }}};
  }
  if (id == "q1_3d") {
    return {{"curve_constant", Rat(1), [](P p, P q) {
               Rat c1s = q[0] * q[0];
               Rat c2s = q[1] * q[1];
               Rat num = c2s * p[0] * (p[1] - p[2]) * (p[1] - p[2]) +
                         c1s * (p[0] - p[1]) *
                             (c2s * (p[0] - p[2]) * (p[1] - p[2]) +
                              (p[0] - p[1]) * p[2]);
               Rat den =
                   q[0] * q[1] * (p[0] - p[1]) * (p[1] - p[2]) * p[2];
               return ratdiv(num, den);
             }}};
  }
  if (id == "q1_reduced") {
    return {{"curve_constant", Rat(1), [](P p, P q) {
               const Rat& z1 = p[0];
               const Rat& z2 = p[1];
               Rat c1s = q[0] * q[0];
               Rat c2s = q[1] * q[1];
               Rat num = c2s * z2 * z2 * (Rat(1) + z1 + z2) +
                         c1s * z1 * (z1 + c2s * z1 * z2 + c2s * z2 * z2);
               return ratdiv(num, c2s * z1 * z2);
             }}};
  }
  if (id == "gamma") {
    return {{"pencil_value", Rat(1), [](P p, P q) {
               const Rat& x = p[0];
               const Rat& y = p[1];
               Rat num = y * y * (Rat(1) + x + y) +
                         q[0] * x * (ratdiv(x, q[1]) + x * y + y * y);
               return ratdiv(num, x * y);
             }}};
  }
  throw std::invalid_argument("unknown gallery id '" + id + "'");
}

struct EntryDef {
  int arity;
  std::vector<std::pair<std::string, Rat>> defaults;
  std::vector<Rat> (*step)(const std::vector<Rat>&, const std::vector<Rat>&);
  std::vector<Rat> (*param_update)(const std::vector<Rat>&);  // or nullptr
};

std::optional<EntryDef> entry_def(const std::string& id) {
  if (id == "h1_2d")
    return EntryDef{2, {{"c", Rat(2)}}, step_h1_2d, nullptr};
  if (id == "h1_3d")
    return EntryDef{3, {{"c", Rat(2)}}, step_h1_3d, nullptr};
  if (id == "h1_3d_y") return EntryDef{3, {}, step_h1_3d_y, nullptr};
  if (id == "h1_4d")
    return EntryDef{4, {{"c", Rat(2)}}, step_h1_4d, nullptr};
  if (id == "h1_3d_na")
    return EntryDef{3,
                    {{"alpha1", Rat(1)}, {"alpha2", Rat(2)}, {"mu", Rat(3)}},
                    step_h1_3d_na,
                    swap_sigma_additive};
  if (id == "h1_delta")
    return EntryDef{2, {{"x1", Rat(1)}}, step_h1_delta, nullptr};
  if (id == "q1_2d")
    return EntryDef{2, {{"c", Rat(2)}}, step_q1_2d, nullptr};
  if (id == "q1_3d")
    return EntryDef{3, {{"c1", Rat(2)}, {"c2", Rat(3)}}, step_q1_3d,
                    swap_reciprocal};
  if (id == "q1_reduced")
    return EntryDef{2, {{"c1", Rat(2)}, {"c2", Rat(3)}}, step_q1_reduced,
                    swap_reciprocal};
  if (id == "gamma")
    return EntryDef{2, {{"alpha", Rat(4)}, {"beta", Rat(1)}}, step_gamma,
                    nullptr};
  return std::nullopt;
}

}  // namespace

std::vector<std::string> gallery_ids() {
  return {"h1_2d",     "h1_3d",  "h1_3d_y", "h1_4d",      "h1_3d_na",
          "h1_delta",  "q1_2d",  "q1_3d",   "q1_reduced", "gamma"};
}

GalleryMap make_gallery_map(
    const std::string& id,
    const std::vector<std::pair<std::string, Rat>>& overrides) {
  std::optional<EntryDef> def = entry_def(id);
  if (!def) throw std::invalid_argument("unknown gallery id '" + id + "'");

  GalleryMap map;
  map.id_ = id;
  map.arity_ = def->arity;
  for (const auto& [name, value] : def->defaults) {
    map.param_names_.push_back(name);
    map.params_.push_back(value);
  }
  for (const auto& [name, value] : overrides) {
    bool found = false;
    for (std::size_t i = 0; i < map.param_names_.size(); ++i) {
      if (map.param_names_[i] == name) {
        map.params_[i] = value;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("unknown parameter '" + name +
                                  "' for gallery map '" + id + "'");
    }
  }
  map.step_fn_ = def->step;
  if (def->param_update) map.param_update_ = def->param_update;
  map.invariants_ = invariants_for(id);
  return map;
}

std::vector<Rat> GalleryMap::step(const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != arity_) {
    throw std::invalid_argument("point arity mismatch for gallery map '" +
                                id_ + "'");
  }
  std::vector<Rat> out = step_fn_(point, params_);
  if (param_update_) params_ = param_update_(params_);
  return out;
}

std::vector<Rat> GalleryMap::invariants(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != arity_) {
    throw std::invalid_argument("point arity mismatch for gallery map '" +
                                id_ + "'");
  }
  std::vector<Rat> out;
  out.reserve(invariants_.size());
  for (const auto& inv : invariants_) out.push_back(inv.eval(point, params_));
  return out;
}

//---------------------------------------------------------------------------
// Strip crosscheck.
//---------------------------------------------------------------------------

namespace {

struct StripBinding {
  QuadId quad;
  BoundaryId minus_id;
  BoundaryId plus_id;
  int n;
  // Required mode for widths >= 3; at width 2 both modes carry a constant
  // parameter list and either is accepted.
  std::optional<StripMode> mode;
};

std::optional<StripBinding> binding_for(const std::string& id) {
  if (id == "h1_2d")
    return StripBinding{QuadId::H1, BoundaryId::H1_XZ, BoundaryId::H1_YZX, 2,
                        std::nullopt};
  if (id == "h1_3d")
    return StripBinding{QuadId::H1, BoundaryId::H1_XZ, BoundaryId::H1_YZX, 3,
                        StripMode::AUTONOMOUS};
  if (id == "h1_4d")
    return StripBinding{QuadId::H1, BoundaryId::H1_XZ, BoundaryId::H1_YZX, 4,
                        StripMode::AUTONOMOUS};
  if (id == "h1_3d_na")
    return StripBinding{QuadId::H1, BoundaryId::H1_XZ, BoundaryId::H1_YZX, 3,
                        StripMode::GENERAL};
  if (id == "q1_2d")
    return StripBinding{QuadId::Q1_MULT, BoundaryId::Q1MULT_ROW1,
                        BoundaryId::Q1MULT_ROW3, 2, std::nullopt};
  if (id == "q1_3d")
    return StripBinding{QuadId::Q1_MULT, BoundaryId::Q1MULT_ROW1,
                        BoundaryId::Q1MULT_ROW3, 3, StripMode::GENERAL};
  return std::nullopt;
}

// Gallery parameters realized by a strip parameter list. `a` is the current
// edge-parameter list of the strip state, `mu` the boundary parameter.
std::vector<std::pair<std::string, Rat>> bound_params(
    const std::string& id, const Rat& mu, const std::vector<Rat>& a) {
  if (id == "h1_2d" || id == "h1_3d" || id == "h1_4d") {
    return {{"c", Rat(2) * (mu - a[0])}};
  }
  if (id == "h1_3d_na") {
    return {{"alpha1", a[0]}, {"alpha2", a[1]}, {"mu", mu}};
  }
  if (id == "q1_2d") return {{"c", ratdiv(mu, a[0])}};
  if (id == "q1_3d") {
    return {{"c1", ratdiv(a[0], mu)}, {"c2", ratdiv(a[1], mu)}};
  }
  throw std::invalid_argument("unknown gallery id '" + id + "'");
}

}  // namespace

CrosscheckReport gallery_crosscheck(const std::string& id,
                                    const StripConfig& config,
                                    const std::vector<Rat>& seed,
                                    long steps) {
  CrosscheckReport report;
  report.id = id;
  report.steps_requested = steps;

  std::optional<StripBinding> bind = binding_for(id);
  if (!bind) {
    throw std::runtime_error("no strip realization for gallery map '" + id +
                             "'");
  }
  bool shape_ok = config.quad == bind->quad &&
                  config.minus_id == bind->minus_id &&
                  config.plus_id == bind->plus_id && config.n == bind->n &&
                  (!bind->mode || config.mode == *bind->mode);
  if (!shape_ok) {
    throw std::runtime_error(
        "strip configuration does not realize gallery map '" + id + "'");
  }

  StripState state = initial_state(config, seed);
  GalleryMap map = make_gallery_map(id, bound_params(id, config.mu, state.a));
  std::vector<Rat> point = seed;
  std::vector<Rat> prev_inv = map.invariants(point);

  for (long i = 1; i <= steps; ++i) {
    bool strip_singular = false;
    bool map_singular = false;
    StripState next_state;
    std::vector<Rat> next_point;
    try {
      next_state = step_up(config, state);
    } catch (const StripSingular&) {
      strip_singular = true;
    }
    try {
      next_point = map.step(point);
    } catch (const std::runtime_error& e) {
      if (std::string(e.what()) != "singular-point") throw;
      map_singular = true;
    }

    if (strip_singular || map_singular) {
      if (strip_singular && map_singular) {
        report.match = true;
        report.truncated_singular = true;
        return report;
      }
      report.detail =
          "step " + std::to_string(i) + ": " +
          (strip_singular
               ? "staircase engine is singular, closed form is regular"
               : "closed form is singular, staircase engine is regular");
      return report;
    }

    if (next_point != next_state.x) {
      for (std::size_t k = 0; k < next_point.size(); ++k) {
        if (!(next_point[k] == next_state.x[k])) {
          report.detail = "step " + std::to_string(i) + ": component " +
                          std::to_string(k + 1) + " differs, closed form " +
                          next_point[k].to_string() + " vs staircase " +
                          next_state.x[k].to_string();
          break;
        }
      }
      return report;
    }

    std::vector<std::pair<std::string, Rat>> expected =
        bound_params(id, config.mu, next_state.a);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (!(expected[k].second == map.params()[k])) {
        report.detail = "step " + std::to_string(i) + ": parameter '" +
                        expected[k].first + "' differs, closed form " +
                        map.params()[k].to_string() + " vs staircase " +
                        expected[k].second.to_string();
        return report;
      }
    }

    std::vector<Rat> inv = map.invariants(next_point);
    for (std::size_t k = 0; k < inv.size(); ++k) {
      const GalleryInvariant& spec = map.invariant_specs()[k];
      if (!(inv[k] == spec.law * prev_inv[k])) {
        report.detail = "step " + std::to_string(i) + ": invariant '" +
                        spec.name + "' breaks its law, " +
                        inv[k].to_string() + " after " +
                        prev_inv[k].to_string();
        return report;
      }
    }

    state = next_state;
    point = std::move(next_point);
    prev_inv = std::move(inv);
    report.steps_realized = i;
  }

  report.match = true;
  return report;
}

std::string crosscheck_report_json(const CrosscheckReport& report) {
  std::string out = "{\"id\":\"" + report.id + "\"";
  out += ",\"match\":";
  out += report.match ? "true" : "false";
  out += ",\"steps_requested\":" + std::to_string(report.steps_requested);
  out += ",\"steps_realized\":" + std::to_string(report.steps_realized);
  out += ",\"truncated_singular\":";
  out += report.truncated_singular ? "true" : "false";
  out += ",\"detail\":\"" + report.detail + "\"}";
  return out;
}

}  // namespace latticemaps
