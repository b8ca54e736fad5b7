#include "latticemaps/strip.hpp"

#include <functional>

namespace latticemaps {

namespace {

void validate_family(QuadId quad, BoundaryId minus, BoundaryId plus) {
  if (quad_of(minus) != quad || quad_of(plus) != quad) {
    throw std::runtime_error(
        "boundary row does not extend the bulk equation");
  }
}

}  // namespace

StripConfig strip_autonomous(QuadId quad, BoundaryId minus, BoundaryId plus,
                             int n, const Rat& mu, const Rat& alpha) {
  validate_family(quad, minus, plus);
  if (n < 2) throw std::runtime_error("strip width must be at least 2");
  StripConfig c;
  c.quad = quad;
  c.minus_id = minus;
  c.plus_id = plus;
  c.n = n;
  c.mu = mu;
  c.mode = StripMode::AUTONOMOUS;
  c.alpha = alpha;
  return c;
}

StripConfig strip_general(QuadId quad, BoundaryId minus, BoundaryId plus,
                          int n, const Rat& mu,
                          const std::vector<Rat>& alphas) {
  validate_family(quad, minus, plus);
  if (n < 2) throw std::runtime_error("strip width must be at least 2");
  if (alphas.size() != static_cast<std::size_t>(n - 1)) {
    throw std::runtime_error("parameter list must have n-1 entries");
  }
  StripConfig c;
  c.quad = quad;
  c.minus_id = minus;
  c.plus_id = plus;
  c.n = n;
  c.mu = mu;
  c.mode = StripMode::GENERAL;
  c.alphas = alphas;
  return c;
}

std::vector<Rat> expand_params(const StripConfig& config) {
  if (config.mode == StripMode::GENERAL) return config.alphas;
  Involution inv = config.involution();
  std::vector<Rat> a(config.n - 1);
  Rat sa = sigma_apply(inv, config.alpha);
  for (int j = 1; j <= config.n - 1; ++j) {
    a[j - 1] = (j % 2 == 1) ? config.alpha : sa;
  }
  return a;
}

StripState initial_state(const StripConfig& config,
                         const std::vector<Rat>& fields) {
  if (fields.size() != static_cast<std::size_t>(config.n)) {
    throw std::runtime_error("field list must have n entries");
  }
  return StripState{fields, expand_params(config), 0};
}

StripSingular::StripSingular(long step, const std::string& face)
    : std::runtime_error("singular-orbit(" + std::to_string(step) + "," +
                         face + ")"),
      info_{step, face} {}

//--- parameter rotation -------------------------------------------------------

std::vector<Rat> rotate_params_up(const StripConfig& config,
                                  const std::vector<Rat>& a) {
  int n = config.n;
  if (n == 2) return a;
  Involution inv = config.involution();
  auto sigma = [&](const Rat& v) { return sigma_apply(inv, v); };
  int last_even = (n - 1) % 2 == 0 ? n - 1 : n - 2;
  std::vector<Rat> out(n - 1);
  out[1] = sigma(a[0]);  // a_2' = sigma(a_1)
  for (int m = 4; m <= n - 1; m += 2) out[m - 1] = a[m - 3];
  for (int m = 1; m <= n - 1; m += 2) {
    out[m - 1] = (m + 2 <= n - 1) ? a[m + 1] : sigma(a[last_even - 1]);
  }
  return out;
}

std::vector<Rat> rotate_params_down(const StripConfig& config,
                                    const std::vector<Rat>& a) {
  int n = config.n;
  if (n == 2) return a;
  Involution inv = config.involution();
  auto sigma = [&](const Rat& v) { return sigma_apply(inv, v); };
  int last_odd = (n - 1) % 2 == 1 ? n - 1 : n - 2;
  std::vector<Rat> out(n - 1);
  out[0] = sigma(a[1]);  // b_1 = sigma(a_2')
  for (int j = 3; j <= n - 1; j += 2) out[j - 1] = a[j - 3];
  for (int m = 2; m <= n - 1; m += 2) {
    out[m - 1] = (m + 2 <= n - 1) ? a[m + 1] : sigma(a[last_odd - 1]);
  }
  return out;
}

//--- face parameter selectors ---------------------------------------------------

namespace {

struct FaceParams {
  const StripConfig& config;
  const std::vector<Rat>& a;
  Involution inv;

  FaceParams(const StripConfig& c, const std::vector<Rat>& params)
      : config(c), a(params), inv(c.involution()) {}

  Rat sigma(const Rat& v) const { return sigma_apply(inv, v); }
  // Horizontal parameter of the even-column quadrilateral at 1-indexed m.
  Rat h_of(int m) const {
    return (m + 1 <= config.n - 1) ? a[m] : sigma(a[config.n - 2]);
  }
  // Vertical parameter of the same face.
  Rat v_of(int m) const { return (m == 2) ? sigma(a[0]) : a[m - 3]; }
  // Parameter of the upper boundary triangle when n is even.
  Rat plus_even() const {
    return (config.n == 2) ? sigma(a[0]) : a[config.n - 3];
  }
};

Rat guarded(long step, const std::string& face,
            const std::function<Rat()>& f) {
  try {
    return f();
  } catch (const std::runtime_error&) {
    throw StripSingular(step, face);
  }
}

std::string quad_face(int m) { return "quad[" + std::to_string(m) + "]"; }

}  // namespace

//--- step relations --------------------------------------------------------------

void verify_step_relations(const StripConfig& config, const StripState& prev,
                           const StripState& next) {
  int n = config.n;
  const auto& x = prev.x;
  const auto& xp = next.x;
  FaceParams fp(config, prev.a);
  BoundarySpec minus = config.minus();
  BoundarySpec plus = config.plus();

  std::vector<Rat> expected = rotate_params_up(config, prev.a);
  if (next.a != expected) {
    throw std::logic_error("parameter rotation violated");
  }

  auto demand = [](const Rat& residual, const std::string& face) {
    if (!residual.is_zero()) {
      throw std::logic_error("step relation violated at " + face);
    }
  };

  demand(boundary_q_t<Rat>(minus, x[0], x[1], xp[0], prev.a[0]),
         "minus-triangle");
  for (int m = 3; m <= n - 1; m += 2) {
    demand(quad_eval(config.quad, x[m - 1], x[m], x[m - 2], xp[m - 1],
                     prev.a[m - 1], prev.a[m - 2]),
           quad_face(m));
  }
  for (int m = 2; m <= n - 1; m += 2) {
    demand(quad_eval(config.quad, x[m - 1], xp[m], xp[m - 2], xp[m - 1],
                     fp.h_of(m), fp.v_of(m)),
           quad_face(m));
  }
  if (n % 2 == 1) {
    demand(boundary_q_t<Rat>(plus, x[n - 1], x[n - 2], xp[n - 1],
                             prev.a[n - 2]),
           "plus-triangle");
  } else {
    demand(boundary_q_t<Rat>(plus, x[n - 1], xp[n - 2], xp[n - 1],
                             fp.plus_even()),
           "plus-triangle");
  }
}

//--- evolution --------------------------------------------------------------------

StripState step_up(const StripConfig& config, const StripState& s,
                   bool check_relations) {
  int n = config.n;
  const auto& x = s.x;
  FaceParams fp(config, s.a);
  BoundarySpec minus = config.minus();
  BoundarySpec plus = config.plus();
  long at = s.step + 1;

  std::vector<Rat> xp(n);
  xp[0] = guarded(at, "minus-triangle", [&] {
    return boundary_solve(minus, x[0], x[1], s.a[0]);
  });
  for (int m = 3; m <= n - 1; m += 2) {
    xp[m - 1] = guarded(at, quad_face(m), [&] {
      return corner_solve(config.quad, x[m - 1], x[m], x[m - 2],
                          s.a[m - 1], s.a[m - 2]);
    });
  }
  if (n % 2 == 1) {
    xp[n - 1] = guarded(at, "plus-triangle", [&] {
      return boundary_solve(plus, x[n - 1], x[n - 2], s.a[n - 2]);
    });
  }
  for (int m = 2; m <= n - 1; m += 2) {
    xp[m - 1] = guarded(at, quad_face(m), [&] {
      return corner_solve(config.quad, x[m - 1], xp[m], xp[m - 2],
                          fp.h_of(m), fp.v_of(m));
    });
  }
  if (n % 2 == 0) {
    xp[n - 1] = guarded(at, "plus-triangle", [&] {
      return boundary_solve(plus, x[n - 1], xp[n - 2], fp.plus_even());
    });
  }

  StripState next{std::move(xp), rotate_params_up(config, s.a), at};
  if (check_relations) verify_step_relations(config, s, next);
  return next;
}

StripState step_down(const StripConfig& config, const StripState& s,
                     bool check_relations) {
  int n = config.n;
  const auto& x = s.x;  // the upper state's fields
  std::vector<Rat> b = rotate_params_down(config, s.a);
  FaceParams fp(config, b);
  BoundarySpec minus = config.minus();
  BoundarySpec plus = config.plus();
  long at = s.step - 1;

  std::vector<Rat> xd(n);
  for (int m = 2; m <= n - 1; m += 2) {
    xd[m - 1] = guarded(at, quad_face(m), [&] {
      return quad_solve_t<Rat>(config.quad, Corner::U,
                               {x[m], x[m - 2], x[m - 1]}, fp.h_of(m),
                               fp.v_of(m));
    });
  }
  if (n % 2 == 0) {
    xd[n - 1] = guarded(at, "plus-triangle", [&] {
      return boundary_solve_x_t<Rat>(plus, x[n - 2], x[n - 1],
                                     fp.plus_even());
    });
  }
  xd[0] = guarded(at, "minus-triangle", [&] {
    return boundary_solve_x_t<Rat>(minus, xd[1], x[0], b[0]);
  });
  for (int m = 3; m <= n - 1; m += 2) {
    xd[m - 1] = guarded(at, quad_face(m), [&] {
      return quad_solve_t<Rat>(config.quad, Corner::U,
                               {xd[m], xd[m - 2], x[m - 1]}, b[m - 1],
                               b[m - 2]);
    });
  }
  if (n % 2 == 1) {
    xd[n - 1] = guarded(at, "plus-triangle", [&] {
      return boundary_solve_x_t<Rat>(plus, xd[n - 2], x[n - 1], b[n - 2]);
    });
  }

  StripState prev{std::move(xd), std::move(b), at};
  if (check_relations) verify_step_relations(config, prev, s);
  return prev;
}

OrbitRecord iterate(const StripConfig& config, const StripState& start,
                    long steps) {
  OrbitRecord record;
  record.states.push_back(start);
  for (long k = 0; k < steps; ++k) {
    try {
      record.states.push_back(step_up(config, record.states.back()));
    } catch (const StripSingular& e) {
      record.singular_at = e.info();
      break;
    }
  }
  return record;
}

StripState autonomous_power(const StripConfig& config, const StripState& s) {
  StripState cur = s;
  for (int k = 0; k < config.n - 1; ++k) cur = step_up(config, cur);
  return cur;
}

}  // namespace latticemaps
