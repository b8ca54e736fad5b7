#include "latticemaps/verify.hpp"

#include <atomic>
#include <thread>

#include "latticemaps/boundary.hpp"
#include "latticemaps/quad.hpp"
#include "latticemaps/sampling.hpp"

namespace latticemaps {
namespace {

enum class CheckKind {
  QUAD_SYMMETRIES,
  QUAD_3D_CONSISTENCY,
  QUAD_ZERO_CURVATURE,
  BOUNDARY_SYMMETRIES,
  BOUNDARY_DUALITY,
  BOUNDARY_K_INVOLUTION,
  BOUNDARY_CONSISTENCY,
  BOUNDARY_DUAL_CONSISTENCY,
  BOUNDARY_ZCC,
};

struct CellDef {
  std::string row;
  std::string check;
  CheckKind kind;
  QuadId quad = QuadId::H1;
  BoundaryId boundary = BoundaryId::H1_YZX;
};

std::vector<CellDef> registry_cells() {
  std::vector<CellDef> cells;
  for (QuadId q : {QuadId::H1, QuadId::Q1_ADD, QuadId::Q1_MULT}) {
    std::string row = to_string(q);
    cells.push_back({row, "symmetries", CheckKind::QUAD_SYMMETRIES, q, {}});
    cells.push_back(
        {row, "3d_consistency", CheckKind::QUAD_3D_CONSISTENCY, q, {}});
    cells.push_back(
        {row, "zero_curvature", CheckKind::QUAD_ZERO_CURVATURE, q, {}});
  }
  for (BoundaryId b : all_boundary_ids()) {
    std::string row = to_string(b);
    QuadId q = quad_of(b);
    cells.push_back({row, "symmetries", CheckKind::BOUNDARY_SYMMETRIES, q, b});
    cells.push_back({row, "duality", CheckKind::BOUNDARY_DUALITY, q, b});
    cells.push_back(
        {row, "k_involution", CheckKind::BOUNDARY_K_INVOLUTION, q, b});
    cells.push_back(
        {row, "boundary_consistency", CheckKind::BOUNDARY_CONSISTENCY, q, b});
    cells.push_back({row, "dual_boundary_consistency",
                     CheckKind::BOUNDARY_DUAL_CONSISTENCY, q, b});
    cells.push_back({row, "boundary_zcc", CheckKind::BOUNDARY_ZCC, q, b});
  }
  return cells;
}

// Deterministic seed for one task, independent of scheduling.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t cell,
                       std::uint64_t sample) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (cell * 1000003ULL +
                                                      sample + 1ULL);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Runs `body` on fresh draws until one is admissible (does not throw);
// returns its verdict. Systematic degeneracy counts as failure.
template <class Body>
bool with_admissible_draw(Body&& body) {
  for (int tries = 0; tries < 64; ++tries) {
    try {
      return body();
    } catch (const std::exception&) {
      continue;
    }
  }
  return false;
}

bool run_task(const CellDef& cell, Rng& rng) {
  switch (cell.kind) {
    case CheckKind::QUAD_SYMMETRIES:
      return with_admissible_draw(
          [&] { return check_symmetries(cell.quad, rng, 1).all(); });
    case CheckKind::QUAD_3D_CONSISTENCY:
      return with_admissible_draw([&] {
        return check_3d_consistency(cell.quad, rng.rat(), rng.rat(),
                                    rng.rat(), rng.rat(), rng.nonzero_rat(),
                                    rng.nonzero_rat(), rng.nonzero_rat())
            .consistent;
      });
    case CheckKind::QUAD_ZERO_CURVATURE:
      return with_admissible_draw([&] {
        return check_zero_curvature(cell.quad, rng.rat(), rng.rat(),
                                    rng.rat(), rng.nonzero_rat(),
                                    rng.nonzero_rat(), rng.nonzero_rat(),
                                    {rng.rat(), rng.rat()});
      });
    case CheckKind::BOUNDARY_SYMMETRIES:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return check_z2_symmetry(spec, rng, 1);
      });
    case CheckKind::BOUNDARY_DUALITY:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return verify_duality(spec, rng, 1).holds;
      });
    case CheckKind::BOUNDARY_K_INVOLUTION:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return check_k_involution(spec, rng.nonzero_rat());
      });
    case CheckKind::BOUNDARY_CONSISTENCY:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return check_boundary_consistency(spec, rng.nonzero_rat(),
                                          rng.nonzero_rat(),
                                          rng.nonzero_rat(),
                                          rng.nonzero_rat(),
                                          rng.nonzero_rat())
            .consistent;
      });
    case CheckKind::BOUNDARY_DUAL_CONSISTENCY:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return check_dual_boundary_consistency(spec, rng.nonzero_rat(),
                                               rng.nonzero_rat(),
                                               rng.nonzero_rat(),
                                               rng.nonzero_rat(),
                                               rng.nonzero_rat())
            .consistent;
      });
    case CheckKind::BOUNDARY_ZCC:
      return with_admissible_draw([&] {
        BoundarySpec spec = make_boundary(cell.boundary, rng.nonzero_rat());
        return check_boundary_zcc(spec, rng.nonzero_rat(), rng.nonzero_rat(),
                                  rng.nonzero_rat());
      });
  }
  return false;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const SuiteCell& cell : cells) {
    if (!cell.pass) return false;
  }
  return !cells.empty();
}

SuiteReport run_verify_suite(int samples, std::uint64_t rng_seed,
                             int threads) {
  std::vector<CellDef> cells = registry_cells();
  const long total = static_cast<long>(cells.size()) * samples;
  std::vector<unsigned char> ok(static_cast<std::size_t>(total), 0);

  int pool = threads > 0
                 ? threads
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (pool < 1) pool = 1;
  if (static_cast<long>(pool) > total && total > 0) {
    pool = static_cast<int>(total);
  }

  std::atomic<long> cursor{0};
  auto worker = [&] {
    for (;;) {
      long index = cursor.fetch_add(1);
      if (index >= total) return;
      long cell = index / samples;
      long sample = index % samples;
      Rng rng(mix_seed(rng_seed, static_cast<std::uint64_t>(cell),
                       static_cast<std::uint64_t>(sample)));
      bool pass = false;
      try {
        pass = run_task(cells[static_cast<std::size_t>(cell)], rng);
      } catch (const std::exception&) {
        pass = false;
      }
      ok[static_cast<std::size_t>(index)] = pass ? 1 : 0;
    }
  };

  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(pool));
  for (int t = 0; t < pool; ++t) workers.emplace_back(worker);
  for (std::thread& t : workers) t.join();

  SuiteReport report;
  report.samples = samples;
  report.rng_seed = rng_seed;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    bool pass = true;
    for (int s = 0; s < samples; ++s) {
      if (!ok[c * static_cast<std::size_t>(samples) +
              static_cast<std::size_t>(s)]) {
        pass = false;
        break;
      }
    }
    report.cells.push_back({cells[c].row, cells[c].check, pass, samples});
  }
  return report;
}

std::string suite_report_json(const SuiteReport& report) {
  std::string out = "{\"samples\":" + std::to_string(report.samples);
  out += ",\"rng_seed\":" + std::to_string(report.rng_seed);
  out += ",\"all_pass\":";
  out += report.all_pass() ? "true" : "false";
  out += ",\"cells\":[";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const SuiteCell& cell = report.cells[i];
    if (i) out += ",";
    out += "{\"row\":\"" + cell.row + "\",\"check\":\"" + cell.check +
           "\",\"pass\":";
    out += cell.pass ? "true" : "false";
    out += ",\"samples\":" + std::to_string(cell.samples) + "}";
  }
  out += "]}";
  return out;
}

std::string suite_report_matrix(const SuiteReport& report) {
  const std::vector<std::string> checks = {"symmetries",
                                           "3d_consistency",
                                           "zero_curvature",
                                           "duality",
                                           "k_involution",
                                           "boundary_consistency",
                                           "dual_boundary_consistency",
                                           "boundary_zcc"};
  std::vector<std::string> rows;
  for (const SuiteCell& cell : report.cells) {
    if (rows.empty() || rows.back() != cell.row) rows.push_back(cell.row);
  }

  auto lookup = [&](const std::string& row,
                    const std::string& check) -> const SuiteCell* {
    for (const SuiteCell& cell : report.cells) {
      if (cell.row == row && cell.check == check) return &cell;
    }
    return nullptr;
  };

  std::size_t row_width = 3;  // "row"
  for (const std::string& row : rows) row_width = std::max(row_width,
                                                           row.size());

  auto pad = [](std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
  };

  std::string out = pad("row", row_width);
  for (const std::string& check : checks) out += "  " + check;
  out += "\n";
  for (const std::string& row : rows) {
    out += pad(row, row_width);
    for (const std::string& check : checks) {
      const SuiteCell* cell = lookup(row, check);
      std::string mark = cell ? (cell->pass ? "pass" : "FAIL") : "-";
      out += "  " + pad(mark, check.size());
    }
    out += "\n";
  }
  out += report.all_pass()
             ? "all checks passed (" + std::to_string(report.samples) +
                   " samples per cell)\n"
             : "FAILURES present\n";
  return out;
}

}  // namespace latticemaps
