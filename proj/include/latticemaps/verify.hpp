#ifndef LATTICEMAPS_VERIFY_HPP
#define LATTICEMAPS_VERIFY_HPP

//---------------------------------------------------------------------------
// verify.hpp — the registry-wide verification suite.
//
// Runs every structural check over every registry row at a configured number
// of random admissible samples and aggregates a pass/fail matrix:
//
//   rows    h1, q1_add, q1_mult          checks  symmetries, 3d_consistency,
//                                                zero_curvature
//   rows    the eight boundary rows      checks  symmetries, duality,
//                                                k_involution,
//                                                boundary_consistency,
//                                                dual_boundary_consistency,
//                                                boundary_zcc
//
// Every (row, check, sample) task draws from its own generator whose seed is
// mixed from the master seed and the task coordinates, so reports are byte
// identical for any thread count and any scheduling. Inadmissible draws
// (degenerate solves) are redrawn a bounded number of times inside the task;
// a task that cannot find an admissible sample counts as a failure.
//---------------------------------------------------------------------------

#include <cstdint>
#include <string>
#include <vector>

namespace latticemaps {

struct SuiteCell {
  std::string row;
  std::string check;
  bool pass = false;
  int samples = 0;
};

struct SuiteReport {
  int samples = 0;
  std::uint64_t rng_seed = 0;
  std::vector<SuiteCell> cells;
  bool all_pass() const;
};

// threads <= 0 selects the hardware concurrency.
SuiteReport run_verify_suite(int samples, std::uint64_t rng_seed,
                             int threads = 0);

std::string suite_report_json(const SuiteReport& report);

// Fixed-width text matrix, one registry row per line, "-" where a check does
// not apply.
std::string suite_report_matrix(const SuiteReport& report);

}  // namespace latticemaps

#endif  // LATTICEMAPS_VERIFY_HPP
