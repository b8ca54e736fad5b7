#ifndef LATTICEMAPS_RUNCONFIG_HPP
#define LATTICEMAPS_RUNCONFIG_HPP

//---------------------------------------------------------------------------
// runconfig.hpp — single-document JSON configuration and command execution.
//
// One JSON object configures every command. Recognised fields:
//
//   command         "verify" | "orbit" | "invariants" | "gallery"
//   equation        quad equation name ("h1", "q1_add", "q1_mult")
//   mu              involution parameter, rational string "p" or "p/q"
//   mode            {"autonomous": "a"} or {"general": ["a1", ..., "a_{n-1}"]}
//   n               strip width, integer >= 2
//   boundary_minus  lower boundary row name (must belong to `equation`)
//   boundary_plus   upper boundary row name (must belong to `equation`)
//   initial         array of n rational strings, the seed fields x_1..x_n
//   steps           iteration budget, integer >= 0
//   samples         verification samples per registry cell, integer >= 1
//   rng_seed        master seed for randomised suites, unsigned integer
//   format          "json" | "csv"
//   out             output path ("" writes to standard output)
//   gallery_action  "list" | "check"
//   gallery_id      gallery entry id for "check"
//
// The six strip fields (equation..boundary_plus) come as a block: once one
// appears, all are required. Every schema violation is reported as a
// ConfigError carrying the JSON pointer of the offending field; rationals are
// exact strings throughout, so emitted reports re-parse without loss.
//
// Command semantics (all reports deterministic for a fixed config + seed):
//   verify      runs the registry-wide suite; exit 1 when any cell fails.
//   orbit       iterates the strip, one output row per step 0..steps with
//               fields, parameters, and the kept trace coefficients. A
//               singular step deterministically reseeds by restarting from
//               the configured initial state (so conserved quantities keep
//               their values); the fresh state is the next row, and
//               iteration continues until the budget is spent.
//   invariants  extracts the trace report at the seed, then re-evaluates the
//               kept coefficients along the orbit (no reseeding; a singular
//               step truncates) and emits per-step drift values
//               v[s] - v[s-k] for each coefficient's period k. Exit 1 when
//               any drift is nonzero.
//   gallery     "list" prints the catalogue ids; "check" runs the
//               side-by-side engine comparison and exits 1 on a mismatch.
//---------------------------------------------------------------------------

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticemaps/strip.hpp"

namespace latticemaps {

enum class Command { VERIFY, ORBIT, INVARIANTS, GALLERY };
enum class OutputFormat { JSON, CSV };

std::string to_string(Command c);
std::string to_string(OutputFormat f);

// Schema or completeness violation; what() reads "<pointer>: <message>"
// (document-level problems carry the empty pointer "").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct RunConfig {
  std::optional<Command> command;     // required before execute()
  std::optional<StripConfig> strip;   // the six strip fields, when present
  std::vector<Rat> initial;           // seed fields, length strip->n
  long steps = 0;
  int samples = 100;
  std::uint64_t rng_seed = 0;
  OutputFormat format = OutputFormat::JSON;
  std::string out;                    // empty: standard output
  std::string gallery_action = "list";
  std::string gallery_id;
};

// Parses and schema-validates one JSON document. Throws ConfigError with the
// offending field's JSON pointer.
RunConfig parse_run_config(const std::string& json_text);

// Replaces rng_seed when the environment variable LATTICEMAPS_RNG_SEED is
// set (it must be a plain unsigned decimal, else ConfigError "/rng_seed").
void apply_env_overrides(RunConfig& config);

struct RunResult {
  int exit_code = 0;  // 0 success, 1 exact-check failure
  std::string output;
};

// Runs the configured command and returns its report. Incomplete configs
// raise ConfigError (the caller maps these to exit status 2); engine-level
// failures propagate as their own exceptions.
RunResult execute(const RunConfig& config);

}  // namespace latticemaps

#endif  // LATTICEMAPS_RUNCONFIG_HPP
