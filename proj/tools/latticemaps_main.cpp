//---------------------------------------------------------------------------
// latticemaps — command-line front end.
//
//   latticemaps verify   [--config F] [--samples K] [--out F]
//   latticemaps orbit     --config F  [--out F]
//   latticemaps invariants --config F [--out F]
//   latticemaps gallery list [--out F]
//   latticemaps gallery check <id> --config F [--out F]
//
// One JSON document (see runconfig.hpp) configures every verb; command-line
// flags override the matching config fields, and LATTICEMAPS_RNG_SEED in the
// environment overrides the rng_seed field. Exit status: 0 success, 1 exact-
// check failure or engine error, 2 configuration error.
//---------------------------------------------------------------------------

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "latticemaps/runconfig.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw latticemaps::ConfigError("",
                                   "cannot read config file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const latticemaps::RunConfig& cfg, const std::string& output) {
  std::string text = output;
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write output file \"" + cfg.out + "\"");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"exact verification suites, strip orbits, trace invariants, "
               "and gallery cross-checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string gallery_id;
  int samples = -1;

  CLI::App* verify =
      app.add_subcommand("verify", "run the registry-wide verification suite");
  verify->add_option("--config", config_path, "JSON configuration file");
  verify->add_option("--samples", samples,
                     "samples per registry cell (overrides the config)");
  verify->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* orbit = app.add_subcommand(
      "orbit", "iterate a strip and emit step-indexed fields");
  orbit->add_option("--config", config_path, "JSON configuration file")
      ->required();
  orbit->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* invariants = app.add_subcommand(
      "invariants", "extract trace invariants and track their drift");
  invariants->add_option("--config", config_path, "JSON configuration file")
      ->required();
  invariants->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* gallery =
      app.add_subcommand("gallery", "closed-form map catalogue");
  gallery->require_subcommand(1);
  CLI::App* gallery_list =
      gallery->add_subcommand("list", "print the catalogue ids");
  gallery_list->add_option("--out", out_path, "output path (default: stdout)");
  CLI::App* gallery_check = gallery->add_subcommand(
      "check", "cross-check an entry against the strip engine");
  gallery_check->add_option("id", gallery_id, "gallery entry id")->required();
  gallery_check->add_option("--config", config_path, "JSON configuration file")
      ->required();
  gallery_check->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  latticemaps::RunConfig cfg;
  if (!config_path.empty()) cfg = latticemaps::parse_run_config(slurp(config_path));

  latticemaps::Command wanted = latticemaps::Command::VERIFY;
  if (orbit->parsed()) wanted = latticemaps::Command::ORBIT;
  if (invariants->parsed()) wanted = latticemaps::Command::INVARIANTS;
  if (gallery->parsed()) wanted = latticemaps::Command::GALLERY;
  if (cfg.command && *cfg.command != wanted)
    throw latticemaps::ConfigError(
        "/command", "config names command \"" + to_string(*cfg.command) +
                        "\" but the invoked verb is \"" + to_string(wanted) +
                        "\"");
  cfg.command = wanted;

  if (verify->parsed() && samples != -1) {
    if (samples < 1)
      throw latticemaps::ConfigError("/samples", "expected an integer >= 1");
    cfg.samples = samples;
  }
  if (gallery->parsed()) {
    cfg.gallery_action = gallery_check->parsed() ? "check" : "list";
    if (gallery_check->parsed()) cfg.gallery_id = gallery_id;
  }
  if (!out_path.empty()) cfg.out = out_path;

  latticemaps::apply_env_overrides(cfg);
  latticemaps::RunResult result = latticemaps::execute(cfg);
  emit(cfg, result.output);
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const latticemaps::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
