#include <iostream>

#include <CLI11.hpp>

#include "dmm/interp.hpp"

int main(int argc, char** argv) {
  dmm::RunConfig cfg;
  std::string script, trace;
  std::uint64_t show_every = 0;

  CLI::App app{"dmm - dataflow matrix machine runtime"};
  app.add_option("--script", script, "program to run before stepping (.dmm)");
  app.add_option("--steps", cfg.steps, "engine steps to run after the script");
  app.add_option("--seed", cfg.seed, "rng seed (default 0, reproducible)");
  app.add_option("--trace", trace, "write one trace record per step to this file");
  app.add_flag("--repl", cfg.repl, "interactive session after script/steps");
  app.add_option("--show-matrix-every", show_every,
                 "dump the matrix to stdout every n steps");
  CLI11_PARSE(app, argc, argv);

  if (!script.empty()) cfg.script_path = script;
  if (!trace.empty()) cfg.trace_path = trace;
  if (show_every > 0) cfg.show_matrix_every = show_every;

  return dmm::run_cli(cfg, std::cin, std::cout, std::cerr);
}
