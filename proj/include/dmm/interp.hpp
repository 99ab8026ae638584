#ifndef DMM_INTERP_HPP
#define DMM_INTERP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmm/lang.hpp"
#include "dmm/machine.hpp"

namespace dmm {

struct RunConfig {
  std::optional<std::string> script_path;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> trace_path;
  bool repl = false;
  std::optional<std::uint64_t> show_matrix_every;
};

// Owns a machine and an environment and drives them from program text.
// The REPL and batch mode share this, so a statement sequence behaves the
// same either way.
class Interpreter {
 public:
  explicit Interpreter(std::uint64_t seed);
  Interpreter(Signature sig, Registry reg, std::uint64_t seed);

  std::vector<std::string> eval_text(std::string_view src);
  std::vector<std::string> eval(const Statement& s);
  void run_steps(std::uint64_t n);

  // Trace sink: one record per executed step. Not owned.
  void set_trace(std::ostream* sink) { trace_ = sink; }
  // Matrix dump to `sink` every n steps.
  void set_show_matrix_every(std::uint64_t n, std::ostream* sink);

  Machine& machine() { return m_; }
  const Machine& machine() const { return m_; }
  Env& env() { return env_; }

 private:
  void on_tick();
  EvalHooks hooks_;
  Machine m_;
  Env env_;
  std::ostream* trace_ = nullptr;
  std::ostream* matrix_sink_ = nullptr;
  std::uint64_t matrix_every_ = 0;
};

// Exit codes: 0 ok, 1 I/O, 2 language error, 3 transform failure.
int exit_code_for(const Error& e);

// Batch and interactive driver behind the command-line tool.
int run_cli(const RunConfig& cfg, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dmm

#endif
