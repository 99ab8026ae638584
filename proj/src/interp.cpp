#include "dmm/interp.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dmm/trace.hpp"

namespace dmm {

Interpreter::Interpreter(std::uint64_t seed)
    : Interpreter(Signature::base(), Registry::with_builtins(), seed) {}

Interpreter::Interpreter(Signature sig, Registry reg, std::uint64_t seed)
    : m_(std::move(sig), std::move(reg), seed) {
  hooks_.on_tick = [this](Machine&) { on_tick(); };
}

void Interpreter::on_tick() {
  if (trace_) {
    *trace_ << trace_line(m_) << '\n';
  }
  if (matrix_sink_ && matrix_every_ > 0 && m_.tick() % matrix_every_ == 0) {
    *matrix_sink_ << "// matrix at t=" << m_.tick() << "\n" << m_.matrix().dump();
  }
}

void Interpreter::set_show_matrix_every(std::uint64_t n, std::ostream* sink) {
  matrix_every_ = n;
  matrix_sink_ = sink;
}

std::vector<std::string> Interpreter::eval(const Statement& s) {
  return eval_statement(m_, env_, s, &hooks_);
}

std::vector<std::string> Interpreter::eval_text(std::string_view src) {
  std::vector<std::string> lines;
  for (const Statement& s : parse_program(src)) {
    auto out = eval(s);
    lines.insert(lines.end(), out.begin(), out.end());
  }
  return lines;
}

void Interpreter::run_steps(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    m_.step(1);
    on_tick();
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::io_error:
      return 1;
    case ErrorCode::transform_failure:
      return 3;
    default:
      return 2;
  }
}

namespace {

void repl_loop(Interpreter& interp, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::string buffer;
  out << "dmm> " << std::flush;
  std::string line;
  while (std::getline(in, line)) {
    buffer += line;
    buffer += '\n';
    std::vector<Statement> stmts;
    try {
      stmts = parse_program(buffer);
    } catch (const Error& e) {
      if (e.incomplete_input) {
        out << "...> " << std::flush;
        continue;
      }
      err << e.what() << "\n";
      buffer.clear();
      out << "dmm> " << std::flush;
      continue;
    }
    buffer.clear();
    for (const auto& s : stmts) {
      try {
        for (const auto& l : interp.eval(s)) out << l << "\n";
        if (std::holds_alternative<StepStmt>(s.node)) {
          out << "t = " << interp.machine().tick() << "\n";
        }
      } catch (const Error& e) {
        // Diagnostics never end the session.
        err << e.what() << "\n";
        break;
      }
    }
    out << "dmm> " << std::flush;
  }
  out << "\n";
}

}  // namespace

int run_cli(const RunConfig& cfg, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Interpreter interp(cfg.seed);

  std::ofstream trace_file;
  if (cfg.trace_path) {
    trace_file.open(*cfg.trace_path, std::ios::binary);
    if (!trace_file) {
      err << "IoError: cannot open trace file '" << *cfg.trace_path << "'\n";
      return 1;
    }
    interp.set_trace(&trace_file);
  }
  if (cfg.show_matrix_every) {
    interp.set_show_matrix_every(*cfg.show_matrix_every, &out);
  }

  if (cfg.script_path) {
    std::ifstream f(*cfg.script_path, std::ios::binary);
    if (!f) {
      err << "IoError: cannot read script '" << *cfg.script_path << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
      for (const auto& l : interp.eval_text(ss.str())) out << l << "\n";
    } catch (const Error& e) {
      err << *cfg.script_path << ": " << e.what() << "\n";
      return exit_code_for(e);
    }
  }

  if (cfg.steps > 0) {
    try {
      interp.run_steps(cfg.steps);
    } catch (const Error& e) {
      err << e.what() << "\n";
      return exit_code_for(e);
    }
  }

  if (cfg.repl) {
    repl_loop(interp, in, out, err);
  }
  return 0;
}

}  // namespace dmm
