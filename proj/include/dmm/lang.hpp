#ifndef DMM_LANG_HPP
#define DMM_LANG_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmm/ast.hpp"
#include "dmm/machine.hpp"

namespace dmm {

// ---- lexer ----------------------------------------------------------------

// Splits source into tokens (trailing eof token included). `//` starts a line
// comment. Throws Error{lex_error} at the first character outside the
// alphabet and the structural set.
std::vector<Token> tokenize(std::string_view src);

// ---- parser ---------------------------------------------------------------

std::vector<Statement> parse_tokens(const std::vector<Token>& toks);
std::vector<Statement> parse_program(std::string_view src);

// ---- printer --------------------------------------------------------------

// Canonical text: one statement per line, single spaces, shortest round-trip
// decimals. parse(print(ast)) == ast.
std::string print_statement(const Statement& s);
std::string print_program(std::span<const Statement> program);

// ---- evaluator ------------------------------------------------------------

struct NeuronHandle {
  Name type_name;
  Name cell_name;
};
using Binding = std::variant<PortName, NeuronHandle>;

// Identifier bindings plus the autogenerated-cell-name counter. Identifiers
// bind at most once; cell names seen anywhere are recorded so autogenerated
// names never collide.
struct Env {
  std::map<std::string, Binding> bindings;
  std::set<Name> used_cellnames;
  std::uint64_t autogen_counter = 0;

  const Binding* find(const std::string& id) const;
};

// Fresh cell name of the form g<counter>, skipping names already used by the
// machine or mentioned in the session.
Name autogen_cellname(Env& env, const Machine& m);

// Kinds the runtime has stream implementations for, by conventional name;
// a #kind statement can only declare these.
const std::map<Name, KindShape>& builtin_kind_catalog();

struct EvalHooks {
  // Called after every single engine step driven by a #step statement.
  std::function<void(Machine&)> on_tick;
};

// Executes one statement against the machine and environment. Returns the
// lines a #show produced (empty for everything else). Declaration statements
// never touch the matrix.
std::vector<std::string> eval_statement(Machine& m, Env& env,
                                        const Statement& s,
                                        const EvalHooks* hooks = nullptr);

// Resolves a port reference; checks direction when `want` is set.
PortName resolve_port(const Machine& m, Env& env, const PortRef& ref,
                      std::optional<PortDir> want);

}  // namespace dmm

#endif
