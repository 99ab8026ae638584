#ifndef DMM_AST_HPP
#define DMM_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dmm/error.hpp"
#include "dmm/signature.hpp"

namespace dmm {

struct Token {
  enum class Kind { keyword, name, number, punct, eof };
  Kind kind = Kind::eof;
  std::string text;    // keyword text without '#'; punct text; name; number literal
  double number = 0.0; // parsed value for number tokens
  SourcePos pos;
};

// Reference to a port: an explicit type:cell:field triple, or a language
// identifier bound by a declaration statement.
struct IdentRef {
  std::string id;
  SourcePos pos;
  bool operator==(const IdentRef& o) const { return id == o.id; }
};
struct PortRef3 {
  Name type_name;
  Name cell_name;
  Name field_name;
  SourcePos pos;
  bool operator==(const PortRef3& o) const {
    return type_name == o.type_name && cell_name == o.cell_name &&
           field_name == o.field_name;
  }
};
using PortRef = std::variant<IdentRef, PortRef3>;

struct MaskTerm {
  double coef = 1.0;
  PortRef ref;
  bool operator==(const MaskTerm&) const = default;
};
using MaskExpr = std::vector<MaskTerm>;

struct KindDeclStmt {
  std::vector<Name> names;
  bool operator==(const KindDeclStmt&) const = default;
};
struct NewCellTypeStmt {
  Name type_name;
  std::vector<FieldDecl> inputs;
  std::vector<FieldDecl> outputs;
  bool operator==(const NewCellTypeStmt&) const = default;
};
struct NeuronNameStmt {
  Name type_name;
  Name cell_name;
  bool operator==(const NeuronNameStmt&) const = default;
};
struct BindingItem {
  Name field;
  std::string id;
  bool operator==(const BindingItem&) const = default;
};
struct NeuronDeclStmt {
  Name type_name;
  std::string neuron_id;
  std::vector<BindingItem> outputs;
  std::vector<BindingItem> inputs;
  bool operator==(const NeuronDeclStmt&) const = default;
};
struct StreamDeclStmt {
  Name kind_name;
  std::string stream_id;
  std::string neuron_id;
  Name field;
  bool operator==(const StreamDeclStmt&) const = default;
};
struct WeightStmt {
  PortRef dst;  // input port
  PortRef src;  // output port
  double value = 0.0;
  bool operator==(const WeightStmt&) const = default;
};
struct UpdateWeightsStmt {
  MaskExpr lhs;  // row mask (destination)
  MaskExpr rhs;  // all-rows (beta form) or all-columns (alpha form)
  bool operator==(const UpdateWeightsStmt&) const = default;
};
struct StepStmt {
  std::uint64_t n = 1;
  bool operator==(const StepStmt&) const = default;
};
struct ShowStmt {
  bool matrix = false;
  std::optional<PortRef> ref;
  bool operator==(const ShowStmt&) const = default;
};
struct SeedStmt {
  std::uint64_t seed = 0;
  bool operator==(const SeedStmt&) const = default;
};
struct GcStmt {
  bool operator==(const GcStmt&) const = default;
};

using StatementNode =
    std::variant<KindDeclStmt, NewCellTypeStmt, NeuronNameStmt, NeuronDeclStmt,
                 StreamDeclStmt, WeightStmt, UpdateWeightsStmt, StepStmt,
                 ShowStmt, SeedStmt, GcStmt>;

struct Statement {
  StatementNode node;
  SourcePos pos;
  bool operator==(const Statement& o) const { return node == o.node; }
};

}  // namespace dmm

#endif
