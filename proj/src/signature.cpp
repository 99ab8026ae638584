#include "dmm/signature.hpp"

#include <set>

#include "dmm/error.hpp"

namespace dmm {

const FieldDecl* NeuronTypeDecl::find_field(const Name& field,
                                            PortDir dir) const {
  const auto& list = dir == PortDir::input ? inputs : outputs;
  for (const auto& f : list) {
    if (f.field_name == field) return &f;
  }
  return nullptr;
}

const FieldDecl* NeuronTypeDecl::find_field_any(const Name& field,
                                                PortDir* dir_out) const {
  if (const auto* f = find_field(field, PortDir::input)) {
    if (dir_out) *dir_out = PortDir::input;
    return f;
  }
  if (const auto* f = find_field(field, PortDir::output)) {
    if (dir_out) *dir_out = PortDir::output;
    return f;
  }
  return nullptr;
}

void Signature::add_kind(StreamKindDecl decl) {
  if (decl.shape.tag == ShapeTag::vector && decl.shape.dim < 1) {
    throw Error(ErrorCode::invalid_argument,
                "vector kind '" + decl.kind_name.text() + "' needs dim >= 1");
  }
  if (has_kind(decl.kind_name)) {
    throw Error(ErrorCode::duplicate_kind,
                "kind '" + decl.kind_name.text() + "' already declared");
  }
  kinds_.emplace(decl.kind_name, std::move(decl));
}

void Signature::add_type(NeuronTypeDecl decl) {
  if (has_type(decl.type_name)) {
    throw Error(ErrorCode::duplicate_type,
                "type '" + decl.type_name.text() + "' already declared");
  }
  if (decl.outputs.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "type '" + decl.type_name.text() + "' needs >= 1 output");
  }
  std::set<Name> seen;
  for (const auto* list : {&decl.inputs, &decl.outputs}) {
    for (const auto& f : *list) {
      if (!seen.insert(f.field_name).second) {
        throw Error(ErrorCode::invalid_argument,
                    "field '" + f.field_name.text() + "' declared twice in '" +
                        decl.type_name.text() + "'");
      }
      if (!has_kind(f.kind_name)) {
        throw Error(ErrorCode::unknown_kind,
                    "field '" + f.field_name.text() + "' of '" +
                        decl.type_name.text() + "' uses undeclared kind '" +
                        f.kind_name.text() + "'");
      }
    }
  }
  types_.emplace(decl.type_name, std::move(decl));
}

const StreamKindDecl& Signature::kind(const Name& n) const {
  auto it = kinds_.find(n);
  if (it == kinds_.end()) {
    throw Error(ErrorCode::unknown_kind, "kind '" + n.text() + "'");
  }
  return it->second;
}

const NeuronTypeDecl& Signature::type(const Name& n) const {
  auto it = types_.find(n);
  if (it == types_.end()) {
    throw Error(ErrorCode::unknown_type, "type '" + n.text() + "'");
  }
  return it->second;
}

const StreamKindDecl& Signature::port_kind(const PortName& p) const {
  const NeuronTypeDecl& t = type(p.type_name);
  const FieldDecl* f = t.find_field(p.field_name, p.dir);
  if (!f) {
    throw Error(ErrorCode::unknown_field,
                std::string(p.dir == PortDir::input ? "input" : "output") +
                    " field '" + p.field_name.text() + "' not declared on '" +
                    p.type_name.text() + "'");
  }
  return kind(f->kind_name);
}

Signature Signature::base() {
  Signature sig;
  sig.add_kind({builtin::net_matrix_kind(), KindShape::net_matrix()});
  sig.add_type({builtin::self_type(),
                {{builtin::self_in_field(), builtin::net_matrix_kind()}},
                {{builtin::self_out_field(), builtin::net_matrix_kind()}},
                Name("identity")});
  return sig;
}

namespace builtin {
Name net_matrix_kind() { return Name("net_matrix"); }
Name self_type() { return Name("matrix_id"); }
Name self_cell() { return Name("Self"); }
Name self_in_field() { return Name("in"); }
Name self_out_field() { return Name("out"); }
}  // namespace builtin

}  // namespace dmm
