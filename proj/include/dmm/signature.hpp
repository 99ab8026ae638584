#ifndef DMM_SIGNATURE_HPP
#define DMM_SIGNATURE_HPP

#include <map>
#include <vector>

#include "dmm/kind.hpp"
#include "dmm/port.hpp"

namespace dmm {

struct FieldDecl {
  Name field_name;
  Name kind_name;
  bool operator==(const FieldDecl&) const = default;
};

// Interface of one neuron type: ordered input and output fields with their
// stream kinds, plus the id of the stream transform that animates instances.
struct NeuronTypeDecl {
  Name type_name;
  std::vector<FieldDecl> inputs;   // may be empty (pure sources)
  std::vector<FieldDecl> outputs;  // at least one
  Name transform_id;

  // Field names are unique across inputs and outputs, so a (field, any-dir)
  // lookup is unambiguous. Returns nullptr when absent.
  const FieldDecl* find_field(const Name& field, PortDir dir) const;
  const FieldDecl* find_field_any(const Name& field, PortDir* dir_out) const;

  bool operator==(const NeuronTypeDecl&) const = default;
};

// Declared stream kinds plus declared neuron types. Value type; the machine
// owns one and grows it as declaration statements execute.
class Signature {
 public:
  void add_kind(StreamKindDecl decl);   // duplicate_kind, invalid_argument
  void add_type(NeuronTypeDecl decl);   // duplicate_type, unknown_kind, invalid_argument

  bool has_kind(const Name& n) const { return kinds_.count(n) != 0; }
  bool has_type(const Name& n) const { return types_.count(n) != 0; }

  const StreamKindDecl& kind(const Name& n) const;  // unknown_kind
  const NeuronTypeDecl& type(const Name& n) const;  // unknown_type

  // Declared kind of the field a port addresses. unknown_type/unknown_field.
  const StreamKindDecl& port_kind(const PortName& p) const;

  const std::map<Name, StreamKindDecl>& kinds() const { return kinds_; }
  const std::map<Name, NeuronTypeDecl>& types() const { return types_; }

  // Minimal machine-ready signature: the net_matrix kind and the identity
  // type that the Self neuron instantiates.
  static Signature base();

 private:
  std::map<Name, StreamKindDecl> kinds_;
  std::map<Name, NeuronTypeDecl> types_;
};

namespace builtin {
Name net_matrix_kind();  // "net_matrix"
Name self_type();        // "matrix_id"
Name self_cell();        // "Self"
Name self_in_field();    // "in"
Name self_out_field();   // "out"
}  // namespace builtin

}  // namespace dmm

#endif
