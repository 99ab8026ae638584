#include "dmm/lang.hpp"
#include "dmm/matrix.hpp"

namespace dmm {

namespace {

std::string ref_text(const PortRef& r) {
  if (const auto* id = std::get_if<IdentRef>(&r)) return id->id;
  const auto& t = std::get<PortRef3>(r);
  return t.type_name.text() + ":" + t.cell_name.text() + ":" +
         t.field_name.text();
}

std::string mask_expr_text(const MaskExpr& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += " + ";
    if (e[i].coef != 1.0) {
      if (e[i].coef < 0.0) {
        s += "(" + format_double(e[i].coef) + ") * ";
      } else {
        s += format_double(e[i].coef) + " * ";
      }
    }
    s += ref_text(e[i].ref);
  }
  return s;
}

std::string bindings_text(const std::vector<BindingItem>& bs) {
  std::string s;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i) s += ", ";
    s += bs[i].field.text() + ":" + bs[i].id;
  }
  return s;
}

struct Printer {
  std::string operator()(const KindDeclStmt& s) const {
    std::string out = "#kind ";
    for (std::size_t i = 0; i < s.names.size(); ++i) {
      if (i) out += ", ";
      out += s.names[i].text();
    }
    return out + ";";
  }
  std::string operator()(const NewCellTypeStmt& s) const {
    std::string out = "#newcelltype " + s.type_name.text();
    for (const auto& f : s.inputs) {
      out += " #input " + f.kind_name.text() + ":" + f.field_name.text();
    }
    for (const auto& f : s.outputs) {
      out += " #output " + f.kind_name.text() + ":" + f.field_name.text();
    }
    return out + ";";
  }
  std::string operator()(const NeuronNameStmt& s) const {
    return "#neuron " + s.type_name.text() + ":" + s.cell_name.text() + ";";
  }
  std::string operator()(const NeuronDeclStmt& s) const {
    std::string out = "#neuron " + s.type_name.text() + ":" + s.neuron_id +
                      " " + bindings_text(s.outputs) + " = #transformof";
    if (!s.inputs.empty()) out += " " + bindings_text(s.inputs);
    return out + ";";
  }
  std::string operator()(const StreamDeclStmt& s) const {
    return "#stream " + s.kind_name.text() + ":" + s.stream_id +
           " = #neuroninput " + s.neuron_id + "." + s.field.text() + ";";
  }
  std::string operator()(const WeightStmt& s) const {
    return "#weight " + ref_text(s.dst) + " " + ref_text(s.src) + " = " +
           format_double(s.value) + ";";
  }
  std::string operator()(const UpdateWeightsStmt& s) const {
    return "#updateweights " + mask_expr_text(s.lhs) + " += " +
           mask_expr_text(s.rhs) + ";";
  }
  std::string operator()(const StepStmt& s) const {
    return "#step " + std::to_string(s.n) + ";";
  }
  std::string operator()(const ShowStmt& s) const {
    if (s.matrix) return "#show matrix;";
    return "#show " + ref_text(*s.ref) + ";";
  }
  std::string operator()(const SeedStmt& s) const {
    return "#seed " + std::to_string(s.seed) + ";";
  }
  std::string operator()(const GcStmt&) const { return "#gc;"; }
};

}  // namespace

std::string print_statement(const Statement& s) {
  return std::visit(Printer{}, s.node);
}

std::string print_program(std::span<const Statement> program) {
  std::string out;
  for (const auto& s : program) {
    out += print_statement(s);
    out += '\n';
  }
  return out;
}

}  // namespace dmm
