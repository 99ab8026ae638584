#include "dmm/machine.hpp"

#include <utility>

#include "dmm/error.hpp"

namespace dmm {

namespace {

// Full machine-readiness check; returns the Self declaration so the ctor can
// pull its field names out of the init list.
const NeuronTypeDecl& checked_self(const Signature& sig, const Registry& reg) {
  if (!sig.has_kind(builtin::net_matrix_kind()) ||
      sig.kind(builtin::net_matrix_kind()).shape.tag != ShapeTag::net_matrix) {
    throw Error(ErrorCode::invalid_signature,
                "signature lacks the built-in net_matrix kind");
  }
  if (!sig.has_type(builtin::self_type())) {
    throw Error(ErrorCode::invalid_signature,
                "signature lacks the Self identity type '" +
                    builtin::self_type().text() + "'");
  }
  const NeuronTypeDecl& st = sig.type(builtin::self_type());
  if (st.inputs.size() != 1 || st.outputs.size() != 1 ||
      st.inputs[0].kind_name != builtin::net_matrix_kind() ||
      st.outputs[0].kind_name != builtin::net_matrix_kind()) {
    throw Error(ErrorCode::invalid_signature,
                "Self type must be the identity on net_matrix");
  }
  for (const auto& [tn, decl] : sig.types()) {
    if (!reg.has(decl.transform_id)) {
      throw Error(ErrorCode::invalid_signature,
                  "type '" + tn.text() + "' has no transform bound under '" +
                      decl.transform_id.text() + "'");
    }
    reg.transform(decl.transform_id).check_decl(decl, sig);
  }
  return st;
}

}  // namespace

Machine::Machine(Signature sig, Registry reg, std::uint64_t seed)
    : sig_(std::move(sig)),
      reg_(std::move(reg)),
      self_in_(input_port(builtin::self_type(), builtin::self_cell(),
                          checked_self(sig_, reg_).inputs[0].field_name)),
      self_out_(output_port(builtin::self_type(), builtin::self_cell(),
                            sig_.type(builtin::self_type()).outputs[0].field_name)),
      self_id_{builtin::self_type(), builtin::self_cell()},
      rng_(seed) {
  // The machine is born holding only itself: a unit weight from Self's
  // output back to its input makes A an accumulator of contributions.
  NetMatrix a;
  a.set(sig_, self_in_, self_out_, 1.0);
  outputs_.emplace(self_out_, MatrixV{std::move(a)});
  active_.insert(self_id_);
}

const NetMatrix& Machine::matrix() const {
  return std::get<MatrixV>(outputs_.at(self_out_)).a;
}

void Machine::set_matrix(NetMatrix a) {
  outputs_[self_out_] = MatrixV{std::move(a)};
}

StreamValue Machine::zero_for(const PortName& p) const {
  return zero_value(sig_.port_kind(p));
}

StreamValue Machine::read_output(const PortName& p) const {
  try {
    if (p.dir != PortDir::output) {
      throw Error(ErrorCode::unknown_port, "not an output port: " + p.str());
    }
    auto it = outputs_.find(p);
    return it == outputs_.end() ? zero_for(p) : it->second;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::unknown_type || e.code() == ErrorCode::unknown_field) {
      throw Error(ErrorCode::unknown_port, "no such port: " + p.str());
    }
    throw;
  }
}

StreamValue Machine::read_input(const PortName& p) const {
  try {
    if (p.dir != PortDir::input) {
      throw Error(ErrorCode::unknown_port, "not an input port: " + p.str());
    }
    auto it = inputs_.find(p);
    return it == inputs_.end() ? zero_for(p) : it->second;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::unknown_type || e.code() == ErrorCode::unknown_field) {
      throw Error(ErrorCode::unknown_port, "no such port: " + p.str());
    }
    throw;
  }
}

std::set<Name> Machine::cell_names() const {
  std::set<Name> out;
  for (const auto& id : active_) out.insert(id.cell_name);
  return out;
}

TraceRecord Machine::snapshot() const {
  TraceRecord rec;
  rec.t = t_;
  auto [ins, outs] = matrix().active_ports();
  for (const auto& p : outs) {
    rec.entries.emplace_back(p, read_output(p));
  }
  return rec;
}

FootprintStats Machine::footprint() const {
  return {active_.size(), matrix().entry_count(), inputs_.size(),
          outputs_.size(), states_.size()};
}

void Machine::add_kind(StreamKindDecl decl) { sig_.add_kind(std::move(decl)); }

void Machine::register_type(NeuronTypeDecl decl, TransformPtr t) {
  dmm::register_type(sig_, reg_, std::move(decl), std::move(t));
}

void Machine::bind_transform(const Name& id, TransformPtr t) {
  reg_.bind(id, std::move(t));
}

void Machine::refresh_active() {
  auto [ins, outs] = matrix().active_ports();
  for (const auto& p : ins) active_.insert({p.type_name, p.cell_name});
  for (const auto& p : outs) active_.insert({p.type_name, p.cell_name});
}

void Machine::down_stroke() {
  // All rows read the matrix as it stood when the stroke began: A is Self's
  // latest output, and outputs are never written during a down stroke.
  const NetMatrix& a = matrix();
  std::map<PortName, StreamValue> fresh;
  for (const auto& id : active_) {
    const NeuronTypeDecl& decl = sig_.type(id.type_name);
    for (const auto& f : decl.inputs) {
      PortName r = input_port(id.type_name, id.cell_name, f.field_name);
      std::vector<LinTerm> terms;
      if (const auto* row = a.row(r)) {
        terms.reserve(row->size());
        for (const auto& [c, w] : *row) {
          auto it = outputs_.find(c);
          // Dormant outputs are zero vectors; they contribute nothing.
          if (it != outputs_.end()) terms.push_back({w, &it->second});
        }
      }
      fresh.emplace(r, linear_combine(sig_.kind(f.kind_name), terms, rng_));
    }
  }
  inputs_ = std::move(fresh);
  down_done_ = true;
}

void Machine::up_stroke() {
  if (!down_done_) {
    throw Error(ErrorCode::invalid_argument,
                "up stroke without a preceding down stroke");
  }
  down_done_ = false;
  for (const auto& id : active_) {
    const NeuronTypeDecl& decl = sig_.type(id.type_name);
    const Transform& tr = reg_.transform(decl.transform_id);
    auto st = states_.find(id);
    if (st == states_.end()) {
      st = states_.emplace(id, tr.initial_state()).first;
    }
    std::vector<StreamValue> in;
    in.reserve(decl.inputs.size());
    for (const auto& f : decl.inputs) {
      PortName p = input_port(id.type_name, id.cell_name, f.field_name);
      auto it = inputs_.find(p);
      in.push_back(it == inputs_.end() ? zero_value(sig_.kind(f.kind_name))
                                       : it->second);
    }
    std::vector<StreamValue> out;
    try {
      out = tr.step(st->second, in, rng_, &diags_);
    } catch (const std::exception& ex) {
      std::string msg = "neuron " + id.str() + " failed at tick " +
                        std::to_string(t_) + ": " + ex.what();
      diags_.push_back(msg);
      throw Error(ErrorCode::transform_failure, msg);
    }
    if (out.size() != decl.outputs.size()) {
      std::string msg = "neuron " + id.str() + " emitted " +
                        std::to_string(out.size()) + " values, declared " +
                        std::to_string(decl.outputs.size());
      diags_.push_back(msg);
      throw Error(ErrorCode::transform_failure, msg);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!tag_matches(sig_.kind(decl.outputs[i].kind_name), out[i])) {
        std::string msg = "neuron " + id.str() + " emitted a '" +
                          tag_name(out[i]) + "' on its '" +
                          decl.outputs[i].kind_name.text() + "' output";
        diags_.push_back(msg);
        throw Error(ErrorCode::transform_failure, msg);
      }
      outputs_[output_port(id.type_name, id.cell_name,
                           decl.outputs[i].field_name)] = std::move(out[i]);
    }
  }
  ++t_;
  // Self may just have absorbed contributions that reference dormant
  // neurons; they wake here and first compute at the next down stroke.
  refresh_active();
}

void Machine::step(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    down_stroke();
    up_stroke();
  }
}

void Machine::apply_edit(const Edit& e) {
  NetMatrix a = matrix();
  if (const auto* sw = std::get_if<SetWeight>(&e)) {
    a.set(sig_, sw->row, sw->col, sw->w);
  } else {
    const auto& uw = std::get<UpdateWeights>(e);
    NetMatrix delta = update_kernel(a, uw.spec);
    a.add_scaled(delta, 1.0);
  }
  set_matrix(std::move(a));
  refresh_active();
}

void Machine::garbage_collect() {
  auto [ins, outs] = matrix().active_ports();
  std::set<NeuronId> keep = {self_id_};
  for (const auto& p : ins) keep.insert({p.type_name, p.cell_name});
  for (const auto& p : outs) keep.insert({p.type_name, p.cell_name});
  for (auto it = active_.begin(); it != active_.end();) {
    it = keep.count(*it) ? std::next(it) : active_.erase(it);
  }
  auto drop_ports = [&](std::map<PortName, StreamValue>& m) {
    for (auto it = m.begin(); it != m.end();) {
      NeuronId id{it->first.type_name, it->first.cell_name};
      it = keep.count(id) ? std::next(it) : m.erase(it);
    }
  };
  drop_ports(inputs_);
  drop_ports(outputs_);
  for (auto it = states_.begin(); it != states_.end();) {
    it = keep.count(it->first) ? std::next(it) : states_.erase(it);
  }
}

}  // namespace dmm
