#ifndef DMM_MACHINE_HPP
#define DMM_MACHINE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dmm/matrix.hpp"
#include "dmm/transform.hpp"
#include "dmm/value.hpp"

namespace dmm {

struct NeuronId {
  Name type_name;
  Name cell_name;
  auto operator<=>(const NeuronId&) const = default;
  bool operator==(const NeuronId&) const = default;
  std::string str() const { return type_name.text() + ":" + cell_name.text(); }
};

struct SetWeight {
  PortName row;  // destination input
  PortName col;  // source output
  double w = 0.0;
};
struct UpdateWeights {
  UpdateSpec spec;
};
using Edit = std::variant<SetWeight, UpdateWeights>;

// Snapshot of the observable state at one tick: the latest output of every
// port with a nonzero matrix column, in canonical port order.
struct TraceRecord {
  std::uint64_t t = 0;
  std::vector<std::pair<PortName, StreamValue>> entries;
};

struct FootprintStats {
  std::size_t active_neurons = 0;
  std::size_t stored_weights = 0;
  std::size_t stored_inputs = 0;
  std::size_t stored_outputs = 0;
  std::size_t stored_states = 0;
};

// Full runtime state of one dataflow matrix machine. The governing matrix A
// lives at the output of the distinguished Self neuron (identity on
// net_matrix, unit self-loop), so the machine can rewrite itself: anything
// whose matrix-kind output feeds Self's input contributes additively to A.
//
// Execution is a synchronous two-stroke cycle. The down stroke computes every
// active input port as a linear combination of last tick's outputs, using the
// rows of A as coefficients. The up stroke then runs each active neuron's
// transform on those latched inputs. Nothing a transform writes in stroke t
// can influence any input of stroke t.
class Machine {
 public:
  // Requires the net_matrix kind and the Self identity type in sig and a
  // bound transform for every declared type. Throws Error{invalid_signature}.
  Machine(Signature sig, Registry reg, std::uint64_t seed);

  std::uint64_t tick() const { return t_; }
  const Signature& signature() const { return sig_; }
  const Registry& registry() const { return reg_; }
  const PortName& self_input() const { return self_in_; }
  const PortName& self_output() const { return self_out_; }
  const NeuronId& self_id() const { return self_id_; }

  // The current A (Self's latest output).
  const NetMatrix& matrix() const;

  StreamValue read_output(const PortName& p) const;  // unknown_port
  StreamValue read_input(const PortName& p) const;   // unknown_port
  const std::set<NeuronId>& active() const { return active_; }
  bool is_active(const NeuronId& id) const { return active_.count(id) != 0; }
  std::set<Name> cell_names() const;
  const std::vector<std::string>& diagnostics() const { return diags_; }
  TraceRecord snapshot() const;
  FootprintStats footprint() const;

  // Declaration-time growth; inert with respect to traces.
  void add_kind(StreamKindDecl decl);
  void register_type(NeuronTypeDecl decl, TransformPtr t = nullptr);
  void bind_transform(const Name& id, TransformPtr t);

  void down_stroke();
  void up_stroke();  // requires a down stroke first; transform_failure halts
  void step(std::uint64_t n = 1);

  // Edits apply between steps, directly to the value held at Self's output.
  // Neurons gaining their first nonzero weight become active; their outputs
  // read as zero until their first up stroke.
  void apply_edit(const Edit& e);

  // Drops every non-Self neuron with no incident nonzero weight. Dropped
  // neurons cost nothing and were contributing nothing; traces continue
  // unchanged. Idempotent.
  void garbage_collect();

  void reseed(std::uint64_t seed) { rng_ = Rng(seed); }
  Rng& rng() { return rng_; }

 private:
  void refresh_active();
  void set_matrix(NetMatrix a);
  StreamValue zero_for(const PortName& p) const;

  Signature sig_;
  Registry reg_;
  PortName self_in_;
  PortName self_out_;
  NeuronId self_id_;
  std::map<NeuronId, TransformState> states_;
  std::map<PortName, StreamValue> outputs_;
  std::map<PortName, StreamValue> inputs_;
  std::set<NeuronId> active_;
  std::vector<std::string> diags_;
  std::uint64_t t_ = 0;
  bool down_done_ = false;
  Rng rng_;
};

}  // namespace dmm

#endif
