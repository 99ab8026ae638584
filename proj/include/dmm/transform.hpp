#ifndef DMM_TRANSFORM_HPP
#define DMM_TRANSFORM_HPP

#include <any>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dmm/signature.hpp"
#include "dmm/value.hpp"

namespace dmm {

using TransformState = std::any;

// The causal stream transform behind a neuron type. Implementations carry no
// per-neuron data: state travels in the opaque TransformState, one per cell,
// so outputs at tick t depend only on earlier inputs and the initial state.
class Transform {
 public:
  virtual ~Transform() = default;

  // Rejects declarations this transform cannot animate.
  // Throws Error{arity_mismatch} or Error{kind_mismatch}.
  virtual void check_decl(const NeuronTypeDecl& decl,
                          const Signature& sig) const = 0;

  virtual TransformState initial_state() const { return {}; }

  // One tick: consumes the inputs latched by the preceding down stroke and
  // produces one value per declared output. diags (optional) collects
  // non-fatal complaints such as malformed runtime masks.
  virtual std::vector<StreamValue> step(TransformState& state,
                                        std::span<const StreamValue> inputs,
                                        Rng& rng,
                                        std::vector<std::string>* diags) const = 0;
};

using TransformPtr = std::shared_ptr<const Transform>;

// Bindings from transform ids to transforms and from type names to their
// declarations' transforms. Hosts extend it before (or between) steps.
class Registry {
 public:
  void bind(const Name& id, TransformPtr t);  // duplicate_transform
  bool has(const Name& id) const { return transforms_.count(id) != 0; }
  const Transform& transform(const Name& id) const;  // unbound_transform
  TransformPtr transform_ptr(const Name& id) const;  // unbound_transform

  // identity, sigmoid, tanh, relu, linear, gated, updateweights, one.
  static Registry with_builtins();

 private:
  std::map<Name, TransformPtr> transforms_;
};

// Identity on any single kind; one-tick delay comes from the engine phasing.
TransformPtr builtin_identity();

// name in {sigmoid, tanh, relu, linear}; 1 scalar in, 1 scalar out.
TransformPtr builtin_scalar(const std::string& name);

// 2 inputs (value of some kind, scalar mask), 1 output of the value kind;
// output = mask * value, and a zero mask skips the multiplication entirely.
TransformPtr builtin_gated();

// 0 inputs, emits v every tick.
TransformPtr builtin_const(StreamValue v);

// 5 inputs (matrix, gamma row mask, beta row mask, alpha column mask, scalar
// gate), 1 matrix output carrying the masked-row-update delta. Malformed
// runtime masks degrade to an empty delta plus a diagnostic.
TransformPtr builtin_updateweights();

// Declares decl in sig after checking it against its transform. When t is
// non-null it is bound under decl.transform_id first; otherwise the id must
// already be bound.
void register_type(Signature& sig, Registry& reg, NeuronTypeDecl decl,
                   TransformPtr t = nullptr);

}  // namespace dmm

#endif
