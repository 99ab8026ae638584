#include "dmm/transform.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "dmm/error.hpp"

namespace dmm {

void Registry::bind(const Name& id, TransformPtr t) {
  if (!t) {
    throw Error(ErrorCode::invalid_argument, "null transform for '" + id.text() + "'");
  }
  if (has(id)) {
    throw Error(ErrorCode::duplicate_transform,
                "transform id '" + id.text() + "' already bound");
  }
  transforms_.emplace(id, std::move(t));
}

const Transform& Registry::transform(const Name& id) const {
  auto it = transforms_.find(id);
  if (it == transforms_.end()) {
    throw Error(ErrorCode::unbound_transform,
                "no transform bound under id '" + id.text() + "'");
  }
  return *it->second;
}

TransformPtr Registry::transform_ptr(const Name& id) const {
  auto it = transforms_.find(id);
  if (it == transforms_.end()) {
    throw Error(ErrorCode::unbound_transform,
                "no transform bound under id '" + id.text() + "'");
  }
  return it->second;
}

namespace {

void require_arity(const NeuronTypeDecl& decl, std::size_t ins,
                   std::size_t outs) {
  if (decl.inputs.size() != ins || decl.outputs.size() != outs) {
    throw Error(ErrorCode::arity_mismatch,
                "type '" + decl.type_name.text() + "' declares " +
                    std::to_string(decl.inputs.size()) + " inputs / " +
                    std::to_string(decl.outputs.size()) +
                    " outputs; transform wants " + std::to_string(ins) +
                    " / " + std::to_string(outs));
  }
}

void require_shape(const NeuronTypeDecl& decl, const Signature& sig,
                   const FieldDecl& f, ShapeTag tag) {
  if (sig.kind(f.kind_name).shape.tag != tag) {
    throw Error(ErrorCode::kind_mismatch,
                "field '" + f.field_name.text() + "' of '" +
                    decl.type_name.text() + "' has an incompatible kind for "
                    "this transform");
  }
}

class IdentityTransform final : public Transform {
 public:
  void check_decl(const NeuronTypeDecl& decl, const Signature& sig) const override {
    require_arity(decl, 1, 1);
    if (decl.inputs[0].kind_name != decl.outputs[0].kind_name) {
      throw Error(ErrorCode::kind_mismatch,
                  "identity needs matching input/output kinds on '" +
                      decl.type_name.text() + "'");
    }
    (void)sig;
  }
  std::vector<StreamValue> step(TransformState&, std::span<const StreamValue> in,
                                Rng&, std::vector<std::string>*) const override {
    return {in[0]};
  }
};

class ScalarFnTransform final : public Transform {
 public:
  explicit ScalarFnTransform(double (*fn)(double)) : fn_(fn) {}
  void check_decl(const NeuronTypeDecl& decl, const Signature& sig) const override {
    require_arity(decl, 1, 1);
    require_shape(decl, sig, decl.inputs[0], ShapeTag::scalar);
    require_shape(decl, sig, decl.outputs[0], ShapeTag::scalar);
  }
  std::vector<StreamValue> step(TransformState&, std::span<const StreamValue> in,
                                Rng&, std::vector<std::string>*) const override {
    return {ScalarV{fn_(std::get<ScalarV>(in[0]).x)}};
  }

 private:
  double (*fn_)(double);
};

class GatedTransform final : public Transform {
 public:
  void check_decl(const NeuronTypeDecl& decl, const Signature& sig) const override {
    require_arity(decl, 2, 1);
    if (decl.inputs[0].kind_name != decl.outputs[0].kind_name) {
      throw Error(ErrorCode::kind_mismatch,
                  "gated value input and output must share a kind on '" +
                      decl.type_name.text() + "'");
    }
    require_shape(decl, sig, decl.inputs[1], ShapeTag::scalar);
  }
  std::vector<StreamValue> step(TransformState&, std::span<const StreamValue> in,
                                Rng& rng, std::vector<std::string>*) const override {
    double mask = std::get<ScalarV>(in[1]).x;
    // A zero mask skips the value computation outright; a unit mask skips
    // the multiplication. Behavior is identical either way.
    StreamKindDecl kd = probe_kind(in[0]);
    if (mask == 0.0) return {zero_value(kd)};
    if (mask == 1.0) return {in[0]};
    return {scale_value(kd, mask, in[0], rng)};
  }

 private:
  // The value kind is identified by the tag of the incoming value; vector
  // dim is recovered from the payload itself.
  static StreamKindDecl probe_kind(const StreamValue& v) {
    StreamKindDecl kd{Name("k"), KindShape::scalar()};
    switch (v.index()) {
      case 0: kd.shape = KindShape::scalar(); break;
      case 1: kd.shape = KindShape::vector(
          static_cast<int>(std::get<VectorV>(v).xs.size())); break;
      case 2: kd.shape = KindShape::row_mask(); break;
      case 3: kd.shape = KindShape::column_mask(); break;
      case 4: kd.shape = KindShape::net_matrix(); break;
      case 5: kd.shape = KindShape::signed_sample(Name("x")); break;
    }
    return kd;
  }
};

class ConstTransform final : public Transform {
 public:
  explicit ConstTransform(StreamValue v) : v_(std::move(v)) {}
  void check_decl(const NeuronTypeDecl& decl, const Signature& sig) const override {
    require_arity(decl, 0, 1);
    if (!tag_matches(sig.kind(decl.outputs[0].kind_name), v_)) {
      throw Error(ErrorCode::kind_mismatch,
                  "constant value does not carry the declared output kind of '" +
                      decl.type_name.text() + "'");
    }
  }
  std::vector<StreamValue> step(TransformState&, std::span<const StreamValue>,
                                Rng&, std::vector<std::string>*) const override {
    return {v_};
  }

 private:
  StreamValue v_;
};

class UpdateWeightsTransform final : public Transform {
 public:
  void check_decl(const NeuronTypeDecl& decl, const Signature& sig) const override {
    require_arity(decl, 5, 1);
    require_shape(decl, sig, decl.inputs[0], ShapeTag::net_matrix);
    require_shape(decl, sig, decl.inputs[1], ShapeTag::row_mask);
    require_shape(decl, sig, decl.inputs[2], ShapeTag::row_mask);
    require_shape(decl, sig, decl.inputs[3], ShapeTag::column_mask);
    require_shape(decl, sig, decl.inputs[4], ShapeTag::scalar);
    require_shape(decl, sig, decl.outputs[0], ShapeTag::net_matrix);
  }
  std::vector<StreamValue> step(TransformState&, std::span<const StreamValue> in,
                                Rng&, std::vector<std::string>* diags) const override {
    const NetMatrix& a = std::get<MatrixV>(in[0]).a;
    const MaskVector& gamma = std::get<RowMaskV>(in[1]).m;
    const MaskVector& beta = std::get<RowMaskV>(in[2]).m;
    const MaskVector& alpha = std::get<ColumnMaskV>(in[3]).m;
    double gate = std::get<ScalarV>(in[4]).x;
    if (gate == 0.0) return {MatrixV{}};
    std::string complaint;
    if (!gamma.is_finite() || !beta.is_finite()) {
      complaint = "infinite gamma/beta row mask";
    } else if (!consistent_kinds(gamma, beta, alpha)) {
      complaint = "masks of mixed kinds";
    } else if (bad_axis(gamma, PortDir::input) || bad_axis(beta, PortDir::input) ||
               bad_axis(alpha, PortDir::output)) {
      complaint = "mask holds ports of the wrong direction";
    }
    if (!complaint.empty()) {
      // A running machine should survive a transiently bad mask value:
      // emit the zero delta and leave a note.
      if (diags) diags->push_back("updateweights: " + complaint + "; delta dropped");
      return {MatrixV{}};
    }
    UpdateSpec spec{gamma, alpha, beta, gate};
    return {MatrixV{update_kernel(a, spec)}};
  }

 private:
  static bool bad_axis(const MaskVector& m, PortDir axis) {
    for (const auto& [p, v] : m.support) {
      if (p.dir != axis) return true;
    }
    return false;
  }
  static bool consistent_kinds(const MaskVector& a, const MaskVector& b,
                               const MaskVector& c) {
    std::optional<Name> k;
    for (const MaskVector* m : {&a, &b, &c}) {
      if (!m->element_kind) continue;
      if (!k) {
        k = m->element_kind;
      } else if (*k != *m->element_kind) {
        return false;
      }
    }
    return true;
  }
};

double sigmoid_fn(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double relu_fn(double x) { return x > 0.0 ? x : 0.0; }
double linear_fn(double x) { return x; }
double tanh_fn(double x) { return std::tanh(x); }

}  // namespace

TransformPtr builtin_identity() {
  return std::make_shared<IdentityTransform>();
}

TransformPtr builtin_scalar(const std::string& name) {
  if (name == "sigmoid") return std::make_shared<ScalarFnTransform>(&sigmoid_fn);
  if (name == "tanh") return std::make_shared<ScalarFnTransform>(&tanh_fn);
  if (name == "relu") return std::make_shared<ScalarFnTransform>(&relu_fn);
  if (name == "linear") return std::make_shared<ScalarFnTransform>(&linear_fn);
  throw Error(ErrorCode::invalid_argument,
              "no builtin scalar transform named '" + name + "'");
}

TransformPtr builtin_gated() { return std::make_shared<GatedTransform>(); }

TransformPtr builtin_const(StreamValue v) {
  return std::make_shared<ConstTransform>(std::move(v));
}

TransformPtr builtin_updateweights() {
  return std::make_shared<UpdateWeightsTransform>();
}

Registry Registry::with_builtins() {
  Registry r;
  r.bind(Name("identity"), builtin_identity());
  for (const char* n : {"sigmoid", "tanh", "relu", "linear"}) {
    r.bind(Name(n), builtin_scalar(n));
  }
  r.bind(Name("gated"), builtin_gated());
  r.bind(Name("updateweights"), builtin_updateweights());
  r.bind(Name("one"), builtin_const(ScalarV{1.0}));
  return r;
}

void register_type(Signature& sig, Registry& reg, NeuronTypeDecl decl,
                   TransformPtr t) {
  if (t) {
    reg.bind(decl.transform_id, std::move(t));
  }
  reg.transform(decl.transform_id).check_decl(decl, sig);
  sig.add_type(std::move(decl));
}

}  // namespace dmm
