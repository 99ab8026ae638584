#include "dmm/lang.hpp"
#include "dmm/trace.hpp"

namespace dmm {

const Binding* Env::find(const std::string& id) const {
  auto it = bindings.find(id);
  return it == bindings.end() ? nullptr : &it->second;
}

Name autogen_cellname(Env& env, const Machine& m) {
  std::set<Name> machine_cells = m.cell_names();
  for (;;) {
    Name candidate("g" + std::to_string(env.autogen_counter++));
    if (env.used_cellnames.count(candidate) || machine_cells.count(candidate)) {
      continue;
    }
    env.used_cellnames.insert(candidate);
    return candidate;
  }
}

const std::map<Name, KindShape>& builtin_kind_catalog() {
  static const std::map<Name, KindShape> catalog = {
      {Name("scalar"), KindShape::scalar()},
      {Name("row_mask"), KindShape::row_mask()},
      {Name("column_mask"), KindShape::column_mask()},
      {Name("net_matrix"), KindShape::net_matrix()},
      {Name("vec2"), KindShape::vector(2)},
      {Name("vec3"), KindShape::vector(3)},
      {Name("vec4"), KindShape::vector(4)},
  };
  return catalog;
}

namespace {

void bind_ident(Env& env, const std::string& id, Binding b, SourcePos pos) {
  if (env.bindings.count(id)) {
    throw Error(ErrorCode::duplicate_identifier,
                "identifier '" + id + "' is already bound", pos);
  }
  env.bindings.emplace(id, std::move(b));
}

struct Evaluator {
  Machine& m;
  Env& env;
  SourcePos pos;
  const EvalHooks* hooks;
  std::vector<std::string> lines;

  void operator()(const KindDeclStmt& s) {
    for (const Name& n : s.names) {
      if (m.signature().has_kind(n)) {
        throw Error(ErrorCode::duplicate_kind,
                    "kind '" + n.text() + "' already declared", pos);
      }
      const auto& catalog = builtin_kind_catalog();
      auto it = catalog.find(n);
      if (it == catalog.end()) {
        throw Error(ErrorCode::unknown_kind,
                    "no stream implementation for kind '" + n.text() + "'",
                    pos);
      }
      m.add_kind({n, it->second});
    }
  }

  void operator()(const NewCellTypeStmt& s) {
    // The transform must already be bound under the type's own name.
    NeuronTypeDecl decl{s.type_name, s.inputs, s.outputs, s.type_name};
    if (!m.registry().has(decl.transform_id)) {
      throw Error(ErrorCode::unbound_transform,
                  "no transform bound under '" + decl.transform_id.text() +
                      "'; cell types take their transform from their name",
                  pos);
    }
    m.register_type(std::move(decl));
  }

  void operator()(const NeuronNameStmt& s) {
    m.signature().type(s.type_name);  // must exist
    env.used_cellnames.insert(s.cell_name);
  }

  void operator()(const NeuronDeclStmt& s) {
    const NeuronTypeDecl& decl = m.signature().type(s.type_name);
    Name cell = autogen_cellname(env, m);
    bind_ident(env, s.neuron_id, NeuronHandle{s.type_name, cell}, pos);
    auto bind_fields = [&](const std::vector<BindingItem>& items,
                           PortDir dir) {
      std::set<Name> seen;
      for (const auto& it : items) {
        if (!decl.find_field(it.field, dir)) {
          throw Error(ErrorCode::unknown_field,
                      std::string(dir == PortDir::input ? "input" : "output") +
                          " field '" + it.field.text() + "' not declared on '" +
                          s.type_name.text() + "'",
                      pos);
        }
        if (!seen.insert(it.field).second) {
          throw Error(ErrorCode::duplicate_identifier,
                      "field '" + it.field.text() + "' bound twice", pos);
        }
        bind_ident(env, it.id, PortName{s.type_name, cell, it.field, dir}, pos);
      }
    };
    bind_fields(s.outputs, PortDir::output);
    bind_fields(s.inputs, PortDir::input);
  }

  void operator()(const StreamDeclStmt& s) {
    const Binding* b = env.find(s.neuron_id);
    if (!b) {
      throw Error(ErrorCode::unknown_identifier,
                  "identifier '" + s.neuron_id + "' is not bound", pos);
    }
    const auto* h = std::get_if<NeuronHandle>(b);
    if (!h) {
      throw Error(ErrorCode::unknown_identifier,
                  "'" + s.neuron_id + "' does not name a neuron", pos);
    }
    const NeuronTypeDecl& decl = m.signature().type(h->type_name);
    const FieldDecl* f = decl.find_field(s.field, PortDir::input);
    if (!f) {
      throw Error(ErrorCode::unknown_field,
                  "input field '" + s.field.text() + "' not declared on '" +
                      h->type_name.text() + "'",
                  pos);
    }
    if (f->kind_name != s.kind_name) {
      throw Error(ErrorCode::kind_mismatch,
                  "stream declared as '" + s.kind_name.text() +
                      "' but the field carries '" + f->kind_name.text() + "'",
                  pos);
    }
    bind_ident(env, s.stream_id,
         PortName{h->type_name, h->cell_name, s.field, PortDir::input}, pos);
  }

  void operator()(const WeightStmt& s) {
    PortName dst = resolve_port(m, env, s.dst, PortDir::input);
    PortName src = resolve_port(m, env, s.src, PortDir::output);
    m.apply_edit(SetWeight{dst, src, s.value});
  }

  void operator()(const UpdateWeightsStmt& s) {
    auto resolve_terms = [&](const MaskExpr& e, std::optional<PortDir> want) {
      std::map<PortName, double> acc;
      for (const auto& t : e) {
        PortName p = resolve_port(m, env, t.ref, want);
        acc[p] += t.coef;  // repeated streams accumulate
      }
      return acc;
    };
    std::map<PortName, double> gamma = resolve_terms(s.lhs, PortDir::input);

    // The right-hand side is either a combination of input streams (add rows
    // of A) or of output streams (add explicit column coefficients through a
    // synthesized all-ones source row).
    bool saw_in = false, saw_out = false;
    std::vector<std::pair<PortName, double>> rhs;
    for (const auto& t : s.rhs) {
      PortName p = resolve_port(m, env, t.ref, std::nullopt);
      (p.dir == PortDir::input ? saw_in : saw_out) = true;
      rhs.emplace_back(p, t.coef);
    }
    if (saw_in && saw_out) {
      throw Error(ErrorCode::malformed_mask,
                  "right-hand side mixes input and output streams", pos);
    }
    if (saw_in) {
      std::map<PortName, double> beta;
      for (const auto& [p, c] : rhs) beta[p] += c;
      std::optional<Name> kind;
      if (!beta.empty()) {
        kind = m.signature().port_kind(beta.begin()->first).kind_name;
      } else if (!gamma.empty()) {
        kind = m.signature().port_kind(gamma.begin()->first).kind_name;
      }
      if (!kind) return;
      UpdateSpec spec = UpdateSpec::make(
          m.signature(), MaskVector::finite(std::move(gamma)),
          MaskVector::all_ones(*kind), MaskVector::finite(std::move(beta)),
          1.0);
      m.apply_edit(UpdateWeights{std::move(spec)});
    } else {
      // Element-wise this is a_ij += gamma_i * alpha_j, since the synthetic
      // row is 1 at every output of the kind.
      std::map<PortName, double> alpha;
      for (const auto& [p, c] : rhs) alpha[p] += c;
      // Validate every pair up front so a bad statement applies nothing.
      for (const auto& [i, gi] : gamma) {
        const Name& rk = m.signature().port_kind(i).kind_name;
        for (const auto& [j, aj] : alpha) {
          const Name& ck = m.signature().port_kind(j).kind_name;
          if (rk != ck) {
            throw Error(ErrorCode::cross_kind_weight,
                        "row " + i.str() + " carries kind '" + rk.text() +
                            "' but column " + j.str() + " carries '" +
                            ck.text() + "'",
                        pos);
          }
        }
      }
      for (const auto& [i, gi] : gamma) {
        for (const auto& [j, aj] : alpha) {
          double add = gi * aj;
          if (add == 0.0) continue;
          double cur = m.matrix().get(i, j);
          m.apply_edit(SetWeight{i, j, cur + add});
        }
      }
    }
  }

  void operator()(const StepStmt& s) {
    if (s.n == 0) {
      throw Error(ErrorCode::invalid_argument, "step count must be positive",
                  pos);
    }
    for (std::uint64_t i = 0; i < s.n; ++i) {
      m.step(1);
      if (hooks && hooks->on_tick) hooks->on_tick(m);
    }
  }

  void operator()(const ShowStmt& s) {
    if (s.matrix) {
      std::string d = m.matrix().dump();
      std::size_t start = 0;
      while (start < d.size()) {
        std::size_t nl = d.find('\n', start);
        if (nl == std::string::npos) {
          lines.push_back(d.substr(start));
          break;
        }
        lines.push_back(d.substr(start, nl - start));
        start = nl + 1;
      }
      return;
    }
    PortName p = resolve_port(m, env, *s.ref, std::nullopt);
    lines.push_back(show_port_line(m, p));
  }

  void operator()(const SeedStmt& s) { m.reseed(s.seed); }

  void operator()(const GcStmt&) { m.garbage_collect(); }
};

}  // namespace

PortName resolve_port(const Machine& m, Env& env, const PortRef& ref,
                      std::optional<PortDir> want) {
  PortName p = [&] {
    if (const auto* id = std::get_if<IdentRef>(&ref)) {
      const Binding* b = env.find(id->id);
      if (!b) {
        throw Error(ErrorCode::unknown_identifier,
                    "identifier '" + id->id + "' is not bound", id->pos);
      }
      const auto* port = std::get_if<PortName>(b);
      if (!port) {
        throw Error(ErrorCode::unknown_identifier,
                    "'" + id->id + "' names a neuron, not a stream", id->pos);
      }
      return *port;
    }
    const auto& t = std::get<PortRef3>(ref);
    const NeuronTypeDecl& decl = m.signature().type(t.type_name);
    PortDir dir;
    if (!decl.find_field_any(t.field_name, &dir)) {
      throw Error(ErrorCode::unknown_field,
                  "field '" + t.field_name.text() + "' not declared on '" +
                      t.type_name.text() + "'",
                  t.pos);
    }
    env.used_cellnames.insert(t.cell_name);
    return PortName{t.type_name, t.cell_name, t.field_name, dir};
  }();
  if (want && p.dir != *want) {
    SourcePos pos = std::holds_alternative<IdentRef>(ref)
                        ? std::get<IdentRef>(ref).pos
                        : std::get<PortRef3>(ref).pos;
    throw Error(ErrorCode::invalid_argument,
                std::string(*want == PortDir::input
                                ? "an input stream is required"
                                : "an output stream is required") +
                    ", got " + p.str(),
                pos);
  }
  return p;
}

std::vector<std::string> eval_statement(Machine& m, Env& env,
                                        const Statement& s,
                                        const EvalHooks* hooks) {
  Evaluator ev{m, env, s.pos, hooks, {}};
  std::visit(ev, s.node);
  return std::move(ev.lines);
}

}  // namespace dmm
