#include "dmm/trace.hpp"

namespace dmm {

namespace {

using nlohmann::json;

json render_mask(const MaskVector& m) {
  json support = json::array();
  for (const auto& [p, v] : m.support) {
    support.push_back(json::array({p.str(), v}));
  }
  json tail;
  if (m.all_ones_tail) {
    tail = json{{"all_ones", m.element_kind->text()}};
  } else {
    tail = "zero";
  }
  return json{{"support", std::move(support)}, {"tail", std::move(tail)}};
}

json render_matrix(const NetMatrix& a) {
  json entries = json::array();
  for (const auto& [r, row] : a.rows()) {
    for (const auto& [c, w] : row) {
      entries.push_back(json::array({r.str(), c.str(), w}));
    }
  }
  return entries;
}

struct Renderer {
  json operator()(const ScalarV& v) const { return v.x; }
  json operator()(const VectorV& v) const { return v.xs; }
  json operator()(const RowMaskV& v) const { return render_mask(v.m); }
  json operator()(const ColumnMaskV& v) const { return render_mask(v.m); }
  json operator()(const MatrixV& v) const { return render_matrix(v.a); }
  json operator()(const SampleV& v) const {
    if (!v.s) return nullptr;
    json payload;
    if (const auto* d = std::get_if<double>(&v.s->payload)) {
      payload = *d;
    } else {
      payload = std::get<std::string>(v.s->payload);
    }
    return json{{"payload", std::move(payload)},
                {"sign", v.s->negative ? "-" : "+"}};
  }
};

}  // namespace

nlohmann::json render_value(const StreamValue& v) {
  return std::visit(Renderer{}, v);
}

nlohmann::json render_record(const Machine& m) {
  TraceRecord rec = m.snapshot();
  json values = json::array();
  for (const auto& [p, v] : rec.entries) {
    values.push_back(json{{"port", p.str()},
                          {"kind", m.signature().port_kind(p).kind_name.text()},
                          {"value", render_value(v)}});
  }
  return json{{"t", rec.t}, {"values", std::move(values)}};
}

std::string trace_line(const Machine& m) { return render_record(m).dump(); }

std::string show_port_line(const Machine& m, const PortName& p) {
  StreamValue v = p.dir == PortDir::output ? m.read_output(p) : m.read_input(p);
  return p.str() + " = " + render_value(v).dump();
}

}  // namespace dmm
