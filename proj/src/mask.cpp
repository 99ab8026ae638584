#include "dmm/mask.hpp"

#include "dmm/error.hpp"
#include "dmm/signature.hpp"

namespace dmm {

double MaskVector::finite_at(const PortName& p) const {
  auto it = support.find(p);
  return it == support.end() ? 0.0 : it->second;
}

double MaskVector::at_same_kind(const PortName& p) const {
  return finite_at(p) + (all_ones_tail ? 1.0 : 0.0);
}

MaskVector MaskVector::finite(std::map<PortName, double> entries,
                              std::optional<Name> kind) {
  MaskVector m;
  for (auto& [p, v] : entries) {
    if (v != 0.0) m.support.emplace(p, v);
  }
  m.element_kind = std::move(kind);
  return m;
}

MaskVector MaskVector::all_ones(Name kind) {
  MaskVector m;
  m.all_ones_tail = true;
  m.element_kind = std::move(kind);
  return m;
}

void check_mask(const Signature& sig, MaskVector& m, PortDir axis) {
  if (m.all_ones_tail && !m.element_kind) {
    throw Error(ErrorCode::malformed_mask,
                "all-ones tail requires an element kind");
  }
  for (const auto& [p, v] : m.support) {
    if (v == 0.0) {
      throw Error(ErrorCode::malformed_mask,
                  "zero support entry at " + p.str());
    }
    if (p.dir != axis) {
      throw Error(ErrorCode::malformed_mask,
                  std::string(axis == PortDir::input ? "row" : "column") +
                      " mask holds a port of the wrong direction: " + p.str());
    }
    const Name& k = sig.port_kind(p).kind_name;
    if (!m.element_kind) {
      m.element_kind = k;
    } else if (*m.element_kind != k) {
      throw Error(ErrorCode::malformed_mask,
                  "mask mixes kinds '" + m.element_kind->text() + "' and '" +
                      k.text() + "' (at " + p.str() + ")");
    }
  }
}

}  // namespace dmm
