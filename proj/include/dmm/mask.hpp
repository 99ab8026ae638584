#ifndef DMM_MASK_HPP
#define DMM_MASK_HPP

#include <map>
#include <optional>

#include "dmm/port.hpp"

namespace dmm {

class Signature;

// Finitely describable vector over the ports of one stream kind. The value at
// a port is the stored support entry (if any) plus the tail: 0, or 1 at every
// port of element_kind when all_ones_tail is set. Row masks range over input
// ports, column masks over output ports.
struct MaskVector {
  std::map<PortName, double> support;  // nonzero entries only
  bool all_ones_tail = false;
  std::optional<Name> element_kind;  // required when all_ones_tail is set

  bool is_finite() const { return !all_ones_tail; }
  bool empty() const { return support.empty() && !all_ones_tail; }

  // Support component only; the all-ones tail is applied by the caller,
  // which knows which ports are in play.
  double finite_at(const PortName& p) const;

  // Value at a port of the mask's own kind.
  double at_same_kind(const PortName& p) const;

  static MaskVector finite(std::map<PortName, double> entries,
                           std::optional<Name> kind = {});
  static MaskVector all_ones(Name kind);

  bool operator==(const MaskVector&) const = default;
};

// Checks the single-kind discipline and direction of every support port and
// that all_ones tails carry a kind; fills in element_kind when it can be
// inferred. Throws Error{malformed_mask}.
void check_mask(const Signature& sig, MaskVector& m, PortDir axis);

}  // namespace dmm

#endif
