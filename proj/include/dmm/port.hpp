#ifndef DMM_PORT_HPP
#define DMM_PORT_HPP

#include <compare>
#include <string>

#include "dmm/name.hpp"

namespace dmm {

enum class PortDir { input, output };

// Address of one neuron input or output. Input ports index matrix rows,
// output ports index matrix columns. The member order gives the canonical
// iteration order: lexicographic on (type, cell, field), inputs before
// outputs as a final tiebreak so the order is total.
struct PortName {
  Name type_name;
  Name cell_name;
  Name field_name;
  PortDir dir = PortDir::input;

  auto operator<=>(const PortName&) const = default;
  bool operator==(const PortName&) const = default;

  // Canonical rendering "type:cell:field" used by dumps and traces.
  std::string str() const;
};

std::strong_ordering compare_ports(const PortName& a, const PortName& b);

PortName input_port(Name type, Name cell, Name field);
PortName output_port(Name type, Name cell, Name field);

}  // namespace dmm

#endif
