#include "dmm/port.hpp"

namespace dmm {

std::string PortName::str() const {
  return type_name.text() + ":" + cell_name.text() + ":" + field_name.text();
}

std::strong_ordering compare_ports(const PortName& a, const PortName& b) {
  return a <=> b;
}

PortName input_port(Name type, Name cell, Name field) {
  return {std::move(type), std::move(cell), std::move(field), PortDir::input};
}

PortName output_port(Name type, Name cell, Name field) {
  return {std::move(type), std::move(cell), std::move(field), PortDir::output};
}

}  // namespace dmm
