#ifndef DMM_TRACE_HPP
#define DMM_TRACE_HPP

#include <string>

#include <json.hpp>

#include "dmm/machine.hpp"

namespace dmm {

// JSON renderings used by traces, #show, and the Python bindings. All map
// iteration is over ordered containers, so output is byte-deterministic.
nlohmann::json render_value(const StreamValue& v);
nlohmann::json render_record(const Machine& m);

// One line-delimited record: {"t":…,"values":[{"port","kind","value"}…]}.
std::string trace_line(const Machine& m);

// "<port> = <value json>"
std::string show_port_line(const Machine& m, const PortName& p);

}  // namespace dmm

#endif
