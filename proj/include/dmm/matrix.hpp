#ifndef DMM_MATRIX_HPP
#define DMM_MATRIX_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "dmm/mask.hpp"
#include "dmm/port.hpp"

namespace dmm {

class Signature;

// The sparse network matrix A: finitely supported map from (input port,
// output port) to nonzero weight, stored row-major because the down stroke
// consumes whole rows. Canonical form is maintained by every operation:
// no stored zeros, no empty rows, and no entry whose row and column carry
// different stream kinds.
class NetMatrix {
 public:
  using Row = std::map<PortName, double>;

  double get(const PortName& row, const PortName& col) const;

  // cross_kind_weight when the two ports' kinds differ; w == 0 erases.
  void set(const Signature& sig, const PortName& row, const PortName& col,
           double w);

  // *this += s * other, zeros pruned.
  void add_scaled(const NetMatrix& other, double s);

  // nullptr when the row has no support.
  const Row* row(const PortName& r) const;

  const std::map<PortName, Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::size_t entry_count() const;

  // Exactly the input ports with a nonzero row and the output ports with a
  // nonzero column.
  std::pair<std::set<PortName>, std::set<PortName>> active_ports() const;

  // One line per entry: "<row>\t<col>\t<weight>", shortest round-trip
  // decimals, rows and columns in canonical port order.
  std::string dump() const;

  bool operator==(const NetMatrix&) const = default;

  // For callers that have already established the kind-block invariant
  // (the update kernel; value combination). w must be nonzero.
  void add_entry_unchecked(const PortName& row, const PortName& col, double w);

 private:
  std::map<PortName, Row> rows_;
};

// Arguments of the masked row update: A += gate * gamma^T ∘ (alpha ∘ beta A),
// element-wise a_ij += gate * gamma_i * alpha_j * sum_k beta_k a_kj.
struct UpdateSpec {
  MaskVector gamma;  // finite row mask: destination rows and their multipliers
  MaskVector alpha;  // column mask, finite or all-ones tail
  MaskVector beta;   // finite row mask: source row combination
  double gate = 1.0;

  // Validates kinds, directions, and finiteness of gamma/beta.
  // Throws Error{malformed_mask}.
  static UpdateSpec make(const Signature& sig, MaskVector gamma,
                         MaskVector alpha, MaskVector beta, double gate);
};

// Row vector beta * A with entries sum_k beta_k a_kj; finite support.
std::map<PortName, double> left_multiply(const MaskVector& beta,
                                         const NetMatrix& A);

// The delta matrix of the masked row update; the caller adds it to A.
// gate == 0 short-circuits to an empty delta.
NetMatrix update_kernel(const NetMatrix& A, const UpdateSpec& u);

// Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace dmm

#endif
