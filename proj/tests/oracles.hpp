// Test-only helpers: dense shadow models and random-instance generators used
// to cross-check the sparse kernels. Everything here is kept independent of
// the implementation paths it validates: the dense kernel is a literal triple
// loop over a dense array, and the dense recurrence is plain vector algebra.
#ifndef DMM_TESTS_ORACLES_HPP
#define DMM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "dmm/machine.hpp"
#include "dmm/matrix.hpp"
#include "dmm/rng.hpp"
#include "dmm/signature.hpp"
#include "dmm/value.hpp"

namespace dmm_test {

using namespace dmm;

inline bool close(double a, double b, double tol = 1e-12) {
  return std::fabs(a - b) <= tol;
}

// A two-kind port universe: `n` cells of a scalar-kind type "ta" and `n`
// cells of a vec2-kind type "tb", one input and one output field each.
struct PortUniverse {
  Signature sig;
  std::vector<PortName> rows;  // all input ports, canonical order
  std::vector<PortName> cols;  // all output ports
  std::map<PortName, int> row_ix, col_ix;
  Name kind_a{"ka"}, kind_b{"kb"};

  explicit PortUniverse(int n_per_kind = 8) {
    sig = Signature::base();
    sig.add_kind({kind_a, KindShape::scalar()});
    sig.add_kind({kind_b, KindShape::vector(2)});
    sig.add_type({Name("ta"), {{Name("x"), kind_a}}, {{Name("y"), kind_a}},
                  Name("identity")});
    sig.add_type({Name("tb"), {{Name("x"), kind_b}}, {{Name("y"), kind_b}},
                  Name("identity")});
    for (const char* t : {"ta", "tb"}) {
      for (int i = 0; i < n_per_kind; ++i) {
        Name cell("c" + std::to_string(i));
        rows.push_back(input_port(Name(t), cell, Name("x")));
        cols.push_back(output_port(Name(t), cell, Name("y")));
      }
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_ix[rows[i]] = i;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) col_ix[cols[j]] = j;
  }

  const Name& kind_of(const PortName& p) const {
    return sig.port_kind(p).kind_name;
  }
  bool same_kind(const PortName& r, const PortName& c) const {
    return kind_of(r) == kind_of(c);
  }
};

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const PortUniverse& u, const NetMatrix& a) {
  Dense d(u.rows.size(), std::vector<double>(u.cols.size(), 0.0));
  for (const auto& [r, row] : a.rows()) {
    for (const auto& [c, w] : row) {
      d.at(u.row_ix.at(r)).at(u.col_ix.at(c)) = w;
    }
  }
  return d;
}

// Literal element-wise statement of the masked row update over the dense
// shadow: a_ij += gate * gamma_i * alpha_j * sum_k beta_k a_kj.
inline Dense dense_update(const PortUniverse& u, const Dense& a,
                          const MaskVector& gamma, const MaskVector& alpha,
                          const MaskVector& beta, double gate) {
  auto mask_at = [&](const MaskVector& m, const PortName& p) {
    double v = 0.0;
    auto it = m.support.find(p);
    if (it != m.support.end()) v += it->second;
    if (m.all_ones_tail && m.element_kind && u.kind_of(p) == *m.element_kind) {
      v += 1.0;
    }
    return v;
  };
  Dense out = a;
  for (std::size_t i = 0; i < u.rows.size(); ++i) {
    for (std::size_t j = 0; j < u.cols.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < u.rows.size(); ++k) {
        s += mask_at(beta, u.rows[k]) * a[k][j];
      }
      out[i][j] += gate * mask_at(gamma, u.rows[i]) * mask_at(alpha, u.cols[j]) * s;
    }
  }
  return out;
}

// Random sparse same-kind matrix with weights U[-2,2].
inline NetMatrix random_matrix(const PortUniverse& u, Rng& rng,
                               double density = 0.3) {
  NetMatrix a;
  for (const auto& r : u.rows) {
    for (const auto& c : u.cols) {
      if (!u.same_kind(r, c)) continue;
      if (rng.uniform01() >= density) continue;
      double w = rng.uniform(-2.0, 2.0);
      if (w != 0.0) a.set(u.sig, r, c, w);
    }
  }
  return a;
}

// Random finite mask over the ports of one kind.
inline MaskVector random_mask(const PortUniverse& u,
                              const std::vector<PortName>& ports,
                              const Name& kind, Rng& rng, double density = 0.4) {
  std::map<PortName, double> support;
  for (const auto& p : ports) {
    if (u.kind_of(p) != kind) continue;
    if (rng.uniform01() >= density) continue;
    double v = rng.uniform(-2.0, 2.0);
    if (v != 0.0) support[p] = v;
  }
  return MaskVector::finite(std::move(support), kind);
}

// ---- machine-building helpers ----------------------------------------------

struct ScalarNetBuilder {
  Signature sig = Signature::base();
  Registry reg = Registry::with_builtins();
  Name scalar{"scalar"};

  ScalarNetBuilder() {
    sig.add_kind({scalar, KindShape::scalar()});
    sig.add_type({Name("sigmoid"), {{Name("x"), scalar}}, {{Name("y"), scalar}},
                  Name("sigmoid")});
    sig.add_type({Name("idscalar"), {{Name("in"), scalar}},
                  {{Name("out"), scalar}}, Name("identity")});
    sig.add_type({Name("one"), {}, {{Name("out"), scalar}}, Name("one")});
  }

  Machine machine(std::uint64_t seed) { return Machine(sig, reg, seed); }
};

inline double sigmoid_ref(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace dmm_test

#endif
