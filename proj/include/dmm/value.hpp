#ifndef DMM_VALUE_HPP
#define DMM_VALUE_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dmm/kind.hpp"
#include "dmm/mask.hpp"
#include "dmm/matrix.hpp"
#include "dmm/rng.hpp"

namespace dmm {

// One draw from a signed measure, flagged with the part it came from.
struct SignedSample {
  std::variant<double, std::string> payload;
  bool negative = false;

  SignedSample flipped() const { return {payload, !negative}; }
  bool operator==(const SignedSample&) const = default;
};

struct ScalarV {
  double x = 0.0;
  bool operator==(const ScalarV&) const = default;
};
struct VectorV {
  std::vector<double> xs;
  bool operator==(const VectorV&) const = default;
};
struct RowMaskV {
  MaskVector m;
  bool operator==(const RowMaskV&) const = default;
};
struct ColumnMaskV {
  MaskVector m;
  bool operator==(const ColumnMaskV&) const = default;
};
struct MatrixV {
  NetMatrix a;
  bool operator==(const MatrixV&) const = default;
};
// nullopt is the zero measure: the stream emits nothing this tick.
struct SampleV {
  std::optional<SignedSample> s;
  bool operator==(const SampleV&) const = default;
};

// What a stream carries at one tick; the alternative must match the kind of
// the port carrying it.
using StreamValue =
    std::variant<ScalarV, VectorV, RowMaskV, ColumnMaskV, MatrixV, SampleV>;

bool tag_matches(const StreamKindDecl& kind, const StreamValue& v);
const char* tag_name(const StreamValue& v);

// Additive identity of the kind; Sample kinds yield Absent.
StreamValue zero_value(const StreamKindDecl& kind);

// One term of a linear combination. Values are borrowed, not copied; the
// engine points these at its output map.
struct LinTerm {
  double coef = 0.0;
  const StreamValue* value = nullptr;
};

// Weighted sum for the exact kinds; for sample kinds, selects term i with
// probability |c_i| / sum_j |c_j| among present samples with nonzero
// coefficients and toggles the sign flag when c_i < 0. Draws from rng only
// when two or more terms are in play.
StreamValue linear_combine(const StreamKindDecl& kind,
                           const std::vector<LinTerm>& terms, Rng& rng);

// Copying convenience overload for hosts and tests.
StreamValue linear_combine(const StreamKindDecl& kind,
                           const std::vector<std::pair<double, StreamValue>>& terms,
                           Rng& rng);

StreamValue scale_value(const StreamKindDecl& kind, double c,
                        const StreamValue& v, Rng& rng);

}  // namespace dmm

#endif
