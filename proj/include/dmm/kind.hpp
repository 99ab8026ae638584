#ifndef DMM_KIND_HPP
#define DMM_KIND_HPP

#include <optional>

#include "dmm/name.hpp"

namespace dmm {

enum class ShapeTag {
  scalar,
  vector,
  row_mask,
  column_mask,
  net_matrix,
  signed_sample,
};

// The value space a stream kind carries.
struct KindShape {
  ShapeTag tag = ShapeTag::scalar;
  int dim = 0;                        // vector shapes only, >= 1
  std::optional<Name> payload_space;  // signed_sample shapes only

  static KindShape scalar() { return {ShapeTag::scalar, 0, {}}; }
  static KindShape vector(int dim) { return {ShapeTag::vector, dim, {}}; }
  static KindShape row_mask() { return {ShapeTag::row_mask, 0, {}}; }
  static KindShape column_mask() { return {ShapeTag::column_mask, 0, {}}; }
  static KindShape net_matrix() { return {ShapeTag::net_matrix, 0, {}}; }
  static KindShape signed_sample(Name payload_space) {
    return {ShapeTag::signed_sample, 0, std::move(payload_space)};
  }

  bool operator==(const KindShape&) const = default;
};

struct StreamKindDecl {
  Name kind_name;
  KindShape shape;

  bool operator==(const StreamKindDecl&) const = default;
};

}  // namespace dmm

#endif
