#include "dmm/value.hpp"

#include <cmath>

#include "dmm/error.hpp"

namespace dmm {

const char* tag_name(const StreamValue& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return "vector";
    case 2: return "row_mask";
    case 3: return "column_mask";
    case 4: return "net_matrix";
    case 5: return "signed_sample";
  }
  return "?";
}

bool tag_matches(const StreamKindDecl& kind, const StreamValue& v) {
  switch (kind.shape.tag) {
    case ShapeTag::scalar:
      return std::holds_alternative<ScalarV>(v);
    case ShapeTag::vector:
      return std::holds_alternative<VectorV>(v) &&
             static_cast<int>(std::get<VectorV>(v).xs.size()) ==
                 kind.shape.dim;
    case ShapeTag::row_mask:
      return std::holds_alternative<RowMaskV>(v);
    case ShapeTag::column_mask:
      return std::holds_alternative<ColumnMaskV>(v);
    case ShapeTag::net_matrix:
      return std::holds_alternative<MatrixV>(v);
    case ShapeTag::signed_sample:
      return std::holds_alternative<SampleV>(v);
  }
  return false;
}

StreamValue zero_value(const StreamKindDecl& kind) {
  switch (kind.shape.tag) {
    case ShapeTag::scalar:
      return ScalarV{0.0};
    case ShapeTag::vector:
      return VectorV{std::vector<double>(kind.shape.dim, 0.0)};
    case ShapeTag::row_mask:
      return RowMaskV{MaskVector{}};
    case ShapeTag::column_mask:
      return ColumnMaskV{MaskVector{}};
    case ShapeTag::net_matrix:
      return MatrixV{NetMatrix{}};
    case ShapeTag::signed_sample:
      return SampleV{std::nullopt};
  }
  return ScalarV{0.0};
}

namespace {

void require_tag(const StreamKindDecl& kind, const StreamValue& v) {
  if (!tag_matches(kind, v)) {
    throw Error(ErrorCode::kind_mismatch,
                "value tagged '" + std::string(tag_name(v)) +
                    "' cannot combine under kind '" + kind.kind_name.text() +
                    "'");
  }
}

// Shared by row and column masks; the value at any port is the support entry
// plus the tail, so combination is plain linear algebra on both parts.
MaskVector combine_masks(const std::vector<LinTerm>& terms,
                         const std::vector<const MaskVector*>& masks) {
  MaskVector out;
  double tail = 0.0;
  std::optional<Name> tail_kind;
  std::optional<Name> kind;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const MaskVector& m = *masks[i];
    double c = terms[i].coef;
    if (m.element_kind) {
      if (!kind) {
        kind = m.element_kind;
      } else if (*kind != *m.element_kind) {
        throw Error(ErrorCode::kind_mismatch,
                    "mask terms span kinds '" + kind->text() + "' and '" +
                        m.element_kind->text() + "'");
      }
    }
    if (c == 0.0) continue;
    if (m.all_ones_tail) {
      tail += c;
      if (tail_kind && *tail_kind != *m.element_kind) {
        throw Error(ErrorCode::mask_tail_conflict,
                    "all-ones tails of different kinds");
      }
      tail_kind = m.element_kind;
    }
    for (const auto& [p, v] : m.support) out.support[p] += c * v;
  }
  for (auto it = out.support.begin(); it != out.support.end();) {
    it = it->second == 0.0 ? out.support.erase(it) : std::next(it);
  }
  if (tail == 1.0) {
    out.all_ones_tail = true;
  } else if (tail != 0.0) {
    throw Error(ErrorCode::mask_tail_conflict,
                "combined all-ones tails sum to " + format_double(tail) +
                    "; only 0 or 1 keeps the tail canonical");
  }
  out.element_kind = kind;
  return out;
}

}  // namespace

StreamValue linear_combine(const StreamKindDecl& kind,
                           const std::vector<LinTerm>& terms, Rng& rng) {
  for (const auto& t : terms) require_tag(kind, *t.value);
  switch (kind.shape.tag) {
    case ShapeTag::scalar: {
      double acc = 0.0;
      for (const auto& t : terms) acc += t.coef * std::get<ScalarV>(*t.value).x;
      return ScalarV{acc};
    }
    case ShapeTag::vector: {
      std::vector<double> acc(kind.shape.dim, 0.0);
      for (const auto& t : terms) {
        const auto& xs = std::get<VectorV>(*t.value).xs;
        for (int i = 0; i < kind.shape.dim; ++i) acc[i] += t.coef * xs[i];
      }
      return VectorV{std::move(acc)};
    }
    case ShapeTag::row_mask:
    case ShapeTag::column_mask: {
      std::vector<const MaskVector*> masks;
      masks.reserve(terms.size());
      for (const auto& t : terms) {
        masks.push_back(kind.shape.tag == ShapeTag::row_mask
                            ? &std::get<RowMaskV>(*t.value).m
                            : &std::get<ColumnMaskV>(*t.value).m);
      }
      MaskVector m = combine_masks(terms, masks);
      if (kind.shape.tag == ShapeTag::row_mask) return RowMaskV{std::move(m)};
      return ColumnMaskV{std::move(m)};
    }
    case ShapeTag::net_matrix: {
      NetMatrix acc;
      for (const auto& t : terms) {
        acc.add_scaled(std::get<MatrixV>(*t.value).a, t.coef);
      }
      return MatrixV{std::move(acc)};
    }
    case ShapeTag::signed_sample: {
      // Stochastic sum: select one contributing sample with probability
      // proportional to |coef|, toggling the flag under negative weight.
      std::vector<std::pair<double, const SignedSample*>> live;
      double total = 0.0;
      for (const auto& t : terms) {
        const auto& s = std::get<SampleV>(*t.value).s;
        if (t.coef == 0.0 || !s.has_value()) continue;
        live.emplace_back(t.coef, &*s);
        total += std::fabs(t.coef);
      }
      if (live.empty()) return SampleV{std::nullopt};
      std::size_t pick = 0;
      if (live.size() > 1) {
        double u = rng.uniform01() * total;
        double cum = 0.0;
        for (std::size_t i = 0; i < live.size(); ++i) {
          cum += std::fabs(live[i].first);
          if (u < cum || i + 1 == live.size()) {
            pick = i;
            break;
          }
        }
      }
      const auto& [c, s] = live[pick];
      return SampleV{c < 0.0 ? s->flipped() : *s};
    }
  }
  throw Error(ErrorCode::invalid_argument, "unreachable kind shape");
}

StreamValue linear_combine(
    const StreamKindDecl& kind,
    const std::vector<std::pair<double, StreamValue>>& terms, Rng& rng) {
  std::vector<LinTerm> ts;
  ts.reserve(terms.size());
  for (const auto& [c, v] : terms) ts.push_back({c, &v});
  return linear_combine(kind, ts, rng);
}

StreamValue scale_value(const StreamKindDecl& kind, double c,
                        const StreamValue& v, Rng& rng) {
  return linear_combine(kind, std::vector<LinTerm>{{c, &v}}, rng);
}

}  // namespace dmm
