#include <doctest.h>

#include "oracles.hpp"

using namespace dmm;
using dmm_test::close;

TEST_SUITE_BEGIN("streams");

namespace {

StreamKindDecl scalar_kind() { return {Name("s"), KindShape::scalar()}; }
StreamKindDecl vec_kind(int d) { return {Name("v"), KindShape::vector(d)}; }
StreamKindDecl sample_kind() {
  return {Name("mu"), KindShape::signed_sample(Name("tok"))};
}
StreamKindDecl rmask_kind() { return {Name("rm"), KindShape::row_mask()}; }

SampleV sample(const char* tok, bool neg = false) {
  return SampleV{SignedSample{std::string(tok), neg}};
}

}  // namespace

TEST_CASE("zero values per kind") {
  CHECK(zero_value(scalar_kind()) == StreamValue{ScalarV{0.0}});
  CHECK(zero_value(vec_kind(3)) ==
        StreamValue{VectorV{{0.0, 0.0, 0.0}}});
  CHECK(zero_value(sample_kind()) == StreamValue{SampleV{std::nullopt}});
  CHECK(std::get<MatrixV>(zero_value(
            {Name("m"), KindShape::net_matrix()})).a.empty());
}

TEST_CASE("scalar and vector combination is plain arithmetic") {
  Rng rng(1);
  auto r = linear_combine(scalar_kind(),
                          {{2.0, StreamValue{ScalarV{1.5}}},
                           {-1.0, StreamValue{ScalarV{0.5}}}},
                          rng);
  CHECK(std::get<ScalarV>(r).x == 2.5);

  auto v = linear_combine(vec_kind(2),
                          {{2.0, StreamValue{VectorV{{1.0, -3.0}}}}}, rng);
  CHECK(std::get<VectorV>(v).xs == std::vector<double>{2.0, -6.0});
}

TEST_CASE("kind mismatches are rejected") {
  Rng rng(1);
  CHECK_THROWS_AS(
      linear_combine(scalar_kind(), {{1.0, StreamValue{VectorV{{1.0}}}}}, rng),
      Error);
  CHECK_THROWS_AS(
      linear_combine(vec_kind(3), {{1.0, StreamValue{VectorV{{1.0, 2.0}}}}},
                     rng),
      Error);
}

TEST_CASE("zero_value is a two-sided identity for exact kinds") {
  Rng rng(3);
  StreamValue v = VectorV{{0.25, -7.0, 3.5}};
  auto kind = vec_kind(3);
  auto z = zero_value(kind);
  CHECK(linear_combine(kind, {{1.0, v}, {1.0, z}}, rng) == v);
  CHECK(linear_combine(kind, {{1.0, z}, {1.0, v}}, rng) == v);
}

TEST_CASE("scale_value equals a one-term combination") {
  Rng rng(4);
  CHECK(std::get<ScalarV>(scale_value(scalar_kind(), 0.0, ScalarV{7.0}, rng)).x ==
        0.0);
  auto s = scale_value(sample_kind(), -1.0, StreamValue{sample("a")}, rng);
  CHECK(std::get<SampleV>(s).s->negative == true);
  // and the flip is an involution under another -1
  auto s2 = scale_value(sample_kind(), -1.0, s, rng);
  CHECK(std::get<SampleV>(s2).s->negative == false);
}

TEST_CASE("combination is associative and commutative within 1e-12") {
  Rng rng(5);
  auto kind = scalar_kind();
  for (int trial = 0; trial < 200; ++trial) {
    double c1 = rng.uniform(-3, 3), c2 = rng.uniform(-3, 3),
           c3 = rng.uniform(-3, 3);
    StreamValue a = ScalarV{rng.uniform(-1e3, 1e3)};
    StreamValue b = ScalarV{rng.uniform(-1e3, 1e3)};
    StreamValue c = ScalarV{rng.uniform(-1e3, 1e3)};
    double direct = std::get<ScalarV>(
        linear_combine(kind, {{c1, a}, {c2, b}, {c3, c}}, rng)).x;
    double reordered = std::get<ScalarV>(
        linear_combine(kind, {{c3, c}, {c1, a}, {c2, b}}, rng)).x;
    StreamValue ab = linear_combine(kind, {{c1, a}, {c2, b}}, rng);
    double grouped = std::get<ScalarV>(
        linear_combine(kind, {{1.0, ab}, {c3, c}}, rng)).x;
    CHECK(close(direct, reordered));
    CHECK(close(direct, grouped));
  }
}

TEST_CASE("mask combination: supports add, tails stay canonical") {
  Rng rng(6);
  PortName p = input_port(Name("t"), Name("c"), Name("x"));
  PortName q = input_port(Name("t"), Name("c2"), Name("x"));
  MaskVector m1 = MaskVector::finite({{p, 2.0}, {q, 1.0}}, Name("k"));
  MaskVector m2 = MaskVector::finite({{p, -1.0}}, Name("k"));
  auto r = linear_combine(rmask_kind(),
                          {{1.0, RowMaskV{m1}}, {2.0, RowMaskV{m2}}}, rng);
  const auto& m = std::get<RowMaskV>(r).m;
  CHECK(m.support.count(p) == 0);  // 2 + 2*(-1) = 0, pruned
  CHECK(m.support.at(q) == 1.0);
  CHECK_FALSE(m.all_ones_tail);

  // ones - ones cancels the tail; ones + ones is rejected
  MaskVector ones = MaskVector::all_ones(Name("k"));
  auto diff = linear_combine(
      rmask_kind(), {{1.0, RowMaskV{ones}}, {-1.0, RowMaskV{ones}}}, rng);
  CHECK(std::get<RowMaskV>(diff).m.empty());
  try {
    linear_combine(rmask_kind(), {{1.0, RowMaskV{ones}}, {1.0, RowMaskV{ones}}},
                   rng);
    FAIL("expected MaskTailConflict");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::mask_tail_conflict);
  }
  // half + half of a tail is a legal all-ones tail
  auto halves = linear_combine(
      rmask_kind(), {{0.5, RowMaskV{ones}}, {0.5, RowMaskV{ones}}}, rng);
  CHECK(std::get<RowMaskV>(halves).m.all_ones_tail);
}

TEST_CASE("mask combination refuses mixed kinds") {
  Rng rng(7);
  MaskVector ka = MaskVector::all_ones(Name("ka"));
  MaskVector kb = MaskVector::all_ones(Name("kb"));
  CHECK_THROWS_AS(
      linear_combine(rmask_kind(), {{1.0, RowMaskV{ka}}, {0.0, RowMaskV{kb}}},
                     rng),
      Error);
}

TEST_CASE("sample selection follows |coef| proportions with toggled signs") {
  // Frequency-count oracle: draw many times with a fixed seed and compare
  // the empirical pick rate of the second stream to 0.7 = |-0.7| / (0.3+0.7).
  Rng rng(0);
  StreamValue mu1 = sample("mu1");
  StreamValue mu2 = sample("mu2");
  auto kind = sample_kind();
  const int n = 100000;
  int picked2 = 0, toggled2 = 0, picked1_neg = 0;
  for (int i = 0; i < n; ++i) {
    auto r = linear_combine(kind, {{0.3, mu1}, {-0.7, mu2}}, rng);
    const auto& s = std::get<SampleV>(r).s;
    REQUIRE(s.has_value());
    if (std::get<std::string>(s->payload) == "mu2") {
      ++picked2;
      if (s->negative) ++toggled2;
    } else if (s->negative) {
      ++picked1_neg;
    }
  }
  double freq = double(picked2) / n;
  double p = 0.7;
  double bound = 3.0 * std::sqrt(p * (1 - p) / n);
  CHECK(std::fabs(freq - p) <= bound);
  CHECK(freq == doctest::Approx(0.7).epsilon(0.015));
  // sign law, exhaustively over the draw log
  CHECK(toggled2 == picked2);
  CHECK(picked1_neg == 0);
}

TEST_CASE("sample combination edge cases") {
  Rng rng(2);
  auto kind = sample_kind();
  // all coefficients zero -> absent
  auto r1 = linear_combine(kind, {{0.0, StreamValue{sample("a")}}}, rng);
  CHECK_FALSE(std::get<SampleV>(r1).s.has_value());
  // all samples absent -> absent
  auto r2 = linear_combine(
      kind, {{1.0, StreamValue{SampleV{std::nullopt}}}}, rng);
  CHECK_FALSE(std::get<SampleV>(r2).s.has_value());
  // single live term never consumes randomness and keeps its payload
  auto r3 = linear_combine(kind,
                           {{2.0, StreamValue{sample("x")}},
                            {0.0, StreamValue{sample("y")}}},
                           rng);
  CHECK(std::get<std::string>(std::get<SampleV>(r3).s->payload) == "x");
  CHECK_FALSE(std::get<SampleV>(r3).s->negative);
}

TEST_SUITE_END();
