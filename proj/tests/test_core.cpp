#include <algorithm>
#include <doctest.h>

#include "oracles.hpp"

using namespace dmm;

TEST_SUITE_BEGIN("core");

TEST_CASE("validate_name accepts alphabet strings") {
  CHECK(validate_name("relu_1").text() == "relu_1");
  CHECK(validate_name("A").text() == "A");
  CHECK(validate_name("2nd_layer").text() == "2nd_layer");
}

TEST_CASE("validate_name rejects structural characters with position") {
  try {
    validate_name("a:b");
    FAIL("expected ForbiddenCharacter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::forbidden_character);
    CHECK(e.char_index == std::size_t{1});
  }
  for (const char* bad : {"x y", "a#b", "a;b", "a,b", "a=b", "a.b"}) {
    CHECK_THROWS_AS(validate_name(bad), Error);
  }
}

TEST_CASE("validate_name rejects the empty string") {
  try {
    validate_name("");
    FAIL("expected EmptyName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_name);
  }
}

TEST_CASE("name validation is idempotent") {
  Rng rng(7);
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
  for (int i = 0; i < 200; ++i) {
    std::string s;
    std::size_t len = 1 + rng.below(12);
    for (std::size_t k = 0; k < len; ++k) {
      s += alphabet[rng.below(alphabet.size())];
    }
    Name n = validate_name(s);
    CHECK(validate_name(n.text()).text() == n.text());
  }
}

TEST_CASE("port_kind resolves declared fields") {
  dmm_test::ScalarNetBuilder b;
  CHECK(b.sig.port_kind(input_port(builtin::self_type(), builtin::self_cell(),
                                   Name("in")))
            .kind_name == builtin::net_matrix_kind());
  CHECK(b.sig.port_kind(output_port(Name("sigmoid"), Name("any"), Name("y")))
            .shape.tag == ShapeTag::scalar);

  CHECK_THROWS_AS(b.sig.port_kind(output_port(Name("nosuch"), Name("c"), Name("y"))),
                  Error);
  try {
    b.sig.port_kind(output_port(Name("sigmoid"), Name("c"), Name("nofield")));
    FAIL("expected UnknownField");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_field);
  }
}

TEST_CASE("port_kind is a pure lookup") {
  dmm_test::ScalarNetBuilder b;
  PortName p = input_port(Name("sigmoid"), Name("cell_7"), Name("x"));
  const auto& k1 = b.sig.port_kind(p);
  const auto& k2 = b.sig.port_kind(p);
  CHECK(&k1 == &k2);
  CHECK(k1.kind_name == Name("scalar"));
}

TEST_CASE("compare_ports basics") {
  PortName x = input_port(Name("a"), Name("c"), Name("f"));
  CHECK(compare_ports(x, x) == std::strong_ordering::equal);
  PortName y = input_port(Name("b"), Name("c"), Name("f"));
  CHECK(compare_ports(x, y) == std::strong_ordering::less);
  // cell then field break ties
  CHECK(compare_ports(input_port(Name("a"), Name("c1"), Name("f")),
                      input_port(Name("a"), Name("c2"), Name("a"))) ==
        std::strong_ordering::less);
}

namespace {

// Naive O(n^2) selection sort used as an ordering oracle.
std::vector<PortName> selection_sort(std::vector<PortName> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (compare_ports(v[j], v[best]) == std::strong_ordering::less) best = j;
    }
    std::swap(v[i], v[best]);
  }
  return v;
}

PortName random_port(Rng& rng) {
  auto pick = [&](std::initializer_list<const char*> xs) {
    return Name(*(xs.begin() + rng.below(xs.size())));
  };
  return {pick({"a", "b", "c"}), pick({"u", "v", "w"}), pick({"f", "g"}),
          rng.below(2) ? PortDir::input : PortDir::output};
}

}  // namespace

TEST_CASE("sorting any permutation of ports matches the naive oracle") {
  std::vector<PortName> ports = {
      input_port(Name("b"), Name("u"), Name("f")),
      input_port(Name("a"), Name("v"), Name("g")),
      input_port(Name("a"), Name("u"), Name("g")),
  };
  std::sort(ports.begin(), ports.end());
  do {
    std::vector<PortName> p = ports;
    CHECK(selection_sort(p) == ports);
  } while (std::next_permutation(ports.begin(), ports.end()));
}

TEST_CASE("compare_ports is a strict weak ordering") {
  Rng rng(991);
  for (int trial = 0; trial < 2000; ++trial) {
    PortName a = random_port(rng), b = random_port(rng), c = random_port(rng);
    // reflexivity/antisymmetry
    CHECK((compare_ports(a, a) == std::strong_ordering::equal));
    if (compare_ports(a, b) == std::strong_ordering::less) {
      CHECK(compare_ports(b, a) == std::strong_ordering::greater);
    }
    // transitivity
    if (compare_ports(a, b) != std::strong_ordering::greater &&
        compare_ports(b, c) != std::strong_ordering::greater) {
      CHECK(compare_ports(a, c) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("signature rejects duplicates and unknown kinds") {
  Signature sig = Signature::base();
  sig.add_kind({Name("scalar"), KindShape::scalar()});
  CHECK_THROWS_AS(sig.add_kind({Name("scalar"), KindShape::scalar()}), Error);
  CHECK_THROWS_AS(
      sig.add_type({Name("t"), {}, {{Name("o"), Name("ghost")}}, Name("id")}),
      Error);
  CHECK_THROWS_AS(sig.add_type({Name("t"), {}, {}, Name("id")}), Error);
  // field names must be unique across both lists
  CHECK_THROWS_AS(
      sig.add_type({Name("t"),
                    {{Name("a"), Name("scalar")}},
                    {{Name("a"), Name("scalar")}},
                    Name("id")}),
      Error);
}

TEST_SUITE_END();
