#include <doctest.h>

#include "lefschetz/definition.hpp"
#include "lefschetz/error.hpp"

using namespace lefschetz;

namespace {

struct Failure {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
  std::string message;
};

Failure failure(const std::string& text) {
  try {
    parse_definition(text, "t.def");
  } catch (const DefinitionError& e) {
    return {e.kind(), e.line(), e.column(), e.what()};
  }
  FAIL("expected a DefinitionError for: " << text);
  return {};
}

}  // namespace

TEST_CASE("a weighted definition parses and builds") {
  Definition d = parse_definition(
      "# comment\n"
      "ring: e1 e2\n"
      "weights: 1, 2   # trailing comment\n"
      "ideal:\n"
      "  e1^2\n"
      "  e2^2\n"
      "forms:\n"
      "  z = e1\n");
  CHECK(d.ring->nvars() == 2);
  CHECK(d.ring->var_weights == std::vector<int>{1, 2});
  CHECK(d.ideal.size() == 2);
  REQUIRE(d.find_form("z"));
  CHECK(d.find_form("missing") == nullptr);
  GradedAlgebra a = build_algebra(d);
  CHECK(hilbert_series(a.module) == HilbertSeries::from_dense({1, 1, 1, 1}));
  CHECK(a.form_of(resolve_form(d, "z")) == LinearForm{RationalVector{1}});
}

TEST_CASE("inline ideals, comma lists and default weights") {
  Definition d = parse_definition("ring: X, Y\nideal: X^3, Y^3\nforms:\n  g = X + Y\n");
  CHECK(d.ring->var_weights == std::vector<int>{1, 1});
  GradedAlgebra a = build_algebra(d);
  CHECK(a.dim() == 9);
  CHECK(a.form_of(resolve_form(d, "g")) == LinearForm{RationalVector{1, 1}});
  CHECK(a.form_of(resolve_form(d, "2*X - Y")) == LinearForm{RationalVector{2, -1}});
}

TEST_CASE("errors carry line and column") {
  Failure f = failure("ring: x y\nideal: x^2, y^2\nbogus: 1\n");
  CHECK(f.kind == ErrorKind::Parse);
  CHECK(f.line == 3);
  CHECK(f.message.find("ParseError: t.def:3:") == 0);

  f = failure("ring: x x\nideal: x^2\n");
  CHECK(f.line == 1);
  CHECK(f.column == 9);
  CHECK(f.message.find("duplicate variable") != std::string::npos);

  f = failure("ring: x y\nweights: 1 0\nideal: x^2\n");
  CHECK(f.line == 2);
  CHECK(f.column == 12);

  f = failure("ring: x y\nideal:\n  x^2\n  x + y^2\n");
  CHECK(f.kind == ErrorKind::Inhomogeneous);
  CHECK(f.line == 4);
  CHECK(f.column == 3);

  f = failure("ring: x y\nideal: x^2, y^2\nforms:\n  z = x^2\n");
  CHECK(f.kind == ErrorKind::NotDegreeOne);
  CHECK(f.line == 4);

  f = failure("ring: x y\nideal: x^2, y^2\nforms:\n  z x\n");
  CHECK(f.kind == ErrorKind::Parse);
  CHECK(f.line == 4);

  f = failure("ring: x y\nideal: x^2, y^2\nforms:\n  z = x\n  z = y\n");
  CHECK(f.line == 5);
  CHECK(f.message.find("duplicate form") != std::string::npos);

  f = failure("ring: x y\nideal: x^2, w^2\n");
  CHECK(f.kind == ErrorKind::Parse);
  CHECK(f.line == 2);
  CHECK(f.column >= 13);

  f = failure("x^2\nring: x\n");
  CHECK(f.line == 1);
  f = failure("ideal: x^2\n");
  CHECK(f.message.find("missing 'ring:'") != std::string::npos);
  f = failure("ring: x y\nweights: 1\n");
  CHECK(f.line == 2);
  f = failure("ring: x\nring: y\n");
  CHECK(f.message.find("duplicate section") != std::string::npos);
}

TEST_CASE("non-Artinian ideals are rejected when building") {
  Definition d = parse_definition("ring: x y\nideal: x^2\n");
  try {
    build_algebra(d);
    FAIL("expected NotArtinian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotArtinian);
  }
}

TEST_CASE("the bundled data files load") {
  for (const char* name : {"weighted-e1e2.def", "powersum-n2-a2.def", "x3y3.def", "xy-squares.def"}) {
    Definition d = load_definition(std::string(LEFSCHETZ_DATA_DIR) + "/" + name);
    CHECK(build_algebra(d).dim() > 0);
    CHECK_FALSE(d.forms.empty());
  }
  CHECK_THROWS_AS(load_definition(std::string(LEFSCHETZ_DATA_DIR) + "/missing.def"), Error);
}
