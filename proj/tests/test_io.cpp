#include <gtest/gtest.h>

#include "liecrown/corpus.hpp"
#include "liecrown/io.hpp"

using namespace liecrown;

namespace {

RationalField Q;

template <class F>
LieAlgebra<F> reload(const std::string& text) {
  return std::get<LieAlgebra<F>>(load_algebra(text));
}

}  // namespace

TEST(Io, R2Document) {
  auto r = builtin("r2", Q);
  std::string text = save_algebra(r);
  EXPECT_EQ(text,
            "{\n  \"basis\": [\n    \"x\",\n    \"y\"\n  ],\n  \"brackets\": [\n    {\n      \"coeffs\": {\n"
            "        \"1\": \"1\"\n      },\n      \"i\": 0,\n      \"j\": 1\n    }\n  ],\n  \"dim\": 2,\n"
            "  \"field\": {\n    \"kind\": \"Q\"\n  }\n}\n");
  auto back = reload<RationalField>(text);
  EXPECT_EQ(back.basis_names(), r.basis_names());
  EXPECT_EQ(back.bracket_basis(0, 1), r.bracket_basis(0, 1));
}

TEST(Io, RoundTripIsByteStable) {
  for (const auto& name : corpus_names()) {
    auto l = builtin(name, Q);
    std::string once = save_algebra(l);
    EXPECT_EQ(save_algebra(reload<RationalField>(once)), once) << name;
  }
  PrimeField f3(3);
  auto h = builtin("heis", f3);
  std::string once = save_algebra(h);
  auto back = reload<PrimeField>(once);
  EXPECT_EQ(back.field().modulus(), 3u);
  EXPECT_EQ(save_algebra(back), once);
}

TEST(Io, FractionsAndIntegerCoefficients) {
  auto l = reload<RationalField>(
      R"({"basis":["a","b","c"],"brackets":[{"i":0,"j":1,"coeffs":{"2":"-3/6"}}],"dim":3,"field":{"kind":"Q"}})");
  EXPECT_EQ(l.bracket_basis(0, 1)[2], Rational(-1, 2));
  EXPECT_NE(save_algebra(l).find("\"-1/2\""), std::string::npos);
  auto m = reload<RationalField>(
      R"({"basis":["a","b"],"brackets":[{"i":1,"j":0,"coeffs":{"1":2}}],"dim":2,"field":{"kind":"Q"}})");
  EXPECT_EQ(m.bracket_basis(0, 1)[1], Rational(-2));
}

TEST(Io, ValidationErrors) {
  EXPECT_THROW(load_algebra(R"({"basis":["a"],"brackets":[{"i":0,"j":0,"coeffs":{"0":"1"}}],"dim":1,)"
                            R"("field":{"kind":"Q"}})"),
               AntisymmetryViolation);
  // [x,y]=x, [y,z]=y, [x,z]=0 fails Jacobi on (x,y,z)
  EXPECT_THROW(load_algebra(R"({"basis":["x","y","z"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}},)"
                            R"({"i":1,"j":2,"coeffs":{"1":"1"}}],"dim":3,"field":{"kind":"Q"}})"),
               JacobiViolation);
}

TEST(Io, SyntaxErrorsCarryPosition) {
  try {
    load_algebra("{\n  \"basis\": [\"a\",\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_GT(e.column, 0u);
  }
}

TEST(Io, SchemaErrors) {
  const char* bad[] = {
      R"([])",
      R"({"basis":["a"],"brackets":[],"dim":1})",
      R"({"basis":["a"],"brackets":[],"dim":2,"field":{"kind":"Q"}})",
      R"({"basis":["a","a"],"brackets":[],"dim":2,"field":{"kind":"Q"}})",
      R"({"basis":["a"],"brackets":[],"dim":1,"field":{"kind":"R"}})",
      R"({"basis":["a"],"brackets":[],"dim":1,"field":{"kind":"GF","p":4}})",
      R"({"basis":["a","b"],"brackets":[{"i":0,"j":5,"coeffs":{}}],"dim":2,"field":{"kind":"Q"}})",
      R"({"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"x":"1"}}],"dim":2,"field":{"kind":"Q"}})",
      R"({"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1/0"}}],"dim":2,"field":{"kind":"Q"}})",
      R"({"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}},{"i":0,"j":1,"coeffs":{"0":"1"}}],)"
      R"("dim":2,"field":{"kind":"Q"}})",
  };
  for (const char* text : bad) {
    try {
      load_algebra(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line, 0u) << text;
    } catch (const Error& e) {
      ADD_FAILURE() << text << ": " << e.what();
    }
  }
}

TEST(Io, FieldMismatchAndMissingFile) {
  auto doc = algebra_to_json(builtin("r2", Q));
  EXPECT_THROW(algebra_from_json(doc, PrimeField(3)), IncompatibleField);
  EXPECT_THROW(load_algebra_file("/nonexistent/algebra.json"), PreconditionError);
}
