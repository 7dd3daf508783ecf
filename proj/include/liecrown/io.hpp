#pragma once
// Algebra documents: structure constants as canonical JSON.
//
//   {"basis": ["x","y"], "brackets": [{"coeffs": {"1": "1"}, "i": 0, "j": 1}],
//    "dim": 2, "field": {"kind": "Q"}}
//
// Only pairs i < j are written, coefficients are keyed by target index and
// rationals are lowest-term "num/den" strings. Keys are sorted.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "liecrown/lie_algebra.hpp"

namespace liecrown {

using Json = nlohmann::json;

using AnyAlgebra = std::variant<LieAlgebra<RationalField>, LieAlgebra<PrimeField>>;

inline Json field_to_json(const FieldSpec& f) {
  if (!f.finite()) return Json{{"kind", "Q"}};
  return Json{{"kind", "GF"}, {"p", f.p}};
}

template <class F>
Json algebra_to_json(const LieAlgebra<F>& l) {
  const F& field = l.field();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector<F> v = l.bracket_basis(i, j);
      if (is_zero_vector(v)) continue;
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) coeffs[std::to_string(k)] = field.format(v[k]);
      brackets.push_back(Json{{"coeffs", coeffs}, {"i", i}, {"j", j}});
    }
  return Json{{"basis", l.basis_names()}, {"brackets", brackets}, {"dim", l.dim()}, {"field", field_to_json(spec_of(field))}};
}

/// Canonical text of a document: sorted keys, two-space indent, trailing newline.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

template <class F>
std::string save_algebra(const LieAlgebra<F>& l) {
  return canonical_dump(algebra_to_json(l));
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& msg) { throw ParseError(msg, 0, 0); }

inline const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return obj.at(key);
}

inline std::size_t index_value(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    schema_error(what + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, col);
  }
}

inline FieldSpec document_field(const Json& doc) {
  const Json& f = detail::member(doc, "field");
  const Json& kind = detail::member(f, "kind");
  if (!kind.is_string()) detail::schema_error("field.kind must be a string");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    const Json& p = detail::member(f, "p");
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(detail::index_value(p, "field.p")));
    } catch (const IncompatibleField& e) {
      detail::schema_error(e.what());
    }
  }
  detail::schema_error("field.kind must be \"Q\" or \"GF\"");
}

/// Builds and validates (antisymmetry, Jacobi) the algebra of a document.
template <class F>
LieAlgebra<F> algebra_from_json(const Json& doc, const F& field) {
  if (!(document_field(doc) == spec_of(field))) throw IncompatibleField("document field differs from " + field.name());
  const Json& basis = detail::member(doc, "basis");
  if (!basis.is_array()) detail::schema_error("basis must be an array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string() || b.get<std::string>().empty()) detail::schema_error("basis names must be nonempty strings");
    for (const auto& seen : names)
      if (seen == b.get<std::string>()) detail::schema_error("duplicate basis name '" + seen + "'");
    names.push_back(b.get<std::string>());
  }
  const std::size_t n = names.size();
  if (detail::index_value(detail::member(doc, "dim"), "dim") != n) detail::schema_error("dim differs from basis length");
  const Json& brackets = detail::member(doc, "brackets");
  if (!brackets.is_array()) detail::schema_error("brackets must be an array");
  typename LieAlgebra<F>::PairTable table;
  for (const auto& b : brackets) {
    std::size_t i = detail::index_value(detail::member(b, "i"), "i");
    std::size_t j = detail::index_value(detail::member(b, "j"), "j");
    if (i >= n || j >= n) detail::schema_error("bracket index out of range");
    const Json& coeffs = detail::member(b, "coeffs");
    if (!coeffs.is_object()) detail::schema_error("coeffs must be an object");
    Vector<F> v = zero_vector(field, n);
    for (const auto& [key, val] : coeffs.items()) {
      std::size_t k;
      try {
        std::size_t used = 0;
        k = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        detail::schema_error("coefficient key '" + key + "' is not an index");
      }
      if (k >= n) detail::schema_error("coefficient index out of range");
      if (!val.is_string() && !val.is_number_integer()) detail::schema_error("coefficients must be strings");
      try {
        const Json& c = val;
        v[k] = field.parse(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long long>()));
      } catch (const Error& e) {
        detail::schema_error(e.what());
      }
    }
    if (table.count({i, j})) detail::schema_error("bracket pair given twice");
    table[{i, j}] = std::move(v);
  }
  return LieAlgebra<F>::from_brackets(field, std::move(names), table);
}

inline AnyAlgebra load_algebra(const std::string& text) {
  Json doc = parse_json(text);
  FieldSpec f = document_field(doc);
  if (f.finite()) return algebra_from_json(doc, PrimeField(f.p));
  return algebra_from_json(doc, RationalField());
}

inline AnyAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

}  // namespace liecrown
