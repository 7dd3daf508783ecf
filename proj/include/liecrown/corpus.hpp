#pragma once
// Built-in fixture algebras and the facts recorded about them.

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "liecrown/lie_algebra.hpp"

namespace liecrown {

namespace detail {

struct Term {
  std::size_t target;
  long coeff;
};
struct BracketRule {
  std::size_t i, j;
  std::vector<Term> value;
};

template <class F>
LieAlgebra<F> from_rules(const F& field, std::vector<std::string> names, std::initializer_list<BracketRule> rules) {
  const std::size_t n = names.size();
  typename LieAlgebra<F>::PairTable t;
  for (const auto& r : rules) {
    Vector<F> v = zero_vector(field, n);
    for (const auto& term : r.value) v[term.target] += field.from_int(term.coeff);
    t[{r.i, r.j}] = std::move(v);
  }
  return LieAlgebra<F>::from_brackets(field, std::move(names), t);
}

/// Parses "ab(3)", "ab3" or "ab" (dimension 1); returns 0 when the name is not abelian.
inline std::size_t abelian_dim(const std::string& name) {
  if (name.rfind("ab", 0) != 0) return 0;
  std::string digits;
  for (char c : name.substr(2))
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    else if (c != '(' && c != ')') return 0;
  if (digits.empty()) return name == "ab" ? 1 : 0;
  if (digits.size() > 2) return 0;
  return std::stoul(digits);
}

}  // namespace detail

/// Names accepted by builtin(); "ab(n)" stands for every n >= 1.
inline std::vector<std::string> builtin_names() {
  return {"ab(n)", "r2", "heis", "ex22", "sl2", "gl2", "aff_sl2", "sl2_plus_sl2", "h3_plus_r2"};
}

/// Concrete names used when iterating over the corpus (ab(n) instantiated at n = 1, 2, 3).
inline std::vector<std::string> corpus_names() {
  return {"ab(1)", "ab(2)", "ab(3)", "r2", "heis", "ex22", "sl2", "gl2", "aff_sl2", "sl2_plus_sl2", "h3_plus_r2"};
}

/// Whether builtin(name, field) is defined over a field of characteristic p (0 for Q).
inline bool builtin_compatible(const std::string& name, unsigned p) {
  if (name == "ex22") return p == 0 || p % 4 == 3;
  if (name == "sl2" || name == "gl2" || name == "aff_sl2" || name == "sl2_plus_sl2") return p != 2;
  return true;
}

template <class F>
LieAlgebra<F> builtin(const std::string& name, const F& field) {
  using detail::from_rules;
  if (std::size_t n = detail::abelian_dim(name); n > 0) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return LieAlgebra<F>::abelian(field, std::move(names));
  }
  const unsigned p = field.characteristic();
  if (name != "r2" && name != "heis" && name != "ex22" && name != "sl2" && name != "gl2" && name != "aff_sl2" &&
      name != "sl2_plus_sl2" && name != "h3_plus_r2")
    throw PreconditionError("unknown builtin algebra '" + name + "'");
  if (!builtin_compatible(name, p)) {
    if (name == "ex22")
      throw IncompatibleField("ex22 needs t^2+1 irreducible: Q or GF(p) with p = 3 mod 4, got " + field.name());
    throw IncompatibleField(name + " needs characteristic other than 2");
  }
  if (name == "r2") return from_rules(field, {"x", "y"}, {{0, 1, {{1, 1}}}});
  if (name == "heis") return from_rules(field, {"x", "y", "z"}, {{0, 1, {{2, 1}}}});
  if (name == "ex22")
    // [x,a] = a, [x,b] = c, [x,c] = -b
    return from_rules(field, {"a", "b", "c", "x"}, {{3, 0, {{0, 1}}}, {3, 1, {{2, 1}}}, {3, 2, {{1, -1}}}});
  if (name == "sl2")
    return from_rules(field, {"e", "h", "f"}, {{1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}, {0, 2, {{1, 1}}}});
  if (name == "gl2")
    return from_rules(field, {"e", "h", "f", "z"}, {{1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}, {0, 2, {{1, 1}}}});
  if (name == "aff_sl2")
    // natural module <v1,v2> of sl2: e.v2 = v1, h.v1 = v1, h.v2 = -v2, f.v1 = v2
    return from_rules(field, {"v1", "v2", "e", "h", "f"},
                      {{2, 1, {{0, 1}}},
                       {3, 0, {{0, 1}}},
                       {3, 1, {{1, -1}}},
                       {4, 0, {{1, 1}}},
                       {3, 2, {{2, 2}}},
                       {3, 4, {{4, -2}}},
                       {2, 4, {{3, 1}}}});
  if (name == "sl2_plus_sl2")
    return from_rules(field, {"e1", "h1", "f1", "e2", "h2", "f2"},
                      {{1, 0, {{0, 2}}},
                       {1, 2, {{2, -2}}},
                       {0, 2, {{1, 1}}},
                       {4, 3, {{3, 2}}},
                       {4, 5, {{5, -2}}},
                       {3, 5, {{4, 1}}}});
  // h3_plus_r2
  return from_rules(field, {"x", "y", "z", "x2", "y2"}, {{0, 1, {{2, 1}}}, {3, 4, {{4, 1}}}});
}

/// Subspace from a span expression such as "<a,b,c>", "<x+2y, z>", "0" or "L".
template <class F>
Subspace<F> parse_span(const LieAlgebra<F>& l, const std::string& expr) {
  const F& field = l.field();
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0" || s == "<>") return l.zero_space();
  if (s == "L") return l.whole();
  if (s.size() < 2 || s.front() != '<' || s.back() != '>') throw PreconditionError("bad span expression '" + expr + "'");
  s = s.substr(1, s.size() - 2);
  Subspace<F> out = l.zero_space();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Vector<F> v = l.zero();
    std::size_t k = 0;
    while (k < item.size()) {
      long sign = 1;
      if (item[k] == '+' || item[k] == '-') sign = item[k++] == '-' ? -1 : 1;
      std::string num;
      while (k < item.size() && std::isdigit(static_cast<unsigned char>(item[k]))) num += item[k++];
      std::string sym;
      while (k < item.size() && item[k] != '+' && item[k] != '-') sym += item[k++];
      std::size_t idx = l.dim();
      for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.basis_names()[i] == sym) idx = i;
      if (idx == l.dim()) throw PreconditionError("unknown basis name '" + sym + "' in '" + expr + "'");
      v[idx] += field.from_int(sign * (num.empty() ? 1 : std::stol(num)));
    }
    out.insert(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Human-readable span of a subspace in basis names, e.g. "<a, b+c>".
template <class F>
std::string format_span(const LieAlgebra<F>& l, const Subspace<F>& s) {
  if (s.is_zero()) return "0";
  if (s.is_full() && s.ambient_dim() > 0) return "L";
  const F& field = l.field();
  std::string out = "<";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    bool first = true;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      const auto& c = s.basis_vector(r)[i];
      if (is_zero(c)) continue;
      std::string cs = field.format(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (neg) out += "-";
      else if (!first) out += "+";
      if (cs != "1") out += cs;
      out += l.basis_names()[i];
      first = false;
    }
  }
  return out + ">";
}

/// Where an expected value comes from: a published example, an immediate
/// consequence of the definitions, or a hand or oracle computation.
enum class Provenance { Reference, Trivial, Derived };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "";
}

/// An expected fact about a fixture. Subspaces are span expressions (see parse_span);
/// crowns are "C | R | r"; primitive types are "NotPrimitive", "Type1", "Type2", "Type3".
struct FixtureFact {
  std::string algebra;
  std::string kind;     // centralizer, crown, type, radical, prefrattini, frattini
  std::string subject;  // argument of the fact (e.g. the subspace centralized), empty if none
  std::string expected;
  Provenance provenance;
  std::string field = "any";  // "any", "Q", or a specific "GF(p)"
};

inline std::vector<FixtureFact> fixture_facts(const std::string& algebra) {
  static const std::vector<FixtureFact> facts = {
      {"ex22", "centralizer", "<a>", "<a,b,c>", Provenance::Reference},
      {"ex22", "centralizer", "<b,c>", "<a,b,c>", Provenance::Reference},
      {"ex22", "crown", "", "<a,b,c> | <b,c> | 1", Provenance::Derived},
      {"ex22", "crown", "", "<a,b,c> | <a> | 1", Provenance::Derived},
      {"ex22", "crown", "", "L | <a,b,c> | 1", Provenance::Derived},
      {"ex22", "radical", "", "L", Provenance::Trivial},
      {"heis", "centralizer", "<z>", "L", Provenance::Derived},
      {"heis", "centralizer", "<x>", "<x,z>", Provenance::Derived},
      {"heis", "crown", "", "L | <z> | 2", Provenance::Derived},
      {"heis", "type", "", "NotPrimitive", Provenance::Derived},
      {"heis", "frattini", "", "<z>", Provenance::Derived},
      {"heis", "prefrattini", "", "<z>", Provenance::Derived},
      {"heis", "radical", "", "L", Provenance::Trivial},
      {"r2", "type", "", "Type1", Provenance::Derived},
      {"r2", "crown", "", "<y> | 0 | 1", Provenance::Derived},
      {"r2", "crown", "", "L | <y> | 1", Provenance::Derived},
      {"r2", "frattini", "", "0", Provenance::Derived},
      {"r2", "prefrattini", "", "0", Provenance::Derived},
      {"r2", "radical", "", "L", Provenance::Trivial},
      {"sl2", "type", "", "Type2", Provenance::Reference, "Q"},
      {"sl2", "radical", "", "0", Provenance::Derived},
      {"sl2", "crown", "", "L | 0 | 1", Provenance::Derived},
      {"gl2", "radical", "", "<z>", Provenance::Derived},
      {"gl2", "centralizer", "L", "<z>", Provenance::Derived},
      {"aff_sl2", "radical", "", "<v1,v2>", Provenance::Derived},
      {"aff_sl2", "type", "", "Type1", Provenance::Derived},
      {"sl2_plus_sl2", "type", "", "Type3", Provenance::Reference},
      {"sl2_plus_sl2", "crown", "", "L | 0 | 2", Provenance::Derived},
      {"sl2_plus_sl2", "radical", "", "0", Provenance::Derived},
      {"sl2_plus_sl2", "centralizer", "<e1,h1,f1>", "<e2,h2,f2>", Provenance::Derived},
      {"h3_plus_r2", "frattini", "", "<z>", Provenance::Derived},
      {"h3_plus_r2", "radical", "", "L", Provenance::Trivial},
      {"ab(1)", "prefrattini", "", "0", Provenance::Trivial},
      {"ab(1)", "crown", "", "L | 0 | 1", Provenance::Trivial},
  };
  std::vector<FixtureFact> out;
  for (const auto& f : facts)
    if (f.algebra == algebra) out.push_back(f);
  return out;
}

}  // namespace liecrown
