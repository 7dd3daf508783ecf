#pragma once
// Chief series, classification of chief factors, L-isomorphism and
// L-connectedness, matching of chief series, and the solvable radical.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecrown/constructions.hpp"
#include "liecrown/isomorphism.hpp"
#include "liecrown/modrep.hpp"
#include "liecrown/oracle.hpp"

namespace liecrown {

template <class F>
struct ChiefFactor {
  Subspace<F> a, b;
  bool abelian = false;
  Subspace<F> centralizer;  // C_L(A/B)
  bool supplemented = false;
  bool complemented = false;
  bool complement_known = true;  // false when a nonabelian factor's complement question is open
  bool frattini = false;
  std::optional<Subspace<F>> complement_witness;

  std::size_t dim() const { return a.dim() - b.dim(); }
};

/// Classifies the chief factor A/B. Abelian factors are decided exactly by the
/// splitting test (supplemented, complemented and non-Frattini coincide).
/// Nonabelian factors are never Frattini: the Frattini ideal of L/B is
/// nilpotent, so all chief factors below it are abelian.
template <class F>
ChiefFactor<F> classify_factor(const LieAlgebra<F>& l, const Subspace<F>& a, const Subspace<F>& b) {
  check_in(l, a);
  check_in(l, b);
  if (!a.contains(b) || a == b) throw PreconditionError("classify_factor: need B strictly inside A");
  if (!is_ideal(l, a) || !is_ideal(l, b)) throw PreconditionError("classify_factor: A and B must be ideals");
  ChiefFactor<F> f{a, b, b.contains(bracket_spaces(l, a, a)), centralizer_of_factor(l, a, b)};
  if (f.abelian) {
    auto cert = split_abelian_extension(l, a, b);
    f.complemented = f.supplemented = cert.has_value();
    f.frattini = !f.complemented;
    if (cert) f.complement_witness = cert->complement;
    return f;
  }
  f.supplemented = true;
  f.frattini = false;
  if (a.is_full()) {
    f.complemented = true;
    f.complement_witness = b;
  } else if (subspace_sum(a, f.centralizer).is_full()) {
    // C ∩ A is an ideal between B and A, and not A since A/B is nonabelian
    f.complemented = true;
    f.complement_witness = f.centralizer;
  } else {
    f.complement_known = false;
  }
  return f;
}

template <class F>
struct ChiefSeries {
  std::vector<Subspace<F>> chain;  // 0 = L_0 < L_1 < ... < L_n = L
  std::vector<ChiefFactor<F>> factors;
  std::vector<std::size_t> choices;  // index of the minimal ideal taken at each step
  Status status = Status::Certified;
  std::string reason;
};

/// Builds a chief series bottom-up. At step i the choices[i]-th minimal ideal of
/// L/L_i (default 0, the first in the deterministic socle order) is lifted.
template <class F>
ChiefSeries<F> chief_series(const LieAlgebra<F>& l, const std::vector<std::size_t>& choices = {}) {
  ChiefSeries<F> s;
  s.chain.push_back(l.zero_space());
  while (!s.chain.back().is_full()) {
    SocleInfo<F> info = socle_and_minimal_ideals(l, s.chain.back());
    if (info.minimals.empty()) throw CertificationFailure("chief_series: nonzero quotient without minimal ideals");
    const std::size_t step = s.chain.size() - 1;
    const std::size_t pick = step < choices.size() ? choices[step] : 0;
    if (pick >= info.minimals.size()) throw PreconditionError("chief_series: choice index out of range");
    if (info.status == Status::Heuristic) {
      s.status = Status::Heuristic;
      s.reason = info.reason;
    }
    s.choices.push_back(pick);
    s.chain.push_back(info.minimals[pick]);
  }
  for (std::size_t i = 1; i < s.chain.size(); ++i) s.factors.push_back(classify_factor(l, s.chain[i], s.chain[i - 1]));
  return s;
}

/// Distinct chief series obtained by varying the minimal ideal chosen at each
/// step, depth first, at most `limit` of them. The first is chief_series(l).
template <class F>
std::vector<ChiefSeries<F>> chief_series_variants(const LieAlgebra<F>& l, std::size_t limit = 6) {
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::function<void(const Subspace<F>&)> dfs = [&](const Subspace<F>& cur) {
    if (found.size() >= limit) return;
    if (cur.is_full()) {
      found.push_back(path);
      return;
    }
    SocleInfo<F> info = socle_and_minimal_ideals(l, cur);
    for (std::size_t k = 0; k < info.minimals.size() && found.size() < limit; ++k) {
      path.push_back(k);
      dfs(info.minimals[k]);
      path.pop_back();
    }
  };
  dfs(l.zero_space());
  std::vector<ChiefSeries<F>> out;
  for (const auto& c : found) out.push_back(chief_series(l, c));
  return out;
}

template <class F>
struct LIsomorphism {
  bool value = false;
  Status status = Status::Certified;
  std::optional<Matrix<F>> witness;  // module isomorphism A1/B1 -> A2/B2 in quotient coordinates
  std::string reason;
};

/// L-isomorphism of chief factors. Nonabelian factors are L-isomorphic exactly
/// when their centralizers agree; the witness then sends a1 to the a2 with
/// a1 - a2 in the common centralizer.
template <class F>
LIsomorphism<F> l_isomorphic(const LieAlgebra<F>& l, const ChiefFactor<F>& f1, const ChiefFactor<F>& f2) {
  if (f1.abelian != f2.abelian) return {false, Status::Certified, std::nullopt, "one abelian, one not"};
  LModule<F> m1 = factor_module(l, f1.a, f1.b), m2 = factor_module(l, f2.a, f2.b);
  if (f1.abelian) {
    ModuleIsomorphism<F> iso = module_isomorphism(m1, m2);
    return {iso.map.has_value(), iso.status, iso.map, iso.reason};
  }
  if (!(f1.centralizer == f2.centralizer)) return {false, Status::Certified, std::nullopt, "centralizers differ"};
  const Subspace<F>& c = f1.centralizer;
  QuotientCoords<F> q1(f1.a, f1.b), q2(f2.a, f2.b);
  std::vector<Vector<F>> cols = f2.a.basis();
  for (const auto& v : c.basis()) cols.push_back(v);
  Matrix<F> sys = Matrix<F>::from_columns(l.field(), l.dim(), cols);
  std::vector<Vector<F>> images;
  for (const auto& v : q1.lifts()) {
    auto sol = solve(sys, v);
    if (!sol) throw CertificationFailure("l_isomorphic: A1 not inside A2 + C for equal centralizers");
    Vector<F> a2 = l.zero();
    for (std::size_t k = 0; k < f2.a.dim(); ++k) axpy(a2, (*sol)[k], f2.a.basis_vector(k));
    images.push_back(q2.project(a2));
  }
  Matrix<F> t = Matrix<F>::from_columns(l.field(), m2.dim(), images);
  if (!is_module_map(m1, m2, t) || is_zero(determinant(t)))
    throw CertificationFailure("l_isomorphic: constructed map is not a module isomorphism");
  return {true, Status::Certified, t, "equal centralizers"};
}

template <class F>
struct LConnection {
  bool value = false;
  bool decided = true;
  std::optional<Subspace<F>> n;                  // N with L/N primitive of type 3
  std::optional<Subspace<F>> common_complement;  // lifted diagonal, when constructed
  std::string reason;
};

/// L-connectedness. Abelian factors are connected exactly when L-isomorphic.
/// For nonabelian factors with different centralizers C1, C2 the only possible
/// type-3 quotient is L/N with N = C1 ∩ C2 and minimal ideals C1/N, C2/N.
template <class F>
LConnection<F> l_connected(const LieAlgebra<F>& l, const ChiefFactor<F>& f1, const ChiefFactor<F>& f2) {
  if (f1.abelian || f2.abelian) {
    auto iso = l_isomorphic(l, f1, f2);
    LConnection<F> r{iso.value, iso.status == Status::Certified || iso.value, std::nullopt, std::nullopt,
                     iso.value ? "L-isomorphic" : "not L-isomorphic"};
    return r;
  }
  const Subspace<F>& c1 = f1.centralizer;
  const Subspace<F>& c2 = f2.centralizer;
  if (c1 == c2) return {true, true, std::nullopt, std::nullopt, "L-isomorphic (equal centralizers)"};
  Subspace<F> n = subspace_intersect(c1, c2);
  if (!(centralizer_of_factor(l, c1, n) == c2) || !(centralizer_of_factor(l, c2, n) == c1))
    return {false, true, std::nullopt, std::nullopt, "centralizers do not cross-centralize"};
  SocleInfo<F> info = socle_and_minimal_ideals(l, n);
  auto listed = [&](const Subspace<F>& s) {
    for (const auto& m : info.minimals)
      if (m == s) return true;
    return false;
  };
  if (info.minimals.size() != 2 || !listed(c1) || !listed(c2))
    return {false, true, std::nullopt, std::nullopt, "C1/N and C2/N are not the minimal ideals of L/N"};

  if (subspace_sum(c1, c2).is_full()) {
    // L/N = C1/N ⊕ C2/N; type 3 exactly when the two summands are isomorphic
    QuotientAlgebra<F> q = quotient_algebra(l, n);
    Subspace<F> e1 = q.project(c1), e2 = q.project(c2);
    LieAlgebra<F> s1 = subalgebra_as_algebra(q.algebra, e1), s2 = subalgebra_as_algebra(q.algebra, e2);
    AlgebraIsomorphism<F> iso = algebra_isomorphism(s1, s2);
    if (!iso.map) {
      if (iso.status == Status::Certified)
        return {false, true, std::nullopt, std::nullopt, "summands of L/N are not isomorphic"};
      return {false, false, std::nullopt, std::nullopt, "isomorphism of the summands of L/N undecided"};
    }
    Subspace<F> diag(l.field(), q.algebra.dim());
    for (std::size_t k = 0; k < e1.dim(); ++k)
      diag.insert(add(e1.basis_vector(k), e2.combine(iso.map->col(k))));
    Subspace<F> d = q.lift(diag);
    if (!is_subalgebra(l, d) || !(subspace_intersect(d, c1) == n) || !(subspace_intersect(d, c2) == n) ||
        !subspace_sum(d, c1).is_full() || !subspace_sum(d, c2).is_full() || !(core(l, d) == n))
      throw CertificationFailure("l_connected: diagonal fails to be a common core-free complement");
    return {true, true, n, d, "minimal ideals of the type 3 quotient L/N"};
  }
  if constexpr (!F::finite) {
    return {false, true, std::nullopt, std::nullopt,
            "in characteristic 0 a type 3 algebra is the sum of its two minimal ideals"};
  } else {
    try {
      QuotientAlgebra<F> q = quotient_algebra(l, n);
      auto w = oracle::primitive_bf(q.algebra);
      bool t3 = w.verdict == PrimitiveType::Type3;
      return {t3, true, t3 ? std::optional<Subspace<F>>(n) : std::nullopt,
              w.common_complement ? std::optional<Subspace<F>>(q.lift(*w.common_complement)) : std::nullopt,
              t3 ? "oracle: L/N is primitive of type 3" : "oracle: L/N is not primitive of type 3"};
    } catch (const BudgetExceeded& e) {
      return {false, false, std::nullopt, std::nullopt, std::string("undecided: ") + e.what()};
    }
  }
}

struct MatchPair {
  std::size_t first, second;  // factor indices in the two series
  bool frattini;
};

template <class F>
struct SeriesMatch {
  std::vector<MatchPair> pairs;
  std::vector<Matrix<F>> witnesses;  // module isomorphism per pair
};

/// Pairs the factors of two chief series so that paired factors are L-isomorphic
/// and have equal Frattini flags. Failure means a bug and raises MatchFailure.
template <class F>
SeriesMatch<F> jordan_holder_match(const LieAlgebra<F>& l, const ChiefSeries<F>& s1, const ChiefSeries<F>& s2) {
  if (s1.factors.size() != s2.factors.size())
    throw MatchFailure("jordan_holder_match: series lengths " + std::to_string(s1.factors.size()) + " and " +
                       std::to_string(s2.factors.size()) + " differ");
  SeriesMatch<F> out;
  std::vector<bool> used(s2.factors.size(), false);
  for (std::size_t i = 0; i < s1.factors.size(); ++i) {
    const auto& f = s1.factors[i];
    bool matched = false;
    for (std::size_t j = 0; j < s2.factors.size() && !matched; ++j) {
      const auto& g = s2.factors[j];
      if (used[j] || g.frattini != f.frattini || g.dim() != f.dim()) continue;
      auto iso = l_isomorphic(l, f, g);
      if (!iso.value) continue;
      used[j] = true;
      matched = true;
      out.pairs.push_back({i, j, f.frattini});
      out.witnesses.push_back(*iso.witness);
    }
    if (!matched)
      throw MatchFailure("jordan_holder_match: factor " + std::to_string(i) +
                         " has no unused L-isomorphic partner with the same Frattini flag");
  }
  return out;
}

template <class F>
struct SolvableRadical {
  Subspace<F> radical;
  std::optional<Subspace<F>> centralizer_intersection;  // over nonabelian factors of a chief series
  Status status = Status::Certified;
};

/// Largest solvable ideal, by absorbing the abelian socle of L/R until it is zero;
/// cross-checked against the intersection of centralizers of nonabelian chief factors.
template <class F>
SolvableRadical<F> solvable_radical(const LieAlgebra<F>& l) {
  SolvableRadical<F> out{l.zero_space(), std::nullopt, Status::Certified};
  while (true) {
    SocleInfo<F> info = socle_and_minimal_ideals(l, out.radical);
    if (info.status == Status::Heuristic) out.status = Status::Heuristic;
    if (info.asoc == out.radical) break;
    out.radical = info.asoc;
  }
  if (!is_solvable(l, out.radical)) throw CertificationFailure("solvable_radical: result is not solvable");
  ChiefSeries<F> s = chief_series(l);
  Subspace<F> inter = l.whole();
  bool any = false;
  for (const auto& f : s.factors)
    if (!f.abelian) {
      any = true;
      inter = subspace_intersect(inter, f.centralizer);
    }
  if (any) {
    out.centralizer_intersection = inter;
    if (!(inter == out.radical))
      throw CertificationFailure("solvable_radical: centralizer intersection disagrees with the radical");
  } else if (!out.radical.is_full()) {
    throw CertificationFailure("solvable_radical: no nonabelian factor but radical is proper");
  }
  return out;
}

/// The primitive algebra attached to a supplemented chief factor: A/B ⋊ L/C for
/// abelian factors, L/C for nonabelian ones (C the centralizer).
template <class F>
LieAlgebra<F> associated_primitive_algebra(const LieAlgebra<F>& l, const ChiefFactor<F>& f) {
  if (!f.supplemented) throw PreconditionError("associated_primitive_algebra: factor is not supplemented");
  QuotientAlgebra<F> q = quotient_algebra(l, f.centralizer);
  if (!f.abelian) return q.algebra;
  LModule<F> m = factor_module(l, f.a, f.b);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m.dim(); ++k) names.push_back("m" + std::to_string(k + 1));
  LieAlgebra<F> v = LieAlgebra<F>::abelian(l.field(), names);
  std::vector<Matrix<F>> action;
  for (std::size_t k = 0; k < q.algebra.dim(); ++k) action.push_back(m.act(q.lift(unit_vector(l.field(), q.algebra.dim(), k))));
  std::vector<std::string> all = names;
  for (const auto& s : q.algebra.basis_names()) all.push_back(s);
  // keep names distinct if a quotient basis name collides with a module name
  for (std::size_t i = names.size(); i < all.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      if (all[i] == all[j]) all[i] += "'";
  return semidirect_sum(v, q.algebra, action, all);
}

}  // namespace liecrown
