#pragma once
// Primitivity: classification by the socle, types of maximal subalgebras,
// conjugacy of core-free maximal subalgebras, and the type-equivalence
// constructions B ⋉ L/C_L(B) and D ⋉ L.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecrown/chieffac.hpp"
#include "liecrown/crowns.hpp"

namespace liecrown {

namespace detail {

template <class F>
PrimitiveWitness<F> with_verdict(PrimitiveWitness<F> w, PrimitiveType t, std::string reason) {
  w.verdict = t;
  w.reason = std::move(reason);
  return w;
}

/// Oracle verdict when the field is finite and enumeration is within budget.
template <class F>
std::optional<PrimitiveWitness<F>> oracle_primitive(const LieAlgebra<F>& l) {
  if constexpr (F::finite) {
    try {
      return oracle::primitive_bf(l, oracle::EnumBudget{oracle::EnumBudget{}.max_subspaces, 7});
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  } else {
    (void)l;
    return std::nullopt;
  }
}

template <class F>
std::vector<std::string> prefixed_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k + 1));
  return out;
}

}  // namespace detail

/// Decides whether L has a core-free maximal subalgebra and of which type,
/// from the minimal ideals of L. Results that cannot be proved are Undecided.
template <class F>
PrimitiveWitness<F> classify_primitive(const LieAlgebra<F>& l) {
  using detail::with_verdict;
  PrimitiveWitness<F> w;
  if (l.dim() == 0) return with_verdict(w, PrimitiveType::NotPrimitive, "zero algebra has no maximal subalgebra");
  SocleInfo<F> info = socle_and_minimal_ideals(l, l.zero_space());
  w.minimal_ideals = info.minimals;
  w.status = info.status;
  if (!info.complete() || info.minimals.size() > 2)
    return with_verdict(w, PrimitiveType::NotPrimitive, "more than two minimal ideals");

  if (info.minimals.size() == 1) {
    const Subspace<F>& a = info.minimals[0];
    if (!info.abelian[0]) {
      // a maximal subalgebra avoiding the monolith exists because the Frattini
      // ideal is nilpotent; any such one is core-free
      w.verdict = PrimitiveType::Type2;
      w.reason = "nonabelian monolith";
      if constexpr (!F::finite) {
        if (!a.is_full()) throw CertificationFailure("classify_primitive: nonabelian monolith below L in characteristic 0");
        w.reason = "simple";
      }
      if (auto bf = detail::oracle_primitive(l)) {
        if (bf->verdict != PrimitiveType::Type2) throw CertificationFailure("classify_primitive: oracle disagrees on type 2");
        w.core_free_maximal = bf->core_free_maximal;
      }
      return w;
    }
    auto cert = split_abelian_extension(l, a, l.zero_space());
    const bool self_centralizing = centralizer(l, a) == a;
    if (is_solvable(l) && self_centralizing != cert.has_value())
      throw CertificationFailure("classify_primitive: self-centralizing test disagrees with the splitting test");
    if (!cert) return with_verdict(w, PrimitiveType::NotPrimitive, "abelian monolith is not complemented");
    const Subspace<F>& k = cert->complement;
    if (!core(l, k).is_zero()) throw CertificationFailure("classify_primitive: complement of the monolith has a core");
    w.core_free_maximal = k;
    return with_verdict(w, PrimitiveType::Type1, "abelian monolith with a complement");
  }

  const Subspace<F>& b1 = info.minimals[0];
  const Subspace<F>& b2 = info.minimals[1];
  if (info.abelian[0] || info.abelian[1])
    return with_verdict(w, PrimitiveType::NotPrimitive, "two minimal ideals, one of them abelian");
  if (!(centralizer(l, b1) == b2) || !(centralizer(l, b2) == b1))
    return with_verdict(w, PrimitiveType::NotPrimitive, "minimal ideals do not centralize each other exactly");
  if (subspace_sum(b1, b2).is_full()) {
    LieAlgebra<F> s1 = subalgebra_as_algebra(l, b1), s2 = subalgebra_as_algebra(l, b2);
    AlgebraIsomorphism<F> iso = algebra_isomorphism(s1, s2);
    if (!iso.map) {
      if (iso.status == Status::Certified)
        return with_verdict(w, PrimitiveType::NotPrimitive, "the two minimal ideals are not isomorphic");
      w.status = Status::Heuristic;
      return with_verdict(w, PrimitiveType::Undecided, "isomorphism of the two minimal ideals undecided");
    }
    Subspace<F> d = l.zero_space();
    for (std::size_t k = 0; k < b1.dim(); ++k) d.insert(add(b1.basis_vector(k), b2.combine(iso.map->col(k))));
    if (!is_subalgebra(l, d) || !core(l, d).is_zero() || !subspace_sum(d, b1).is_full() ||
        !subspace_sum(d, b2).is_full() || !subspace_intersect(d, b1).is_zero() || !subspace_intersect(d, b2).is_zero())
      throw CertificationFailure("classify_primitive: diagonal is not a common core-free complement");
    w.common_complement = d;
    w.core_free_maximal = d;
    return with_verdict(w, PrimitiveType::Type3, "two isomorphic minimal ideals with a diagonal complement");
  }
  if constexpr (!F::finite) {
    return with_verdict(w, PrimitiveType::NotPrimitive,
                        "two minimal ideals whose sum is proper; in characteristic 0 type 3 needs L = S + S");
  } else {
    if (auto bf = detail::oracle_primitive(l)) {
      bf->minimal_ideals = w.minimal_ideals;
      bf->reason = "oracle: " + bf->reason;
      return *bf;
    }
    return with_verdict(w, PrimitiveType::Undecided, "two minimal ideals, sum proper, enumeration out of budget");
  }
}

template <class F>
struct MaximalType {
  Subspace<F> core;
  PrimitiveWitness<F> witness;  // for L/M_L, subspaces lifted back to L
  Status maximality = Status::Certified;
};

/// Core of the maximal subalgebra M and the primitive type of L/M_L. Over GF(p)
/// maximality is checked by enumeration when in budget; otherwise codimension 1
/// proves it and larger codimension requires assume_maximal.
template <class F>
MaximalType<F> maximal_type(const LieAlgebra<F>& l, const Subspace<F>& m, bool assume_maximal = false) {
  if (!is_subalgebra(l, m)) throw PreconditionError("maximal_type: M is not a subalgebra");
  if (m.is_full()) throw PreconditionError("maximal_type: M = L is not maximal");
  Status maximality = Status::Certified;
  bool decided = m.dim() + 1 == l.dim();
  if constexpr (F::finite) {
    if (!decided) {
      try {
        auto s = oracle::enum_structures(l, oracle::EnumBudget{oracle::EnumBudget{}.max_subspaces, 7});
        bool found = false;
        for (const auto& x : s.maximal_subalgebras) found = found || x == m;
        if (!found) throw PreconditionError("maximal_type: M is not a maximal subalgebra");
        decided = true;
      } catch (const BudgetExceeded&) {
      }
    }
  }
  if (!decided) {
    if (!assume_maximal) throw PreconditionError("maximal_type: maximality of M cannot be verified; pass assume_maximal");
    maximality = Status::Heuristic;
  }
  Subspace<F> c = core(l, m);
  QuotientAlgebra<F> q = quotient_algebra(l, c);
  PrimitiveWitness<F> w = classify_primitive(q.algebra);
  for (auto& s : w.minimal_ideals) s = q.lift(s);
  if (w.core_free_maximal) w.core_free_maximal = q.lift(*w.core_free_maximal);
  if (w.common_complement) w.common_complement = q.lift(*w.common_complement);
  if (!w.primitive() && w.verdict != PrimitiveType::Undecided)
    throw CertificationFailure("maximal_type: L/M_L is not primitive, so M is not maximal");
  return {c, w, maximality};
}

/// a in the monolith A with (1 + ad a)(U1) = U2, for core-free maximal
/// subalgebras U1, U2 of a solvable primitive algebra.
template <class F>
Vector<F> core_free_conjugator(const LieAlgebra<F>& l, const Subspace<F>& u1, const Subspace<F>& u2) {
  if (!is_solvable(l)) throw PreconditionError("core_free_conjugator: L is not solvable");
  PrimitiveWitness<F> w = classify_primitive(l);
  if (w.verdict != PrimitiveType::Type1) throw PreconditionError("core_free_conjugator: L is not primitive");
  const Subspace<F>& a = w.minimal_ideals[0];
  for (const auto* u : {&u1, &u2})
    if (!is_subalgebra(l, *u) || !core(l, *u).is_zero() || !subspace_sum(*u, a).is_full() ||
        !subspace_intersect(*u, a).is_zero())
      throw PreconditionError("core_free_conjugator: argument is not a core-free maximal subalgebra");
  return detail::conjugating_element(l, a, l.zero_space(), u1, u2);
}

template <class F>
struct TypeEquivalence {
  PrimitiveType type = PrimitiveType::Undecided;
  Subspace<F> b;            // the minimal ideal used
  std::optional<Subspace<F>> u;           // complement of B and of C_L(B) (types 1 and 3)
  std::optional<Subspace<F>> centralizer;  // C_L(B)
  std::optional<LieAlgebra<F>> x;         // B ⋉ L/C_L(B), or D ⋉ L for type 2
  std::optional<Matrix<F>> theta;         // L -> X (types 1 and 3), X/D -> L (type 2)
  std::optional<PrimitiveWitness<F>> x_witness;  // type 2: classification of X
  std::string reason;
};

/// The constructions relating the three types: for types 1 and 3 an explicit
/// isomorphism L ≅ B ⋉ L/C_L(B); for type 2 the inflation X = D ⋉ L, which is
/// of type 3 with X/D ≅ L.
template <class F>
TypeEquivalence<F> type_equivalence_witnesses(const LieAlgebra<F>& l) {
  PrimitiveWitness<F> w = classify_primitive(l);
  if (w.verdict == PrimitiveType::Undecided) throw PreconditionError("type_equivalence_witnesses: type undecided");
  if (!w.primitive()) throw PreconditionError("type_equivalence_witnesses: L is not primitive");
  const F& field = l.field();
  TypeEquivalence<F> out{w.verdict, w.minimal_ideals[0]};
  const Subspace<F>& b = out.b;
  LieAlgebra<F> balg = subalgebra_as_algebra(l, b, detail::prefixed_names<F>("b", b.dim()));

  if (w.verdict == PrimitiveType::Type2) {
    std::vector<Matrix<F>> action;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      std::vector<Vector<F>> cols;
      for (const auto& v : b.basis()) cols.push_back(b.coords(l.bracket(l.basis_vector(i), v)));
      action.push_back(Matrix<F>::from_columns(field, b.dim(), cols));
    }
    LieAlgebra<F> x = semidirect_sum(balg, l, action);
    Subspace<F> d(field, x.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) d.insert(x.basis_vector(k));
    QuotientAlgebra<F> q = quotient_algebra(x, d);
    std::vector<Vector<F>> cols;
    for (std::size_t k = 0; k < q.algebra.dim(); ++k) {
      Vector<F> lifted = q.lift(unit_vector(field, q.algebra.dim(), k));
      cols.push_back(Vector<F>(lifted.begin() + static_cast<std::ptrdiff_t>(b.dim()), lifted.end()));
    }
    Matrix<F> theta = Matrix<F>::from_columns(field, l.dim(), cols);
    if (!is_homomorphism(q.algebra, l, theta) || is_zero(determinant(theta)))
      throw CertificationFailure("type_equivalence_witnesses: X/D -> L is not an isomorphism");
    PrimitiveWitness<F> xw = classify_primitive(x);
    if (xw.verdict != PrimitiveType::Type3 && xw.verdict != PrimitiveType::Undecided)
      throw CertificationFailure("type_equivalence_witnesses: inflation is not of type 3");
    out.x = std::move(x);
    out.theta = theta;
    out.x_witness = xw;
    out.reason = "X = D ⋉ L with X/D ≅ L";
    return out;
  }

  const Subspace<F>& u = w.verdict == PrimitiveType::Type3 ? *w.common_complement : *w.core_free_maximal;
  Subspace<F> c = centralizer(l, b);
  for (const Subspace<F>* s : {&b, static_cast<const Subspace<F>*>(&c)})
    if (!subspace_sum(u, *s).is_full() || !subspace_intersect(u, *s).is_zero())
      throw CertificationFailure("type_equivalence_witnesses: U does not complement both B and C_L(B)");
  QuotientAlgebra<F> q = quotient_algebra(l, c);
  std::vector<Matrix<F>> action;
  for (std::size_t k = 0; k < q.algebra.dim(); ++k) {
    Vector<F> g = q.lift(unit_vector(field, q.algebra.dim(), k));
    std::vector<Vector<F>> cols;
    for (const auto& v : b.basis()) cols.push_back(b.coords(l.bracket(g, v)));
    action.push_back(Matrix<F>::from_columns(field, b.dim(), cols));
  }
  LieAlgebra<F> x = semidirect_sum(balg, q.algebra, action,
                                   [&] {
                                     auto n = balg.basis_names();
                                     for (const auto& s : detail::prefixed_names<F>("q", q.algebra.dim())) n.push_back(s);
                                     return n;
                                   }());
  // theta(b + u) = b + (u + C)
  std::vector<Vector<F>> cols;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<Vector<F>> split = b.basis();
    for (const auto& v : u.basis()) split.push_back(v);
    auto sol = solve(Matrix<F>::from_columns(field, l.dim(), split), l.basis_vector(i));
    if (!sol) throw CertificationFailure("type_equivalence_witnesses: L is not B + U");
    Vector<F> bpart = l.zero(), upart = l.zero();
    for (std::size_t k = 0; k < b.dim(); ++k) axpy(bpart, (*sol)[k], b.basis_vector(k));
    for (std::size_t k = 0; k < u.dim(); ++k) axpy(upart, (*sol)[b.dim() + k], u.basis_vector(k));
    Vector<F> col = b.coords(bpart), qc = q.project(upart);
    col.insert(col.end(), qc.begin(), qc.end());
    cols.push_back(std::move(col));
  }
  Matrix<F> theta = Matrix<F>::from_columns(field, x.dim(), cols);
  if (!is_homomorphism(l, x, theta) || is_zero(determinant(theta)))
    throw CertificationFailure("type_equivalence_witnesses: theta is not an isomorphism L -> X");
  out.u = u;
  out.centralizer = c;
  out.x = std::move(x);
  out.theta = theta;
  out.reason = "L ≅ B ⋉ L/C_L(B)";
  return out;
}

}  // namespace liecrown
