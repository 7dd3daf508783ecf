#pragma once
// Quotient algebras, semidirect sums and unipotent automorphisms.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecrown/lie_algebra.hpp"

namespace liecrown {

template <class F>
struct QuotientAlgebra {
  LieAlgebra<F> algebra;
  QuotientCoords<F> coords;  // L -> L/I coordinates and back

  Vector<F> project(const Vector<F>& v) const { return coords.project(v); }
  Vector<F> lift(const Vector<F>& x) const { return coords.lift(x); }
  Subspace<F> project(const Subspace<F>& s) const { return coords.project(s); }
  Subspace<F> lift(const Subspace<F>& s) const { return coords.lift(s); }
};

/// L/I in the coordinates of the canonical complement of I. Basis vectors
/// that are images of a single basis vector of L keep its name.
template <class F>
QuotientAlgebra<F> quotient_algebra(const LieAlgebra<F>& l, const Subspace<F>& ideal) {
  check_in(l, ideal);
  if (!is_ideal(l, ideal)) throw PreconditionError("quotient_algebra: subspace is not an ideal");
  QuotientCoords<F> qc(l.whole(), ideal);
  const auto& lifts = qc.lifts();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < lifts[k].size(); ++i)
      if (!is_zero(lifts[k][i])) ++nonzero, where = i;
    names.push_back(nonzero == 1 ? l.basis_names()[where] : "q" + std::to_string(k));
  }
  typename LieAlgebra<F>::PairTable t;
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      Vector<F> c = qc.project(l.bracket(lifts[i], lifts[j]));
      if (!is_zero_vector(c)) t[{i, j}] = std::move(c);
    }
  return {LieAlgebra<F>::from_brackets(l.field(), std::move(names), t), std::move(qc)};
}

/// Whether D is a derivation of B, checked on all basis pairs.
template <class F>
bool is_derivation(const LieAlgebra<F>& b, const Matrix<F>& d) {
  const std::size_t n = b.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<F> lhs = d.apply(b.bracket_basis(i, j));
      Vector<F> rhs = add(b.bracket(d.col(i), b.basis_vector(j)), b.bracket(b.basis_vector(i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

/// B ⋊ Q on B ⊕ Q with [b+q, b'+q'] = [b,b'] + q.b' - q'.b + [q,q'].
/// action[k] is the derivation of B by which the k-th basis vector of Q acts.
template <class F>
LieAlgebra<F> semidirect_sum(const LieAlgebra<F>& b, const LieAlgebra<F>& q, const std::vector<Matrix<F>>& action,
                             std::vector<std::string> names = {}) {
  const F& field = b.field();
  if (!(q.field() == field)) throw IncompatibleField("semidirect_sum: factors over different fields");
  const std::size_t m = b.dim(), n = q.dim();
  if (action.size() != n) throw DimensionMismatch("semidirect_sum: one action matrix per basis vector of Q");
  for (std::size_t k = 0; k < n; ++k)
    if (!is_derivation(b, action[k]))
      throw PreconditionError("semidirect_sum: action of " + q.basis_names()[k] + " is not a derivation");
  auto act = [&](const Vector<F>& x) {
    Matrix<F> d(field, m, m);
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(x[k])) d = d + action[k].scaled(x[k]);
    return d;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (act(q.bracket_basis(i, j)) != action[i] * action[j] - action[j] * action[i])
        throw PreconditionError("semidirect_sum: action is not a homomorphism");

  if (names.empty()) {
    names = b.basis_names();
    names.insert(names.end(), q.basis_names().begin(), q.basis_names().end());
  }
  if (names.size() != m + n) throw DimensionMismatch("semidirect_sum: wrong number of names");
  typename LieAlgebra<F>::PairTable t;
  auto embed = [&](const Vector<F>& v, std::size_t offset) {
    Vector<F> out = zero_vector(field, m + n);
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector<F> c = b.bracket_basis(i, j);
      if (!is_zero_vector(c)) t[{i, j}] = embed(c, 0);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      // [b_i, q_k] = -q_k . b_i
      Vector<F> c = scale(action[k].col(i), typename F::Element(-field.one()));
      if (!is_zero_vector(c)) t[{i, m + k}] = embed(c, 0);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<F> c = q.bracket_basis(i, j);
      if (!is_zero_vector(c)) t[{m + i, m + j}] = embed(c, m);
    }
  return LieAlgebra<F>::from_brackets(field, std::move(names), t);
}

/// Direct sum L1 ⊕ L2.
template <class F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b, std::vector<std::string> names = {}) {
  std::vector<Matrix<F>> zero(b.dim(), Matrix<F>(a.field(), a.dim(), a.dim()));
  return semidirect_sum(a, b, zero, std::move(names));
}

/// Whether a square matrix phi preserves brackets on all basis pairs.
template <class F>
bool is_homomorphism(const LieAlgebra<F>& src, const LieAlgebra<F>& dst, const Matrix<F>& phi) {
  if (phi.cols() != src.dim() || phi.rows() != dst.dim()) return false;
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j)
      if (phi.apply(src.bracket_basis(i, j)) != dst.bracket(phi.col(i), phi.col(j))) return false;
  return true;
}

template <class F>
bool is_automorphism(const LieAlgebra<F>& l, const Matrix<F>& phi) {
  return is_homomorphism(l, l, phi) && !is_zero(determinant(phi));
}

template <class F>
struct NilpotentAutomorphism {
  Vector<F> generator;
  Matrix<F> matrix;
  std::size_t nilpotency_index;  // least k with (ad a)^k = 0
};

/// exp(ad a) = sum_k (ad a)^k / k!. In characteristic p the nilpotency index
/// must be below p; otherwise the exponential is undefined and this throws.
template <class F>
NilpotentAutomorphism<F> nilpotent_automorphism(const LieAlgebra<F>& l, const Vector<F>& a) {
  const F& field = l.field();
  const std::size_t n = l.dim();
  Matrix<F> ad_a = l.ad(a);
  std::vector<Matrix<F>> powers{Matrix<F>::identity(field, n)};
  while (!powers.back().is_zero_matrix()) {
    if (powers.size() > n) throw PreconditionError("nilpotent_automorphism: ad a is not nilpotent");
    powers.push_back(powers.back() * ad_a);
  }
  const std::size_t index = powers.size() - 1;
  if (field.characteristic() != 0 && index >= field.characteristic())
    throw PreconditionError("nilpotent_automorphism: nilpotency index " + std::to_string(index) +
                            " is not below the characteristic; exp(ad a) is undefined");
  Matrix<F> exp(field, n, n);
  typename F::Element factorial = field.one();
  for (std::size_t k = 0; k < index; ++k) {
    if (k > 0) factorial *= field.from_int(static_cast<long long>(k));
    exp = exp + powers[k].scaled(typename F::Element(field.one() / factorial));
  }
  if (!is_automorphism(l, exp))
    throw CertificationFailure("nilpotent_automorphism: exp(ad a) does not preserve brackets");
  return {a, std::move(exp), index};
}

/// 1 + ad a for (ad a)^2 = 0, verified to be an automorphism. Unlike the
/// exponential this needs no restriction on the characteristic beyond the check.
template <class F>
Matrix<F> one_plus_ad(const LieAlgebra<F>& l, const Vector<F>& a) {
  Matrix<F> ad_a = l.ad(a);
  if (!(ad_a * ad_a).is_zero_matrix()) throw PreconditionError("one_plus_ad: (ad a)^2 != 0");
  Matrix<F> m = Matrix<F>::identity(l.field(), l.dim()) + ad_a;
  if (!is_automorphism(l, m)) throw CertificationFailure("one_plus_ad: 1 + ad a is not an automorphism");
  return m;
}

}  // namespace liecrown
