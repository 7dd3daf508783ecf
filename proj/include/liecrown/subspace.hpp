#pragma once
// Subspaces of a fixed ambient space F^n held by their canonical RREF basis.
// Equal subspaces have identical bases, so structural equality is subspace equality.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecrown/error.hpp"
#include "liecrown/matrix.hpp"

namespace liecrown {

template <class F>
class Subspace {
 public:
  using Element = typename F::Element;

  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  static Subspace zero(const F& field, std::size_t n) { return Subspace(field, n); }
  static Subspace full(const F& field, std::size_t n) {
    Subspace s(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.rows_.push_back(unit_vector(field, n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }
  static Subspace span(const F& field, std::size_t n, const std::vector<Vector<F>>& vectors) {
    Subspace s(field, n);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  /// Canonical basis rows (RREF, distinct pivots, ascending).
  const std::vector<Vector<F>>& basis() const { return rows_; }
  const Vector<F>& basis_vector(std::size_t k) const { return rows_[k]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(field_, ambient_, rows_); }

  /// Residue of v modulo this subspace: zero exactly when v lies in it.
  /// Linear in v, and zero at every pivot column.
  Vector<F> reduce(Vector<F> v) const {
    check_vector(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Element c = v[pivots_[k]];
      if (!liecrown::is_zero(c)) axpy(v, Element(-c), rows_[k]);
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector(reduce(v)); }
  bool contains(const Subspace& u) const {
    check_same_ambient(u);
    for (const auto& r : u.rows_)
      if (!contains(r)) return false;
    return true;
  }

  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  Vector<F> coords(const Vector<F>& v) const {
    Vector<F> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }
  /// Inverse of coords().
  Vector<F> combine(const Vector<F>& coeffs) const {
    Vector<F> v = zero_vector(field_, ambient_);
    for (std::size_t k = 0; k < rows_.size(); ++k) axpy(v, coeffs[k], rows_[k]);
    return v;
  }

  /// Adds v to the spanning set; returns false when v was already contained.
  bool insert(const Vector<F>& v) {
    Vector<F> r = reduce(v);
    std::size_t pc = 0;
    while (pc < ambient_ && liecrown::is_zero(r[pc])) ++pc;
    if (pc == ambient_) return false;
    const Element inv = field_.one() / r[pc];
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
      const Element c = row[pc];
      if (!liecrown::is_zero(c)) axpy(row, Element(-c), r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

  void check_same_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_ || !(o.field_ == field_))
      throw DimensionMismatch("subspaces live in different ambient spaces (" +
                              std::to_string(ambient_) + " vs " + std::to_string(o.ambient_) + ")");
  }

 private:
  void check_vector(const Vector<F>& v) const {
    if (v.size() != ambient_)
      throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                              " in ambient of dimension " + std::to_string(ambient_));
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing both.
template <class F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
  u.check_same_ambient(v);
  Subspace<F> s = u;
  for (const auto& r : v.basis()) s.insert(r);
  return s;
}

/// Intersection via the kernel of [U^T | -V^T]: sum a_i u_i = sum b_j v_j.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v) {
  u.check_same_ambient(v);
  const F& field = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace<F>::zero(field, n);
  std::vector<Vector<F>> cols;
  for (const auto& r : u.basis()) cols.push_back(r);
  for (const auto& r : v.basis()) cols.push_back(scale(r, typename F::Element(-field.one())));
  Matrix<F> m = Matrix<F>::from_columns(field, n, cols);
  Subspace<F> out(field, n);
  for (const auto& k : kernel_basis(m)) {
    Vector<F> w = zero_vector(field, n);
    for (std::size_t i = 0; i < u.dim(); ++i) axpy(w, k[i], u.basis_vector(i));
    out.insert(w);
  }
  return out;
}

/// Kernel of A as a subspace of F^cols.
template <class F>
Subspace<F> nullspace(const Matrix<F>& a) {
  return Subspace<F>::span(a.field(), a.cols(), kernel_basis(a));
}

/// Image T(U) of a subspace under a square or rectangular map.
template <class F>
Subspace<F> image(const Matrix<F>& t, const Subspace<F>& u) {
  Subspace<F> out(u.field(), t.rows());
  for (const auto& r : u.basis()) out.insert(t.apply(r));
  return out;
}

template <class F>
struct RrefSolve {
  Matrix<F> rref;
  std::size_t rank;
  std::optional<Matrix<F>> particular;  // X with A X = b, when b was given and is solvable
  Subspace<F> nullspace;
};

/// Row-reduces A and, when b is supplied, solves A X = b for one particular X.
template <class F>
RrefSolve<F> rref_solve(const Matrix<F>& a, const std::optional<Matrix<F>>& b = std::nullopt) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionMismatch("rref_solve needs a nonempty matrix");
  Rref<F> red = rref(a);
  RrefSolve<F> out{red.matrix, red.rank(), std::nullopt, nullspace(a)};
  if (!b) return out;
  if (b->rows() != a.rows()) throw DimensionMismatch("right-hand side row count differs from A");
  const F& field = a.field();
  Matrix<F> aug(field, a.rows(), a.cols() + b->cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b->cols(); ++c) aug(r, a.cols() + c) = (*b)(r, c);
  }
  Rref<F> ra = rref(aug);
  for (auto p : ra.pivots)
    if (p >= a.cols()) return out;  // inconsistent
  Matrix<F> x(field, a.cols(), b->cols());
  for (std::size_t r = 0; r < ra.pivots.size(); ++r)
    for (std::size_t c = 0; c < b->cols(); ++c) x(ra.pivots[r], c) = ra.matrix(r, a.cols() + c);
  out.particular = std::move(x);
  return out;
}

/// Solves A x = b for a single right-hand side.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  if (a.cols() == 0) {
    if (is_zero_vector(b)) return Vector<F>{};
    return std::nullopt;
  }
  if (a.rows() == 0) return zero_vector(a.field(), a.cols());
  auto res = rref_solve(a, std::optional<Matrix<F>>(Matrix<F>::from_columns(a.field(), a.rows(), {b})));
  if (!res.particular) return std::nullopt;
  return res.particular->col(0);
}

/// Coordinates on W/U for U inside W. The complement basis is the RREF of the
/// residues of W's basis modulo U, so it is canonical and has zeros on U's pivots.
template <class F>
class QuotientCoords {
 public:
  QuotientCoords(const Subspace<F>& w, const Subspace<F>& u) : w_(w), u_(u), complement_(w.field(), w.ambient_dim()) {
    w.check_same_ambient(u);
    if (!w.contains(u)) throw PreconditionError("quotient_coords: U is not contained in W");
    for (const auto& r : w.basis()) complement_.insert(u.reduce(r));
  }

  std::size_t dim() const { return complement_.dim(); }
  const Subspace<F>& numerator() const { return w_; }
  const Subspace<F>& denominator() const { return u_; }
  /// Lifts of the quotient basis vectors.
  const std::vector<Vector<F>>& lifts() const { return complement_.basis(); }
  const Subspace<F>& section() const { return complement_; }

  /// W -> W/U; kernel exactly U.
  Vector<F> project(const Vector<F>& v) const { return complement_.coords(u_.reduce(v)); }
  /// W/U -> W; project(lift(x)) == x.
  Vector<F> lift(const Vector<F>& x) const { return complement_.combine(x); }

  /// Image of a subspace (between U and W, or any subspace of W) in quotient coordinates.
  Subspace<F> project(const Subspace<F>& s) const {
    Subspace<F> out(u_.field(), dim());
    for (const auto& r : s.basis()) out.insert(project(r));
    return out;
  }
  /// Full preimage U + lift(S) of a quotient subspace.
  Subspace<F> lift(const Subspace<F>& s) const {
    Subspace<F> out = u_;
    for (const auto& r : s.basis()) out.insert(lift(r));
    return out;
  }

 private:
  Subspace<F> w_, u_, complement_;
};

template <class F>
QuotientCoords<F> quotient_coords(const Subspace<F>& w, const Subspace<F>& u) {
  return QuotientCoords<F>(w, u);
}

}  // namespace liecrown
