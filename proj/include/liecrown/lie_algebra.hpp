#pragma once
// Lie algebras given by structure constants, and the subspace operations
// built on the bracket: products of subspaces, centralizers, cores, series.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecrown/error.hpp"
#include "liecrown/subspace.hpp"

namespace liecrown {

/// Structure constants over an exact field. Only the brackets [e_i, e_j] with
/// i < j are stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0 follow.
/// The Jacobi identity is checked on every basis triple at construction.
template <class F>
class LieAlgebra {
 public:
  using Element = typename F::Element;
  using PairTable = std::map<std::pair<std::size_t, std::size_t>, Vector<F>>;

  /// Builds from brackets of basis pairs. Pairs may be given in either order;
  /// a diagonal pair with nonzero value or two inconsistent orientations of
  /// the same pair raise AntisymmetryViolation.
  static LieAlgebra from_brackets(F field, std::vector<std::string> names, const PairTable& brackets) {
    const std::size_t n = names.size();
    LieAlgebra l(std::move(field), std::move(names));
    std::vector<bool> seen(l.upper_.size(), false);
    for (const auto& [ij, v] : brackets) {
      auto [i, j] = ij;
      if (i >= n || j >= n) throw DimensionMismatch("bracket index out of range");
      if (v.size() != n) throw DimensionMismatch("bracket value has wrong length");
      if (i == j) {
        if (!is_zero_vector(v)) throw AntisymmetryViolation(i, j);
        continue;
      }
      Vector<F> val = i < j ? v : scale(v, Element(-l.field_.one()));
      std::size_t idx = l.pair_index(std::min(i, j), std::max(i, j));
      if (seen[idx] && l.upper_[idx] != val) throw AntisymmetryViolation(i, j);
      seen[idx] = true;
      l.upper_[idx] = std::move(val);
    }
    l.validate_jacobi();
    return l;
  }

  /// Builds from a full table c[i][j][k] ([e_i,e_j] = sum_k c[i][j][k] e_k),
  /// checking antisymmetry entry by entry.
  static LieAlgebra from_table(F field, std::vector<std::string> names,
                               const std::vector<std::vector<Vector<F>>>& table) {
    const std::size_t n = names.size();
    if (table.size() != n) throw DimensionMismatch("structure table has wrong shape");
    LieAlgebra l(std::move(field), std::move(names));
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw DimensionMismatch("structure table has wrong shape");
      for (std::size_t j = 0; j < n; ++j)
        if (table[i][j].size() != n) throw DimensionMismatch("structure table has wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (i == j) {
          if (!is_zero_vector(table[i][i])) throw AntisymmetryViolation(i, i);
          continue;
        }
        if (add(table[i][j], table[j][i]) != zero_vector(l.field_, n)) throw AntisymmetryViolation(i, j);
        l.upper_[l.pair_index(i, j)] = table[i][j];
      }
    l.validate_jacobi();
    return l;
  }

  static LieAlgebra abelian(const F& field, std::vector<std::string> names) {
    return from_brackets(field, std::move(names), {});
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// [e_i, e_j]
  Vector<F> bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(field_, dim());
    if (i < j) return upper_[pair_index(i, j)];
    return scale(upper_[pair_index(j, i)], Element(-field_.one()));
  }

  Vector<F> bracket(const Vector<F>& u, const Vector<F>& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n) throw DimensionMismatch("bracket of vectors outside the algebra");
    Vector<F> out = zero_vector(field_, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector<F>& c = upper_[pair_index(i, j)];
        if (is_zero_vector(c)) continue;
        Element coeff = u[i] * v[j] - u[j] * v[i];
        if (!is_zero(coeff)) axpy(out, coeff, c);
      }
    return out;
  }

  /// Matrix of ad x acting on column vectors: (ad x) v = [x, v].
  Matrix<F> ad(const Vector<F>& x) const {
    const std::size_t n = dim();
    Matrix<F> m(field_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector<F> col = bracket(x, unit_vector(field_, n, j));
      for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
  }
  Matrix<F> ad_basis(std::size_t i) const { return ad(unit_vector(field_, dim(), i)); }

  Vector<F> zero() const { return zero_vector(field_, dim()); }
  Vector<F> basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Subspace<F> zero_space() const { return Subspace<F>::zero(field_, dim()); }
  Subspace<F> whole() const { return Subspace<F>::full(field_, dim()); }

  /// Stored constants, one entry per nonzero bracket with i < j.
  PairTable brackets() const {
    PairTable t;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!is_zero_vector(upper_[pair_index(i, j)])) t[{i, j}] = upper_[pair_index(i, j)];
    return t;
  }

  bool is_abelian() const {
    for (const auto& v : upper_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.upper_ == b.upper_;
  }

 private:
  LieAlgebra(F field, std::vector<std::string> names)
      : field_(std::move(field)), names_(std::move(names)) {
    const std::size_t n = names_.size();
    upper_.assign(n * (n > 0 ? n - 1 : 0) / 2, zero_vector(field_, n));
  }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // i < j; rows of the strict upper triangle laid out consecutively
    const std::size_t n = dim();
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  void validate_jacobi() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vector<F> ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
          Vector<F> s = bracket(ei, bracket_basis(j, k));
          s = add(s, bracket(ej, bracket_basis(k, i)));
          s = add(s, bracket(ek, bracket_basis(i, j)));
          if (!is_zero_vector(s)) throw JacobiViolation(i, j, k);
        }
  }

  F field_;
  std::vector<std::string> names_;
  std::vector<Vector<F>> upper_;
};

/// Checks the validity of a structure table; same as constructing it.
template <class F>
LieAlgebra<F> validate_algebra(F field, std::vector<std::string> names,
                               const std::vector<std::vector<Vector<F>>>& table) {
  return LieAlgebra<F>::from_table(std::move(field), std::move(names), table);
}

template <class F>
void check_in(const LieAlgebra<F>& l, const Subspace<F>& u) {
  if (u.ambient_dim() != l.dim() || !(u.field() == l.field()))
    throw DimensionMismatch("subspace does not live in the algebra");
}

/// Span of [u, v] over basis vectors u of U and v of V.
template <class F>
Subspace<F> bracket_spaces(const LieAlgebra<F>& l, const Subspace<F>& u, const Subspace<F>& v) {
  check_in(l, u);
  check_in(l, v);
  Subspace<F> out = l.zero_space();
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) {
      out.insert(l.bracket(a, b));
      if (out.is_full()) return out;
    }
  return out;
}

template <class F>
bool is_subalgebra(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  const auto& b = u.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!u.contains(l.bracket(b[i], b[j]))) return false;
  return true;
}

template <class F>
bool is_ideal(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Vector<F> e = l.basis_vector(i);
    for (const auto& b : u.basis())
      if (!u.contains(l.bracket(e, b))) return false;
  }
  return true;
}

template <class F>
struct IdealFlag {
  Subspace<F> subspace;
  bool is_subalgebra;
  bool is_ideal;
};

template <class F>
IdealFlag<F> flag(const LieAlgebra<F>& l, const Subspace<F>& u) {
  return {u, is_subalgebra(l, u), is_ideal(l, u)};
}

/// {x in W : T_j x in S for all j}, for maps T_j given as matrices.
template <class F>
Subspace<F> preimage_within(const Subspace<F>& w, const std::vector<Matrix<F>>& maps, const Subspace<F>& s) {
  const F& field = w.field();
  if (w.is_zero()) return w;
  // unknown: coefficient vector alpha over w's basis; condition residue_S(T_j w_alpha) = 0
  std::vector<Vector<F>> rows;
  for (const auto& t : maps) {
    std::vector<Vector<F>> residues;
    for (const auto& b : w.basis()) residues.push_back(s.reduce(t.apply(b)));
    for (std::size_t k = 0; k < s.ambient_dim(); ++k) {
      Vector<F> row;
      row.reserve(w.dim());
      bool nonzero = false;
      for (const auto& r : residues) {
        row.push_back(r[k]);
        nonzero = nonzero || !is_zero(r[k]);
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return w;
  Matrix<F> m = Matrix<F>::from_rows(field, w.dim(), rows);
  Subspace<F> out(field, w.ambient_dim());
  for (const auto& alpha : kernel_basis(m)) out.insert(w.combine(alpha));
  return out;
}

/// C_L(U) = {x : [x, U] = 0}.
template <class F>
Subspace<F> centralizer(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  std::vector<Matrix<F>> maps;
  for (const auto& b : u.basis()) maps.push_back(l.ad(b));
  // [x, u] = -(ad u) x, so the kernel of ad u restricted to L is what we want
  return preimage_within(l.whole(), maps, l.zero_space());
}

/// C_L(A/B) = {x : [x, A] in B}.
template <class F>
Subspace<F> centralizer_of_factor(const LieAlgebra<F>& l, const Subspace<F>& a, const Subspace<F>& b) {
  check_in(l, a);
  check_in(l, b);
  std::vector<Matrix<F>> maps;
  for (const auto& v : a.basis()) maps.push_back(l.ad(v));
  return preimage_within(l.whole(), maps, b);
}

/// Largest ideal of L inside the subalgebra U, by the descending chain
/// U_{k+1} = {u in U_k : [L, u] in U_k}.
template <class F>
Subspace<F> core(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  if (!is_subalgebra(l, u)) throw PreconditionError("core: argument is not a subalgebra");
  std::vector<Matrix<F>> ads;
  for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
  Subspace<F> cur = u;
  while (true) {
    Subspace<F> next = preimage_within(cur, ads, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// The ideal generated by U: closure of U under ad of every basis element.
template <class F>
Subspace<F> ideal_closure(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  Subspace<F> out = u;
  std::vector<Vector<F>> queue = u.basis();
  while (!queue.empty()) {
    Vector<F> v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Vector<F> w = l.bracket(l.basis_vector(i), v);
      if (out.insert(w)) queue.push_back(std::move(w));
    }
  }
  return out;
}

/// The subalgebra generated by U.
template <class F>
Subspace<F> subalgebra_closure(const LieAlgebra<F>& l, const Subspace<F>& u) {
  check_in(l, u);
  Subspace<F> out = u;
  bool grew = true;
  while (grew) {
    grew = false;
    auto b = out.basis();
    for (std::size_t i = 0; i < b.size() && !out.is_full(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (out.insert(l.bracket(b[i], b[j]))) grew = true;
  }
  return out;
}

template <class F>
struct CharacteristicSeries {
  std::vector<Subspace<F>> derived;
  std::vector<Subspace<F>> lower_central;
  Subspace<F> center;

  bool solvable() const { return derived.back().is_zero(); }
  bool nilpotent() const { return lower_central.back().is_zero(); }
};

/// Derived and lower central series. Each list stops right after the first
/// term that is zero or equal to its predecessor, so the tail shows where the
/// series stabilizes.
template <class F>
CharacteristicSeries<F> characteristic_series(const LieAlgebra<F>& l) {
  auto run = [&](auto next) {
    std::vector<Subspace<F>> s{l.whole()};
    while (!s.back().is_zero()) {
      Subspace<F> t = next(s.back());
      bool stable = t == s.back();
      s.push_back(std::move(t));
      if (stable) break;
    }
    return s;
  };
  CharacteristicSeries<F> cs{
      run([&](const Subspace<F>& x) { return bracket_spaces(l, x, x); }),
      run([&](const Subspace<F>& x) { return bracket_spaces(l, l.whole(), x); }),
      centralizer(l, l.whole()),
  };
  return cs;
}

/// Whether the subalgebra S (an ideal or subalgebra) is solvable.
template <class F>
bool is_solvable(const LieAlgebra<F>& l, const Subspace<F>& s) {
  Subspace<F> cur = s;
  while (!cur.is_zero()) {
    Subspace<F> next = bracket_spaces(l, cur, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

template <class F>
bool is_solvable(const LieAlgebra<F>& l) {
  return is_solvable(l, l.whole());
}

/// Structure constants of a subalgebra in its canonical basis.
template <class F>
LieAlgebra<F> subalgebra_as_algebra(const LieAlgebra<F>& l, const Subspace<F>& s,
                                    std::vector<std::string> names = {}) {
  if (!is_subalgebra(l, s)) throw PreconditionError("not a subalgebra");
  if (names.empty())
    for (std::size_t k = 0; k < s.dim(); ++k) names.push_back("s" + std::to_string(k));
  typename LieAlgebra<F>::PairTable t;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vector<F> c = s.coords(l.bracket(s.basis_vector(i), s.basis_vector(j)));
      if (!is_zero_vector(c)) t[{i, j}] = std::move(c);
    }
  return LieAlgebra<F>::from_brackets(l.field(), std::move(names), t);
}

}  // namespace liecrown
