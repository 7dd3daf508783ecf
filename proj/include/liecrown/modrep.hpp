#pragma once
// L-modules attached to chief factors: spinning, irreducibility, socles,
// homomorphism spaces and the splitting test for abelian factors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liecrown/lie_algebra.hpp"
#include "liecrown/polynomial.hpp"

namespace liecrown {

enum class Status { Certified, Heuristic };

inline const char* to_string(Status s) { return s == Status::Certified ? "certified" : "heuristic"; }

/// Upper bound on vectors enumerated by any exhaustive search over a finite field.
inline constexpr std::uint64_t kEnumerationLimit = 1000000;

/// p^d, saturating at limit+1.
inline std::uint64_t bounded_power(std::uint64_t p, std::size_t d, std::uint64_t limit = kEnumerationLimit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    r *= p;
    if (r > limit) return limit + 1;
  }
  return r;
}

template <class F>
class LModule {
 public:
  /// action[i] is the matrix of the i-th basis vector of l; checked to be a representation.
  LModule(const LieAlgebra<F>& l, std::vector<Matrix<F>> action, std::size_t dim)
      : algebra_(l), action_(std::move(action)), dim_(dim) {
    if (action_.size() != l.dim()) throw DimensionMismatch("LModule: one action matrix per basis vector");
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("LModule: action matrix has wrong size");
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = i + 1; j < l.dim(); ++j)
        if (act(l.bracket_basis(i, j)) != action_[i] * action_[j] - action_[j] * action_[i])
          throw PreconditionError("LModule: action does not respect the bracket of " + l.basis_names()[i] + " and " +
                                  l.basis_names()[j]);
  }

  /// The adjoint module of l.
  static LModule adjoint(const LieAlgebra<F>& l) {
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < l.dim(); ++i) act.push_back(l.ad_basis(i));
    return LModule(l, std::move(act), l.dim(), Unchecked{});
  }

  const LieAlgebra<F>& algebra() const { return algebra_; }
  const F& field() const { return algebra_.field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<F>>& action() const { return action_; }
  const Matrix<F>& action(std::size_t i) const { return action_[i]; }

  /// Matrix of an arbitrary element x of the algebra.
  Matrix<F> act(const Vector<F>& x) const {
    Matrix<F> m(field(), dim_, dim_);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!is_zero(x[k])) m = m + action_[k].scaled(x[k]);
    return m;
  }

  bool is_submodule(const Subspace<F>& s) const {
    for (const auto& m : action_)
      for (const auto& v : s.basis())
        if (!s.contains(m.apply(v))) return false;
    return true;
  }

  /// The submodule S in the coordinates of its canonical basis.
  LModule restrict(const Subspace<F>& s) const {
    if (!is_submodule(s)) throw PreconditionError("restrict: subspace is not a submodule");
    std::vector<Matrix<F>> act;
    for (const auto& m : action_) {
      std::vector<Vector<F>> cols;
      for (const auto& v : s.basis()) cols.push_back(s.coords(m.apply(v)));
      act.push_back(Matrix<F>::from_columns(field(), s.dim(), cols));
    }
    return LModule(algebra_, std::move(act), s.dim(), Unchecked{});
  }

  /// M/S in the coordinates of the canonical complement.
  LModule quotient(const Subspace<F>& s) const {
    if (!is_submodule(s)) throw PreconditionError("quotient: subspace is not a submodule");
    QuotientCoords<F> qc(Subspace<F>::full(field(), dim_), s);
    std::vector<Matrix<F>> act;
    for (const auto& m : action_) {
      std::vector<Vector<F>> cols;
      for (const auto& v : qc.lifts()) cols.push_back(qc.project(m.apply(v)));
      act.push_back(Matrix<F>::from_columns(field(), qc.dim(), cols));
    }
    return LModule(algebra_, std::move(act), qc.dim(), Unchecked{});
  }

  /// The contragredient module, x acting by -rho(x)^T.
  LModule dual() const {
    std::vector<Matrix<F>> act;
    for (const auto& m : action_) act.push_back(m.transpose().scaled(typename F::Element(-field().one())));
    return LModule(algebra_, std::move(act), dim_, Unchecked{});
  }

  Subspace<F> zero_space() const { return Subspace<F>::zero(field(), dim_); }
  Subspace<F> whole() const { return Subspace<F>::full(field(), dim_); }

 private:
  struct Unchecked {};
  LModule(const LieAlgebra<F>& l, std::vector<Matrix<F>> action, std::size_t dim, Unchecked)
      : algebra_(l), action_(std::move(action)), dim_(dim) {}

  template <class G>
  friend LModule<G> factor_module(const LieAlgebra<G>&, const Subspace<G>&, const Subspace<G>&);

  LieAlgebra<F> algebra_;
  std::vector<Matrix<F>> action_;
  std::size_t dim_;
};

/// A/B as an L-module under the adjoint action, in QuotientCoords(A, B) coordinates.
template <class F>
LModule<F> factor_module(const LieAlgebra<F>& l, const Subspace<F>& a, const Subspace<F>& b) {
  check_in(l, a);
  check_in(l, b);
  if (!a.contains(b)) throw PreconditionError("factor_module: B is not contained in A");
  if (!is_ideal(l, a) || !is_ideal(l, b)) throw PreconditionError("factor_module: A and B must be ideals");
  QuotientCoords<F> qc(a, b);
  std::vector<Matrix<F>> act;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<Vector<F>> cols;
    for (const auto& v : qc.lifts()) cols.push_back(qc.project(l.bracket(l.basis_vector(i), v)));
    act.push_back(Matrix<F>::from_columns(l.field(), qc.dim(), cols));
  }
  return LModule<F>(l, std::move(act), qc.dim(), typename LModule<F>::Unchecked{});
}

/// Smallest submodule containing the given vectors.
template <class F>
Subspace<F> spin(const LModule<F>& m, const std::vector<Vector<F>>& vectors) {
  Subspace<F> s(m.field(), m.dim());
  std::vector<Vector<F>> queue;
  for (const auto& v : vectors)
    if (s.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector<F> v = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : m.action()) {
      Vector<F> w = a.apply(v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

template <class F>
Subspace<F> spin(const LModule<F>& m, const Vector<F>& v) {
  return spin(m, std::vector<Vector<F>>{v});
}

/// Calls f on one representative of every line of F^d (first nonzero entry 1)
/// until f returns true. Throws BudgetExceeded when p^d exceeds the enumeration limit.
template <class Fn>
bool for_each_projective_point(const PrimeField& field, std::size_t d, Fn&& f, const char* what = "vector enumeration") {
  const std::uint64_t p = field.size();
  const std::uint64_t total = bounded_power(p, d);
  if (total > kEnumerationLimit) throw BudgetExceeded(what, total, kEnumerationLimit);
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t tail = d - lead - 1;
    const std::uint64_t count = bounded_power(p, tail);
    for (std::uint64_t c = 0; c < count; ++c) {
      Vector<PrimeField> v = zero_vector(field, d);
      v[lead] = field.one();
      std::uint64_t x = c;
      for (std::size_t k = 0; k < tail; ++k, x /= p) v[d - 1 - k] = field.element(static_cast<std::uint32_t>(x % p));
      if (f(v)) return true;
    }
  }
  return false;
}

template <class F>
struct IrreducibilityTest {
  bool irreducible = false;
  Status status = Status::Certified;
  std::optional<Subspace<F>> proper_submodule;  // witness when reducible
  std::string reason;
};

/// Annihilator in M of a subspace S of the dual space.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s, std::size_t dim) {
  if (s.is_zero()) return Subspace<F>::full(s.field(), dim);
  return nullspace(s.basis_matrix());
}

namespace detail {

inline IrreducibilityTest<RationalField> norton_test(const LModule<RationalField>& m) {
  using F = RationalField;
  const std::size_t d = m.dim();
  const std::size_t n = m.algebra().dim();
  std::vector<Matrix<F>> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(m.action(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(m.action(i) + m.action(j));
  std::mt19937 gen(20240611u);
  for (int t = 0; t < 40 && n > 0; ++t) {
    Vector<F> x(n, Rational(0));
    for (auto& c : x) c = Rational(static_cast<long>(gen() % 7) - 3);
    candidates.push_back(m.act(x));
  }
  LModule<F> dual = m.dual();
  for (const auto& t : candidates) {
    RationalFactorization fac = factor_small(characteristic_polynomial(t));
    for (const auto& f : fac.irreducible) {
      Matrix<F> ft = evaluate(f, t);
      std::vector<Vector<F>> ker = kernel_basis(ft);
      if (ker.size() != degree(f)) {
        for (const auto& v : ker) {
          Subspace<F> s = spin(m, v);
          if (!s.is_full()) return {false, Status::Certified, s, "proper submodule spun from a kernel vector"};
        }
        continue;
      }
      Subspace<F> s = spin(m, ker.front());
      if (!s.is_full()) return {false, Status::Certified, s, "proper submodule spun from a kernel vector"};
      std::vector<Vector<F>> dker = kernel_basis(ft.transpose());
      Subspace<F> ds = spin(dual, dker.front());
      if (!ds.is_full())
        return {false, Status::Certified, annihilator(ds, d), "annihilator of a proper dual submodule"};
      return {true, Status::Certified, std::nullopt, "kernel of an irreducible factor generates M and its dual"};
    }
  }
  return {true, Status::Heuristic, std::nullopt,
          "no candidate element has an irreducible characteristic-polynomial factor of degree <= 4 with "
          "kernel of matching dimension"};
}

}  // namespace detail

/// Decides whether M is irreducible. Exact over GF(p) by enumerating lines
/// (bounded by the enumeration limit); over Q by Norton's criterion, which is
/// exact whenever it applies and otherwise reports a heuristic verdict.
template <class F>
IrreducibilityTest<F> test_irreducible(const LModule<F>& m) {
  const std::size_t d = m.dim();
  if (d == 0) return {false, Status::Certified, std::nullopt, "zero module"};
  if (d == 1) return {true, Status::Certified, std::nullopt, "one-dimensional"};
  for (std::size_t k = d; k-- > 0;) {
    Subspace<F> s = spin(m, unit_vector(m.field(), d, k));
    if (!s.is_full()) return {false, Status::Certified, s, "a basis vector spins a proper submodule"};
  }
  if constexpr (F::finite) {
    std::optional<Subspace<F>> found;
    for_each_projective_point(m.field(), d, [&](const Vector<F>& v) {
      Subspace<F> s = spin(m, v);
      if (!s.is_full()) found = std::move(s);
      return found.has_value();
    });
    if (found) return {false, Status::Certified, found, "a vector spins a proper submodule"};
    return {true, Status::Certified, std::nullopt, "every nonzero vector spins the whole module"};
  } else {
    return detail::norton_test(m);
  }
}

template <class F>
struct IrreducibleSubmodule {
  Subspace<F> space;
  Status status;
  std::string reason;
};

/// An irreducible submodule inside the nonzero submodule V: spin basis vectors
/// of V in reverse order, descend into any proper result, and certify at the bottom.
template <class F>
IrreducibleSubmodule<F> find_irreducible(const LModule<F>& m, Subspace<F> v) {
  if (v.is_zero()) throw PreconditionError("find_irreducible: zero submodule");
  while (true) {
    bool descended = false;
    for (std::size_t k = v.dim(); k-- > 0;) {
      Subspace<F> s = spin(m, v.basis_vector(k));
      if (!(s == v)) {
        v = std::move(s);
        descended = true;
        break;
      }
    }
    if (descended) continue;
    IrreducibilityTest<F> t = test_irreducible(m.restrict(v));
    if (t.irreducible) return {v, t.status, t.reason};
    std::vector<Vector<F>> lifted;
    for (const auto& r : t.proper_submodule->basis()) lifted.push_back(v.combine(r));
    v = Subspace<F>::span(m.field(), m.dim(), lifted);
  }
}

/// Basis of Hom_L(M1, M2) as dim(M2) x dim(M1) matrices.
template <class F>
std::vector<Matrix<F>> hom_space(const LModule<F>& m1, const LModule<F>& m2) {
  if (!(m1.algebra() == m2.algebra())) throw PreconditionError("hom_space: modules over different algebras");
  const F& field = m1.field();
  const std::size_t d1 = m1.dim(), d2 = m2.dim(), n = m1.algebra().dim();
  if (d1 == 0 || d2 == 0) return {};
  const std::size_t unknowns = d1 * d2;
  auto idx = [&](std::size_t r, std::size_t c) { return r * d1 + c; };
  std::vector<Vector<F>> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix<F>& a1 = m1.action(i);
    const Matrix<F>& a2 = m2.action(i);
    if (a1.is_zero_matrix() && a2.is_zero_matrix()) continue;
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d1; ++c) {
        // (a2 X - X a1)(r, c) = 0
        Vector<F> row = zero_vector(field, unknowns);
        for (std::size_t k = 0; k < d2; ++k) row[idx(k, c)] += a2(r, k);
        for (std::size_t k = 0; k < d1; ++k) row[idx(r, k)] -= a1(k, c);
        if (!is_zero_vector(row)) eqs.push_back(std::move(row));
      }
  }
  std::vector<Vector<F>> sol;
  if (eqs.empty()) {
    for (std::size_t k = 0; k < unknowns; ++k) sol.push_back(unit_vector(field, unknowns, k));
  } else {
    sol = kernel_basis(Matrix<F>::from_rows(field, unknowns, eqs));
  }
  std::vector<Matrix<F>> out;
  for (const auto& s : sol) out.push_back(Matrix<F>::from_entries(field, d2, d1, s));
  return out;
}

template <class F>
bool is_module_map(const LModule<F>& src, const LModule<F>& dst, const Matrix<F>& x) {
  if (x.rows() != dst.dim() || x.cols() != src.dim()) return false;
  for (std::size_t i = 0; i < src.algebra().dim(); ++i)
    if (dst.action(i) * x != x * src.action(i)) return false;
  return true;
}

template <class F>
struct ModuleIsomorphism {
  std::optional<Matrix<F>> map;  // invertible equivariant map M1 -> M2
  Status status = Status::Certified;
  std::string reason;
};

/// Searches the hom space for an invertible element. det(sum t_k X_k) has degree
/// at most d in each t_k, so it is nonzero somewhere on S^h for any S of size
/// d+1 if it is nonzero at all; the grid search is exact when S^h is small enough.
template <class F>
ModuleIsomorphism<F> module_isomorphism(const LModule<F>& m1, const LModule<F>& m2,
                                        std::uint64_t grid_limit = 200000) {
  const F& field = m1.field();
  const std::size_t d = m1.dim();
  if (d != m2.dim()) return {std::nullopt, Status::Certified, "dimensions differ"};
  if (d == 0) return {Matrix<F>(field, 0, 0), Status::Certified, "zero modules"};
  if (m1.action() == m2.action() && m1.algebra() == m2.algebra())
    return {Matrix<F>::identity(field, d), Status::Certified, "identical actions"};
  std::vector<Matrix<F>> hom = hom_space(m1, m2);
  const std::size_t h = hom.size();
  if (h == 0) return {std::nullopt, Status::Certified, "no nonzero homomorphism"};
  for (const auto& x : hom)
    if (!is_zero(determinant(x))) return {x, Status::Certified, "invertible basis homomorphism"};
  std::uint64_t s = d + 1;
  if constexpr (F::finite) s = std::min<std::uint64_t>(s, field.size());
  const std::uint64_t total = bounded_power(s, h, grid_limit);
  auto combo = [&](const std::vector<std::uint64_t>& t) {
    Matrix<F> x(field, d, d);
    for (std::size_t k = 0; k < h; ++k)
      if (t[k] != 0) x = x + hom[k].scaled(field.from_int(static_cast<long long>(t[k])));
    return x;
  };
  if (total <= grid_limit) {
    std::vector<std::uint64_t> t(h, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t x = c;
      for (std::size_t k = 0; k < h; ++k, x /= s) t[k] = x % s;
      Matrix<F> m = combo(t);
      if (!is_zero(determinant(m))) return {m, Status::Certified, "invertible grid combination"};
    }
    return {std::nullopt, Status::Certified, "determinant vanishes on a grid forcing it to be zero"};
  }
  std::mt19937_64 gen(0x5eedu);
  std::vector<std::uint64_t> t(h, 0);
  for (int trial = 0; trial < 5000; ++trial) {
    for (auto& v : t) v = gen() % s;
    Matrix<F> m = combo(t);
    if (!is_zero(determinant(m))) return {m, Status::Certified, "invertible sampled combination"};
  }
  return {std::nullopt, Status::Heuristic, "every sampled combination of the hom space was singular"};
}

template <class F>
struct ModuleSocle {
  Subspace<F> socle;
  std::vector<Subspace<F>> summands;           // irreducible, direct sum is the socle
  std::vector<std::size_t> component;          // homogeneous component index of each summand
  std::vector<std::size_t> multiplicity;       // per component
  Status status = Status::Certified;
  std::string reason;
};

namespace detail {

inline Subspace<RationalField> socle_space(const LModule<RationalField>& m) {
  using F = RationalField;
  const std::size_t d = m.dim();
  const RationalField& q = m.field();
  // enveloping associative algebra, matrices flattened to vectors
  Subspace<F> env(q, d * d);
  std::vector<Matrix<F>> elems;
  auto add_elem = [&](const Matrix<F>& x) {
    if (env.insert(x.entries())) {
      elems.push_back(x);
      return true;
    }
    return false;
  };
  add_elem(Matrix<F>::identity(q, d));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : m.action()) add_elem(g * elems[k]);
  // Dickson: the radical is the kernel of the trace form
  const std::size_t a = elems.size();
  Matrix<F> form(q, a, a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i; j < a; ++j) form(i, j) = form(j, i) = (elems[i] * elems[j]).trace();
  std::vector<Vector<F>> rows;
  for (const auto& c : kernel_basis(form)) {
    Matrix<F> j(q, d, d);
    for (std::size_t i = 0; i < a; ++i)
      if (!is_zero(c[i])) j = j + elems[i].scaled(c[i]);
    for (std::size_t r = 0; r < d; ++r) rows.push_back(j.row(r));
  }
  if (rows.empty()) return Subspace<F>::full(q, d);
  return nullspace(Matrix<F>::from_rows(q, d, rows));
}

inline Subspace<PrimeField> socle_space(const LModule<PrimeField>& m) {
  // the spins that are minimal among all spins are exactly the irreducible submodules
  std::vector<Subspace<PrimeField>> spins;
  for_each_projective_point(m.field(), m.dim(), [&](const Vector<PrimeField>& v) {
    Subspace<PrimeField> s = spin(m, v);
    for (const auto& t : spins)
      if (t == s) return false;
    spins.push_back(std::move(s));
    return false;
  }, "socle enumeration");
  Subspace<PrimeField> soc(m.field(), m.dim());
  for (const auto& s : spins) {
    bool minimal = true;
    for (const auto& t : spins)
      if (t.dim() < s.dim() && s.contains(t)) {
        minimal = false;
        break;
      }
    if (minimal)
      for (const auto& r : s.basis()) soc.insert(r);
  }
  return soc;
}

}  // namespace detail

/// Socle of M with a decomposition into irreducible summands grouped by
/// isomorphism type. A component of multiplicity 1 is the unique submodule of
/// its type; with higher multiplicity the summands are one choice among many.
template <class F>
ModuleSocle<F> module_socle(const LModule<F>& m) {
  ModuleSocle<F> out{detail::socle_space(m), {}, {}, {}, Status::Certified, ""};
  const Subspace<F>& soc = out.socle;
  if (soc.is_zero()) return out;
  LModule<F> soc_mod = m.restrict(soc);
  std::vector<Subspace<F>> types;  // one irreducible of each type found
  Subspace<F> covered(m.field(), m.dim());
  while (!(covered == soc)) {
    // sum of the components of types not yet seen
    Subspace<F> rest = soc;
    for (const auto& w : types) {
      std::vector<Vector<F>> rows;
      for (const auto& x : hom_space(soc_mod, m.restrict(w)))
        for (std::size_t r = 0; r < x.rows(); ++r) rows.push_back(x.row(r));
      if (rows.empty()) continue;
      Subspace<F> ker(m.field(), m.dim());
      for (const auto& c : kernel_basis(Matrix<F>::from_rows(m.field(), soc.dim(), rows))) ker.insert(soc.combine(c));
      rest = subspace_intersect(rest, ker);
    }
    IrreducibleSubmodule<F> w = find_irreducible(m, rest);
    if (w.status == Status::Heuristic) {
      out.status = Status::Heuristic;
      out.reason = w.reason;
    }
    const std::size_t comp = types.size();
    types.push_back(w.space);
    std::size_t mult = 1;
    for (const auto& r : w.space.basis()) covered.insert(r);
    out.summands.push_back(w.space);
    out.component.push_back(comp);
    for (const auto& x : hom_space(m.restrict(w.space), m)) {
      Subspace<F> img(m.field(), m.dim());
      for (std::size_t c = 0; c < x.cols(); ++c) img.insert(x.col(c));
      if (img.is_zero() || covered.contains(img)) continue;
      // images of an irreducible are irreducible, so this one meets the sum trivially
      for (const auto& r : img.basis()) covered.insert(r);
      out.summands.push_back(std::move(img));
      out.component.push_back(comp);
      ++mult;
    }
    out.multiplicity.push_back(mult);
  }
  return out;
}

template <class F>
struct SocleInfo {
  std::vector<Subspace<F>> minimals;       // minimal ideals of L/I lifted to L; their sum is soc
  std::vector<bool> abelian;               // per minimal
  std::vector<std::size_t> multiplicity;   // multiplicity of each minimal's isomorphism type
  Subspace<F> soc, asoc;                   // lifted; both contain I
  Status status = Status::Certified;
  std::string reason;

  /// True when the list is every minimal ideal of L/I (all multiplicities 1).
  bool complete() const {
    for (auto m : multiplicity)
      if (m != 1) return false;
    return true;
  }
};

/// Minimal ideals of L/I, the socle and the abelian socle, all lifted to L.
template <class F>
SocleInfo<F> socle_and_minimal_ideals(const LieAlgebra<F>& l, const Subspace<F>& ideal) {
  LModule<F> m = factor_module(l, l.whole(), ideal);
  QuotientCoords<F> qc(l.whole(), ideal);
  ModuleSocle<F> ms = module_socle(m);
  SocleInfo<F> out{{}, {}, {}, qc.lift(ms.socle), ideal, ms.status, ms.reason};
  for (std::size_t k = 0; k < ms.summands.size(); ++k) {
    Subspace<F> w = qc.lift(ms.summands[k]);
    bool ab = ideal.contains(bracket_spaces(l, w, w));
    out.minimals.push_back(w);
    out.abelian.push_back(ab);
    out.multiplicity.push_back(ms.multiplicity[ms.component[k]]);
    if (ab) out.asoc = subspace_sum(out.asoc, w);
  }
  return out;
}

template <class F>
struct SplittingCertificate {
  Subspace<F> complement;                 // K with K + A = L and K ∩ A = B
  Matrix<F> cochain;                      // phi: (L/A) -> (A/B), columns indexed by the section
  std::vector<Matrix<F>> cocycle_kernel;  // solutions of the homogeneous system
  std::vector<Vector<F>> section;         // lifts of the basis of L/A
  std::vector<Vector<F>> fiber;           // lifts of the basis of A/B
  Subspace<F> base;                       // B

  /// The complement attached to any solution phi of the coboundary system.
  Subspace<F> complement_for(const Matrix<F>& phi) const {
    Subspace<F> k = base;
    for (std::size_t i = 0; i < section.size(); ++i) {
      Vector<F> v = section[i];
      for (std::size_t r = 0; r < fiber.size(); ++r) axpy(v, phi(r, i), fiber[r]);
      k.insert(v);
    }
    return k;
  }
};

/// Decides whether the abelian factor A/B has a complement in L/B: a subalgebra
/// K of L with K + A = L and K ∩ A = B. The condition is linear in the cochain,
/// so a missing solution proves that no complement exists.
template <class F>
std::optional<SplittingCertificate<F>> split_abelian_extension(const LieAlgebra<F>& l, const Subspace<F>& a,
                                                               const Subspace<F>& b) {
  check_in(l, a);
  check_in(l, b);
  if (!a.contains(b)) throw PreconditionError("split_abelian_extension: B is not contained in A");
  if (!is_ideal(l, a) || !is_ideal(l, b)) throw PreconditionError("split_abelian_extension: A and B must be ideals");
  if (!b.contains(bracket_spaces(l, a, a))) throw PreconditionError("split_abelian_extension: A/B is not abelian");
  const F& field = l.field();
  QuotientCoords<F> top(l.whole(), a);
  QuotientCoords<F> fib(a, b);
  const std::size_t m = top.dim(), d = fib.dim();
  const auto& s = top.lifts();

  std::vector<Matrix<F>> x;  // action of s_i on A/B
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vector<F>> cols;
    for (const auto& v : fib.lifts()) cols.push_back(fib.project(l.bracket(s[i], v)));
    x.push_back(Matrix<F>::from_columns(field, d, cols));
  }
  const std::size_t unknowns = d * m;  // phi(r, k) at index k*d + r
  std::vector<Vector<F>> rows;
  std::vector<typename F::Element> rhs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector<F> br = l.bracket(s[i], s[j]);
      Vector<F> qij = top.project(br);
      Vector<F> aij = sub(br, top.lift(qij));
      Vector<F> g = fib.project(aij);
      for (std::size_t r = 0; r < d; ++r) {
        Vector<F> row = zero_vector(field, unknowns);
        for (std::size_t c = 0; c < d; ++c) {
          row[j * d + c] += x[i](r, c);
          row[i * d + c] -= x[j](r, c);
        }
        for (std::size_t k = 0; k < m; ++k) row[k * d + r] -= qij[k];
        rows.push_back(std::move(row));
        rhs.push_back(-g[r]);
      }
    }
  Vector<F> phi_vec = zero_vector(field, unknowns);
  std::vector<Vector<F>> kernel;
  if (unknowns > 0) {
    if (rows.empty()) {
      for (std::size_t k = 0; k < unknowns; ++k) kernel.push_back(unit_vector(field, unknowns, k));
    } else {
      Matrix<F> sys = Matrix<F>::from_rows(field, unknowns, rows);
      auto sol = solve(sys, rhs);
      if (!sol) return std::nullopt;
      phi_vec = *sol;
      kernel = kernel_basis(sys);
    }
  }
  auto as_matrix = [&](const Vector<F>& v) {
    Matrix<F> p(field, d, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t r = 0; r < d; ++r) p(r, k) = v[k * d + r];
    return p;
  };
  SplittingCertificate<F> cert{Subspace<F>(field, l.dim()), as_matrix(phi_vec), {}, s, fib.lifts(), b};
  for (const auto& k : kernel) cert.cocycle_kernel.push_back(as_matrix(k));
  cert.complement = cert.complement_for(cert.cochain);
  const Subspace<F>& k = cert.complement;
  if (!is_subalgebra(l, k) || !(subspace_intersect(k, a) == b) || !subspace_sum(k, a).is_full())
    throw CertificationFailure("split_abelian_extension: computed complement fails verification");
  return cert;
}

}  // namespace liecrown
