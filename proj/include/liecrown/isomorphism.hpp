#pragma once
// Bounded search for Lie algebra isomorphisms: invariants first, then
// backtracking over images of a small generating set.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liecrown/constructions.hpp"
#include "liecrown/modrep.hpp"

namespace liecrown {

template <class F>
struct AlgebraInvariants {
  std::size_t dim = 0;
  std::vector<std::size_t> derived, lower_central;
  std::size_t center = 0;
  std::size_t killing_rank = 0;

  friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

template <class F>
AlgebraInvariants<F> invariants(const LieAlgebra<F>& l) {
  AlgebraInvariants<F> inv;
  inv.dim = l.dim();
  auto cs = characteristic_series(l);
  for (const auto& s : cs.derived) inv.derived.push_back(s.dim());
  for (const auto& s : cs.lower_central) inv.lower_central.push_back(s.dim());
  inv.center = cs.center.dim();
  Matrix<F> k(l.field(), l.dim(), l.dim());
  std::vector<Matrix<F>> ads;
  for (std::size_t i = 0; i < l.dim(); ++i) ads.push_back(l.ad_basis(i));
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i; j < l.dim(); ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
  inv.killing_rank = rank(k);
  return inv;
}

template <class F>
struct AlgebraIsomorphism {
  std::optional<Matrix<F>> map;  // columns are images of the basis of the source
  Status status = Status::Certified;
  std::string reason;
};

namespace detail {

/// Ranks of (ad v)^k for k = 1..dim; preserved by isomorphisms.
template <class F>
std::vector<std::size_t> ad_profile(const LieAlgebra<F>& l, const Vector<F>& v) {
  std::vector<std::size_t> out;
  Matrix<F> a = l.ad(v), p = a;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    out.push_back(rank(p));
    if (out.back() == 0) break;
    p = p * a;
  }
  return out;
}

/// Graph of a partial homomorphism, grown by closing generator pairs under brackets.
template <class F>
class PartialMap {
 public:
  PartialMap(const LieAlgebra<F>& a, const LieAlgebra<F>& b)
      : a_(a), b_(b), graph_(a.field(), a.dim() + b.dim()), domain_(a.field(), a.dim()) {}

  /// Adds a generator with its image and closes; false when the map stops being well defined.
  bool add_generator(const Vector<F>& x, const Vector<F>& y) {
    gens_.push_back({x, y});
    std::vector<std::pair<Vector<F>, Vector<F>>> queue{{x, y}};
    if (!insert(x, y)) return false;
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      for (const auto& [g, h] : gens_) {
        Vector<F> bu = a_.bracket(g, u), bv = b_.bracket(h, v);
        std::size_t before = graph_.dim();
        if (!insert(bu, bv)) return false;
        if (graph_.dim() > before) queue.push_back({bu, bv});
      }
    }
    return true;
  }

  bool complete() const { return domain_.is_full(); }

  /// Matrix of the map once complete.
  Matrix<F> matrix() const {
    const std::size_t n = a_.dim(), m = b_.dim();
    Matrix<F> out(a_.field(), m, n);
    for (std::size_t r = 0; r < graph_.dim(); ++r) {
      const auto& row = graph_.basis_vector(r);
      std::size_t i = graph_.pivots()[r];
      for (std::size_t k = 0; k < m; ++k) out(k, i) = row[n + k];
    }
    return out;
  }

 private:
  bool insert(const Vector<F>& x, const Vector<F>& y) {
    Vector<F> xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    graph_.insert(xy);
    domain_.insert(x);
    return graph_.dim() == domain_.dim();
  }

  const LieAlgebra<F>& a_;
  const LieAlgebra<F>& b_;
  Subspace<F> graph_, domain_;
  std::vector<std::pair<Vector<F>, Vector<F>>> gens_;
};

/// A generating set of basis vectors of smallest size among subsets of size <= 3, else all of them.
template <class F>
std::vector<Vector<F>> small_generating_set(const LieAlgebra<F>& l) {
  const std::size_t n = l.dim();
  auto generates = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector<F>> vs;
    for (auto i : idx) vs.push_back(l.basis_vector(i));
    return subalgebra_closure(l, Subspace<F>::span(l.field(), n, vs)).is_full();
  };
  for (std::size_t size = 1; size <= std::min<std::size_t>(3, n); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (generates(idx)) {
        std::vector<Vector<F>> out;
        for (auto i : idx) out.push_back(l.basis_vector(i));
        return out;
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<Vector<F>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(l.basis_vector(i));
  return out;
}

}  // namespace detail

/// Searches for an isomorphism a -> b. Over GF(p) the candidate images are every
/// vector with a matching ad-rank profile, so a failed search is a proof; over Q
/// candidates come from a small integer box and a failed search is inconclusive.
template <class F>
AlgebraIsomorphism<F> algebra_isomorphism(const LieAlgebra<F>& a, const LieAlgebra<F>& b,
                                          std::uint64_t candidate_limit = 100000) {
  if (!(a.field() == b.field())) throw IncompatibleField("algebra_isomorphism: different fields");
  if (!(invariants(a) == invariants(b))) return {std::nullopt, Status::Certified, "invariants differ"};
  const std::size_t n = b.dim();
  if (n == 0) return {Matrix<F>(a.field(), 0, 0), Status::Certified, "zero algebras"};
  const F& field = a.field();

  // candidate pool in b
  std::vector<Vector<F>> pool;
  bool exhaustive = false;
  if constexpr (F::finite) {
    if (bounded_power(field.size(), n, candidate_limit) <= candidate_limit) {
      exhaustive = true;
      for_each_projective_point(field, n, [&](const Vector<F>& v) {
        for (std::uint32_t s = 1; s < field.size(); ++s) pool.push_back(scale(v, field.element(s)));
        return false;
      });
    }
  }
  if (!exhaustive) {
    long radius = bounded_power(5, n, candidate_limit) <= candidate_limit ? 2 : 1;
    const std::uint64_t width = static_cast<std::uint64_t>(2 * radius + 1);
    const std::uint64_t total = bounded_power(width, n, candidate_limit);
    for (std::uint64_t c = 0; c < std::min(total, candidate_limit); ++c) {
      Vector<F> v = zero_vector(field, n);
      std::uint64_t x = c;
      for (std::size_t k = 0; k < n; ++k, x /= width) v[k] = field.from_int(static_cast<long long>(x % width) - radius);
      if (!is_zero_vector(v)) pool.push_back(v);
    }
  }

  std::vector<Vector<F>> gens = detail::small_generating_set(a);
  std::vector<std::vector<Vector<F>>> cand(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto prof = detail::ad_profile(a, gens[g]);
    for (const auto& v : pool)
      if (detail::ad_profile(b, v) == prof) cand[g].push_back(v);
  }

  std::optional<Matrix<F>> found;
  std::function<void(std::size_t, const detail::PartialMap<F>&)> search = [&](std::size_t g,
                                                                               const detail::PartialMap<F>& pm) {
    if (found) return;
    if (g == gens.size()) {
      if (!pm.complete()) return;
      Matrix<F> m = pm.matrix();
      if (!is_zero(determinant(m)) && is_homomorphism(a, b, m)) found = m;
      return;
    }
    for (const auto& v : cand[g]) {
      detail::PartialMap<F> next = pm;
      if (next.add_generator(gens[g], v)) search(g + 1, next);
      if (found) return;
    }
  };
  search(0, detail::PartialMap<F>(a, b));
  if (found) return {found, Status::Certified, "bracket-preserving bijection found"};
  if (exhaustive) return {std::nullopt, Status::Certified, "no generator images extend to an isomorphism"};
  return {std::nullopt, Status::Heuristic, "no isomorphism among bounded integer candidates"};
}

}  // namespace liecrown
