#pragma once
// Ground truth over small prime fields by exhaustive enumeration of subspaces.
// Everything here follows the definitions directly and shares no decision
// logic with the analytic code paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecrown/constructions.hpp"
#include "liecrown/modrep.hpp"
#include "liecrown/primitive_types.hpp"

namespace liecrown::oracle {

using GF = PrimeField;
using GFAlgebra = LieAlgebra<GF>;
using GFSpace = Subspace<GF>;

struct EnumBudget {
  std::uint64_t max_subspaces = 500000;
  std::uint32_t max_field_order = 4;
};

/// Number of subspaces of GF(p)^n, saturating at limit + 1.
inline std::uint64_t subspace_count(std::size_t n, std::uint64_t p, std::uint64_t limit) {
  const std::uint64_t cap = limit + 1;
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) { return std::min(cap, a + b); };
  auto sat_mul = [&](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > cap / b ? cap : std::min(cap, a * b);
  };
  // g[k] = Gaussian binomial [m, k]_p for the current m
  std::vector<std::uint64_t> g(n + 1, 0);
  g[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = m; k >= 1; --k) {
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk = sat_mul(pk, p);
      g[k] = sat_add(g[k - 1], sat_mul(pk, g[k]));
    }
  std::uint64_t total = 0;
  for (auto x : g) total = sat_add(total, x);
  return total;
}

inline void check_budget(const GF& field, std::size_t n, const EnumBudget& budget) {
  if (field.size() > budget.max_field_order)
    throw BudgetExceeded("oracle field order", field.size(), budget.max_field_order);
  std::uint64_t count = subspace_count(n, field.size(), budget.max_subspaces);
  if (count > budget.max_subspaces) throw BudgetExceeded("oracle subspace enumeration", count, budget.max_subspaces);
}

/// Calls f on every subspace of GF(p)^n, generated as RREF patterns: a pivot set
/// plus arbitrary entries right of each pivot outside pivot columns.
template <class Fn>
void for_each_subspace(const GF& field, std::size_t n, Fn&& f) {
  const std::uint64_t p = field.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_piv(n, false);
      for (auto c : piv) is_piv[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free.push_back({r, c});
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < free.size(); ++i) count *= p;
      for (std::uint64_t x = 0; x < count; ++x) {
        std::vector<Vector<GF>> rows(k, zero_vector(field, n));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = field.one();
        std::uint64_t y = x;
        for (const auto& [r, c] : free) {
          rows[r][c] = field.element(static_cast<std::uint32_t>(y % p));
          y /= p;
        }
        f(GFSpace::span(field, n, rows));
      }
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

/// Deterministic total order on subspaces: by dimension, then basis entries.
inline bool subspace_less(const GFSpace& a, const GFSpace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
      auto x = a.basis_vector(r)[c].value(), y = b.basis_vector(r)[c].value();
      if (x != y) return x < y;
    }
  return false;
}

inline void sort_unique(std::vector<GFSpace>& v) {
  std::sort(v.begin(), v.end(), subspace_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Structures {
  std::vector<GFSpace> subalgebras, ideals, maximal_subalgebras;
};

inline Structures enum_structures(const GFAlgebra& l, const EnumBudget& budget = {}) {
  check_budget(l.field(), l.dim(), budget);
  Structures s;
  for_each_subspace(l.field(), l.dim(), [&](const GFSpace& u) {
    if (!is_subalgebra(l, u)) return;
    s.subalgebras.push_back(u);
    if (is_ideal(l, u)) s.ideals.push_back(u);
  });
  std::vector<GFSpace> by_dim = s.subalgebras;
  std::stable_sort(by_dim.begin(), by_dim.end(), [](const GFSpace& a, const GFSpace& b) { return a.dim() > b.dim(); });
  for (const auto& m : by_dim) {
    if (m.dim() == l.dim()) continue;
    bool inside = false;
    for (const auto& big : s.maximal_subalgebras)
      if (big.contains(m)) {
        inside = true;
        break;
      }
    if (!inside) s.maximal_subalgebras.push_back(m);
  }
  sort_unique(s.subalgebras);
  sort_unique(s.ideals);
  sort_unique(s.maximal_subalgebras);
  return s;
}

inline GFSpace intersect_all(const GFAlgebra& l, const std::vector<GFSpace>& spaces) {
  GFSpace out = l.whole();
  for (const auto& s : spaces) out = subspace_intersect(out, s);
  return out;
}

struct FrattiniObjects {
  GFSpace frattini_subalgebra;  // intersection of the maximal subalgebras
  GFSpace frattini_ideal;       // its core
};

inline FrattiniObjects frattini_objects(const GFAlgebra& l, const Structures& s) {
  GFSpace inter = s.maximal_subalgebras.empty() ? l.zero_space() : intersect_all(l, s.maximal_subalgebras);
  return {inter, core(l, inter)};
}

inline FrattiniObjects frattini_objects(const GFAlgebra& l, const EnumBudget& budget = {}) {
  return frattini_objects(l, enum_structures(l, budget));
}

/// Ideals D of L that are minimal among ideals strictly containing N.
inline std::vector<GFSpace> minimal_ideals_over(const Structures& s, const GFSpace& n) {
  std::vector<GFSpace> above;
  for (const auto& d : s.ideals)
    if (d.dim() > n.dim() && d.contains(n)) above.push_back(d);
  std::vector<GFSpace> out;
  for (const auto& d : above) {
    bool minimal = true;
    for (const auto& e : above)
      if (e.dim() < d.dim() && d.contains(e)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(d);
  }
  return out;
}

/// Type of the primitive algebra L/N, read off its minimal ideals (N must be a
/// core of a maximal subalgebra).
inline PrimitiveType type_over(const GFAlgebra& l, const Structures& s, const GFSpace& n) {
  auto mins = minimal_ideals_over(s, n);
  if (mins.size() == 1)
    return n.contains(bracket_spaces(l, mins[0], mins[0])) ? PrimitiveType::Type1 : PrimitiveType::Type2;
  if (mins.size() == 2) return PrimitiveType::Type3;
  return PrimitiveType::Undecided;
}

inline PrimitiveWitness<GF> primitive_bf(const GFAlgebra& l, const Structures& s) {
  PrimitiveWitness<GF> w;
  w.minimal_ideals = minimal_ideals_over(s, l.zero_space());
  for (const auto& m : s.maximal_subalgebras)
    if (core(l, m).is_zero()) {
      w.core_free_maximal = m;
      break;
    }
  if (!w.core_free_maximal) {
    w.verdict = PrimitiveType::NotPrimitive;
    w.reason = "no maximal subalgebra is core-free";
    return w;
  }
  w.verdict = type_over(l, s, l.zero_space());
  if (w.verdict == PrimitiveType::Type3) {
    const auto& u = *w.core_free_maximal;
    if (subspace_intersect(u, w.minimal_ideals[0]).is_zero() && subspace_intersect(u, w.minimal_ideals[1]).is_zero())
      w.common_complement = u;
  }
  if (w.verdict == PrimitiveType::Undecided) w.reason = "primitive but not one or two minimal ideals";
  else w.reason = "core-free maximal subalgebra found by enumeration";
  return w;
}

inline PrimitiveWitness<GF> primitive_bf(const GFAlgebra& l, const EnumBudget& budget = {}) {
  return primitive_bf(l, enum_structures(l, budget));
}

/// Whether A1/B1 and A2/B2 are isomorphic L-modules, by enumerating all matrices.
inline bool l_isomorphic_bf(const GFAlgebra& l, const GFSpace& a1, const GFSpace& b1, const GFSpace& a2,
                            const GFSpace& b2, std::uint64_t limit = kEnumerationLimit) {
  LModule<GF> m1 = factor_module(l, a1, b1), m2 = factor_module(l, a2, b2);
  const std::size_t d = m1.dim();
  if (d != m2.dim()) return false;
  if (d == 0) return true;
  const GF& field = l.field();
  const std::uint64_t total = bounded_power(field.size(), d * d, limit);
  if (total > limit) throw BudgetExceeded("oracle matrix enumeration", total, limit);
  Vector<GF> entries(d * d, field.zero());
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t k = 0; k < d * d; ++k, x /= field.size())
      entries[k] = field.element(static_cast<std::uint32_t>(x % field.size()));
    Matrix<GF> t = Matrix<GF>::from_entries(field, d, d, entries);
    if (is_module_map(m1, m2, t) && !is_zero(determinant(t))) return true;
  }
  return false;
}

struct ChiefFactorBF {
  GFSpace a, b;
};

/// Every chief factor of L: pairs of ideals B < A with no ideal strictly between.
inline std::vector<ChiefFactorBF> all_chief_factors(const Structures& s) {
  std::vector<ChiefFactorBF> out;
  for (const auto& a : s.ideals)
    for (const auto& b : s.ideals) {
      if (b.dim() >= a.dim() || !a.contains(b)) continue;
      bool cover = true;
      for (const auto& m : s.ideals)
        if (m.dim() > b.dim() && m.dim() < a.dim() && a.contains(m) && m.contains(b)) {
          cover = false;
          break;
        }
      if (cover) out.push_back({a, b});
    }
  return out;
}

inline bool supplements(const GFSpace& m, const ChiefFactorBF& f) { return !m.contains(f.a) && m.contains(f.b); }

/// L-connectedness from the definition: L-isomorphic, or realized as the two
/// minimal ideals of a type-3 primitive quotient L/N (N a core of a maximal subalgebra).
inline bool l_connected_bf(const GFAlgebra& l, const Structures& s, const ChiefFactorBF& f1, const ChiefFactorBF& f2) {
  if (l_isomorphic_bf(l, f1.a, f1.b, f2.a, f2.b)) return true;
  std::vector<GFSpace> cores;
  for (const auto& m : s.maximal_subalgebras) cores.push_back(core(l, m));
  sort_unique(cores);
  for (const auto& n : cores) {
    if (type_over(l, s, n) != PrimitiveType::Type3) continue;
    auto mins = minimal_ideals_over(s, n);
    for (int swap = 0; swap < 2; ++swap) {
      const auto& d1 = mins[swap];
      const auto& d2 = mins[1 - swap];
      if (l_isomorphic_bf(l, d1, n, f1.a, f1.b) && l_isomorphic_bf(l, d2, n, f2.a, f2.b)) return true;
    }
  }
  return false;
}

struct CrownIntersections {
  GFSpace j, j1, j2, j3;  // intersections over the four families
};

/// The four intersections attached to the class of a supplemented chief factor,
/// each computed literally from the enumerated maximal subalgebras.
inline CrownIntersections crown_intersections(const GFAlgebra& l, const Structures& s, const ChiefFactorBF& f) {
  auto factors = all_chief_factors(s);
  std::vector<ChiefFactorBF> connected, isomorphic;
  for (const auto& e : factors) {
    if (l_connected_bf(l, s, e, f)) connected.push_back(e);
    if (l_isomorphic_bf(l, e.a, e.b, f.a, f.b)) isomorphic.push_back(e);
  }
  std::vector<GFSpace> j, j1, j2, j3;
  for (const auto& m : s.maximal_subalgebras) {
    GFSpace ml = core(l, m);
    auto mins = minimal_ideals_over(s, ml);
    const bool monolithic = mins.size() == 1;
    for (const auto& e : connected) {
      if (!supplements(m, e)) continue;
      j2.push_back(ml);
      if (monolithic) {
        j.push_back(ml);
        // the precrown (E + M_L)/M_L is the socle of L/M_L; its denominator is M_L
        GFSpace d = subspace_sum(e.a, ml);
        if (d == mins[0]) j1.push_back(ml);
      }
    }
    for (const auto& e : isomorphic)
      if (supplements(m, e)) j3.push_back(ml);
  }
  return {intersect_all(l, j), intersect_all(l, j1), intersect_all(l, j2), intersect_all(l, j3)};
}

/// Intersection of the cores of the maximal subalgebras of type 2 or 3.
inline GFSpace nonabelian_core_intersection(const GFAlgebra& l, const Structures& s) {
  std::vector<GFSpace> cores;
  for (const auto& m : s.maximal_subalgebras) {
    GFSpace ml = core(l, m);
    auto t = type_over(l, s, ml);
    if (t == PrimitiveType::Type2 || t == PrimitiveType::Type3) cores.push_back(ml);
  }
  return intersect_all(l, cores);
}

struct PrefrattiniBF {
  std::vector<GFSpace> subalgebras;           // every prefrattini subalgebra, sorted
  std::vector<std::vector<GFSpace>> m_sets;   // per index i = 1..n of the chain
};

/// Prefrattini subalgebras from a chief series chain 0 = L_0 < ... < L_n = L:
/// all intersections over i in I of some M_i, where M_i ranges over the maximal
/// subalgebras containing L_{i-1} but not L_i and I is the set of i with M_i nonempty.
inline PrefrattiniBF prefrattini_bf(const GFAlgebra& l, const Structures& s, const std::vector<GFSpace>& chain,
                                    std::uint64_t limit = kEnumerationLimit) {
  PrefrattiniBF out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::vector<GFSpace> mi;
    for (const auto& m : s.maximal_subalgebras)
      if (m.contains(chain[i - 1]) && !m.contains(chain[i])) mi.push_back(m);
    out.m_sets.push_back(std::move(mi));
  }
  std::vector<GFSpace> partial{l.whole()};
  for (const auto& mi : out.m_sets) {
    if (mi.empty()) continue;
    std::vector<GFSpace> next;
    for (const auto& p : partial)
      for (const auto& m : mi) next.push_back(subspace_intersect(p, m));
    sort_unique(next);
    if (next.size() > limit) throw BudgetExceeded("prefrattini choice enumeration", next.size(), limit);
    partial = std::move(next);
  }
  out.subalgebras = std::move(partial);
  return out;
}

}  // namespace liecrown::oracle
