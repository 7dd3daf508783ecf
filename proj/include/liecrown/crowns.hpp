#pragma once
// Precrowns, crowns, crown complements and their conjugacy, prefrattini
// subalgebras, and the cover/avoid profile of a crown complement.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecrown/chieffac.hpp"

namespace liecrown {

template <class F>
struct PrecrownFamily {
  Subspace<F> numerator;        // C_L(A/B) for abelian factors, A + C_L(A/B) otherwise
  Subspace<F> base;             // one denominator N
  std::vector<Matrix<F>> homs;  // basis of Hom_L(N/B, A/B); every denominator is the graph of one of them over B
  Subspace<F> intersection;     // intersection of all denominators
  bool abelian = false;
};

/// The precrowns attached to a supplemented chief factor. For an abelian factor
/// the denominators are the ideals N with N ∩ A = B and N + A = C_L(A/B); they
/// form an affine family over Hom_L(N0/B, A/B), so their intersection is B plus
/// the common kernel of those homomorphisms.
template <class F>
PrecrownFamily<F> precrowns_of_factor(const LieAlgebra<F>& l, const ChiefFactor<F>& f) {
  if (!f.supplemented) throw PreconditionError("precrowns_of_factor: factor is not supplemented");
  const Subspace<F>& c = f.centralizer;
  if (!f.abelian) {
    return {subspace_sum(f.a, c), c, {}, c, false};
  }
  auto cert = split_abelian_extension(l, f.a, f.b);
  if (!cert) throw CertificationFailure("precrowns_of_factor: supplemented abelian factor has no complement");
  Subspace<F> n0 = subspace_intersect(c, cert->complement);
  if (!is_ideal(l, n0) || !(subspace_intersect(n0, f.a) == f.b) || !(subspace_sum(n0, f.a) == c))
    throw CertificationFailure("precrowns_of_factor: base denominator is not an ideal complement of A/B in C");
  PrecrownFamily<F> out{c, n0, {}, n0, true};
  if (n0 == f.b) return out;
  LModule<F> src = factor_module(l, n0, f.b), dst = factor_module(l, f.a, f.b);
  out.homs = hom_space(src, dst);
  if (out.homs.empty()) return out;
  std::vector<Vector<F>> rows;
  for (const auto& h : out.homs)
    for (std::size_t r = 0; r < h.rows(); ++r) rows.push_back(h.row(r));
  QuotientCoords<F> qc(n0, f.b);
  Subspace<F> common(l.field(), src.dim());
  for (const auto& k : kernel_basis(Matrix<F>::from_rows(l.field(), src.dim(), rows))) common.insert(k);
  out.intersection = qc.lift(common);
  return out;
}

/// The denominator N_phi = {n + phi(n)} for phi = sum t_k homs[k].
template <class F>
Subspace<F> precrown_denominator(const LieAlgebra<F>& l, const ChiefFactor<F>& f, const PrecrownFamily<F>& fam,
                                 const std::vector<typename F::Element>& t) {
  if (!fam.abelian || t.empty()) return fam.base;
  if (t.size() != fam.homs.size()) throw DimensionMismatch("precrown_denominator: wrong number of coefficients");
  QuotientCoords<F> src(fam.base, f.b), dst(f.a, f.b);
  Subspace<F> n = f.b;
  for (const auto& v : src.lifts()) {
    Vector<F> x = src.project(v), img = zero_vector(l.field(), dst.dim());
    for (std::size_t k = 0; k < t.size(); ++k) axpy(img, t[k], fam.homs[k].apply(x));
    n.insert(add(v, dst.lift(img)));
  }
  return n;
}

template <class F>
struct Crown {
  Subspace<F> c, r;
  std::size_t rank = 0;
  bool abelian = false;
  std::vector<std::size_t> members;  // supplemented factors of the series in the class
  ChiefSeries<F> series;
  Status status = Status::Certified;
  std::string reason;

  std::size_t representative() const { return members.front(); }
};

namespace detail {

/// Supplemented factors of s connected to factor f; undecided pairs set `undecided`.
template <class F>
std::vector<std::size_t> connected_members(const LieAlgebra<F>& l, const ChiefSeries<F>& s, const ChiefFactor<F>& f,
                                           std::string& undecided) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& g = s.factors[i];
    if (!g.supplemented || g.abelian != f.abelian) continue;
    auto c = l_connected(l, g, f);
    if (!c.decided) undecided = c.reason;
    if (c.value) out.push_back(i);
  }
  return out;
}

}  // namespace detail

/// The crown C/R of the class of a supplemented factor f, with R computed from
/// the factors of s in the class, then certified: Soc(L/R) = C/R, every minimal
/// ideal of L/R is connected to f, and dim C/R = rank * dim f.
template <class F>
Crown<F> crown_of_factor(const LieAlgebra<F>& l, const ChiefSeries<F>& s, const ChiefFactor<F>& f) {
  if (!f.supplemented) throw PreconditionError("crown_of_factor: factor is not supplemented");
  Crown<F> k{subspace_sum(f.a, f.centralizer), l.zero_space(), 0, f.abelian, {}, s};
  std::string undecided;
  k.members = detail::connected_members(l, s, f, undecided);
  if (k.members.empty()) throw CertificationFailure("crown_of_factor: the series has no factor in the class");
  k.r = k.c;
  for (auto i : k.members) k.r = subspace_intersect(k.r, precrowns_of_factor(l, s.factors[i]).intersection);
  k.rank = k.members.size();
  if (!undecided.empty()) {
    k.status = Status::Heuristic;
    k.reason = undecided;
  }

  SocleInfo<F> info = socle_and_minimal_ideals(l, k.r);
  if (!(info.soc == k.c)) throw CertificationFailure("crown_of_factor: Soc(L/R) differs from C/R");
  for (const auto& m : info.minimals) {
    auto g = classify_factor(l, m, k.r);
    auto conn = l_connected(l, g, f);
    if (!conn.value && conn.decided)
      throw CertificationFailure("crown_of_factor: a minimal ideal of L/R is not connected to the class");
  }
  if (k.c.dim() - k.r.dim() != k.rank * f.dim())
    throw CertificationFailure("crown_of_factor: dim C/R is not rank * dim of the factor");
  return k;
}

template <class F>
Crown<F> crown_of_factor(const LieAlgebra<F>& l, const ChiefFactor<F>& f) {
  return crown_of_factor(l, chief_series(l), f);
}

/// One crown per connectedness class of supplemented factors of the default
/// chief series. Distinct classes give distinct crowns; this is checked.
template <class F>
std::vector<Crown<F>> all_crowns(const LieAlgebra<F>& l, const ChiefSeries<F>& s) {
  std::vector<Crown<F>> out;
  std::vector<bool> seen(s.factors.size(), false);
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (!s.factors[i].supplemented || seen[i]) continue;
    Crown<F> k = crown_of_factor(l, s, s.factors[i]);
    for (auto j : k.members) seen[j] = true;
    for (const auto& other : out)
      if (other.c == k.c && other.r == k.r)
        throw CertificationFailure("all_crowns: two connectedness classes give the same crown");
    out.push_back(std::move(k));
  }
  return out;
}

template <class F>
std::vector<Crown<F>> all_crowns(const LieAlgebra<F>& l) {
  return all_crowns(l, chief_series(l));
}

/// A subalgebra K with K + C = L and K ∩ C = R, from the splitting test in L/R.
template <class F>
Subspace<F> crown_complement(const LieAlgebra<F>& l, const Crown<F>& k) {
  if (!is_solvable(l)) throw PreconditionError("crown_complement: L is not solvable");
  auto cert = split_abelian_extension(l, k.c, k.r);
  if (!cert) throw CertificationFailure("crown_complement: crown has no complement");
  const Subspace<F>& comp = cert->complement;
  if (!is_subalgebra(l, comp) || !subspace_sum(comp, k.c).is_full() || !(subspace_intersect(comp, k.c) == k.r))
    throw CertificationFailure("crown_complement: complement check failed");
  return comp;
}

/// Every complement of a crown over a finite field, at most `limit` of them.
template <class F>
std::vector<Subspace<F>> all_crown_complements(const LieAlgebra<F>& l, const Crown<F>& k,
                                               std::uint64_t limit = kEnumerationLimit) {
  static_assert(F::finite, "all_crown_complements needs a finite field");
  if (!is_solvable(l)) throw PreconditionError("all_crown_complements: L is not solvable");
  auto cert = split_abelian_extension(l, k.c, k.r);
  if (!cert) throw CertificationFailure("all_crown_complements: crown has no complement");
  const F& field = l.field();
  const std::size_t h = cert->cocycle_kernel.size();
  const std::uint64_t total = bounded_power(field.size(), h, limit);
  if (total > limit) throw BudgetExceeded("crown complements", total, limit);
  std::vector<Subspace<F>> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix<F> phi = cert->cochain;
    std::uint64_t x = code;
    for (std::size_t j = 0; j < h; ++j, x /= field.size())
      phi = phi + cert->cocycle_kernel[j].scaled(field.element(static_cast<std::uint32_t>(x % field.size())));
    out.push_back(cert->complement_for(phi));
  }
  oracle::sort_unique(out);
  return out;
}

namespace detail {

/// Some a in C with k + [a,k] in K2 for every k in K1, and (ad a)^2 L ⊆ R.
template <class F>
Vector<F> conjugating_element(const LieAlgebra<F>& l, const Subspace<F>& c, const Subspace<F>& r,
                              const Subspace<F>& k1, const Subspace<F>& k2) {
  if (k1 == k2) return l.zero();
  const std::size_t n = l.dim();
  std::vector<Vector<F>> cols;  // one column per basis vector of C, stacked over basis of K1
  Vector<F> rhs;
  std::vector<Vector<F>> blocks(c.dim());
  for (const auto& k : k1.basis()) {
    Vector<F> target = k2.reduce(k);
    for (auto& x : target) x = -x;
    rhs.insert(rhs.end(), target.begin(), target.end());
    for (std::size_t j = 0; j < c.dim(); ++j) {
      Vector<F> col = k2.reduce(l.bracket(c.basis_vector(j), k));
      blocks[j].insert(blocks[j].end(), col.begin(), col.end());
    }
  }
  for (auto& b : blocks) cols.push_back(std::move(b));
  Vector<F> a = l.zero();
  if (!cols.empty()) {
    auto sol = solve(Matrix<F>::from_columns(l.field(), rhs.size(), cols), rhs);
    if (!sol) throw CertificationFailure("complement_conjugator: no a in C conjugates K1 to K2");
    for (std::size_t j = 0; j < c.dim(); ++j) axpy(a, (*sol)[j], c.basis_vector(j));
  } else if (!is_zero_vector(rhs)) {
    throw CertificationFailure("complement_conjugator: no a in C conjugates K1 to K2");
  }
  Matrix<F> ad_a = l.ad(a), sq = ad_a * ad_a;
  for (std::size_t i = 0; i < n; ++i)
    if (!r.contains(sq.col(i))) throw CertificationFailure("complement_conjugator: (ad a)^2 is not zero modulo R");
  Subspace<F> img = r;
  for (const auto& k : k1.basis()) img.insert(add(k, l.bracket(a, k)));
  if (!(img == k2)) throw CertificationFailure("complement_conjugator: (1 + ad a)(K1) differs from K2");
  return a;
}

}  // namespace detail

/// a in C with (1 + ad a)(K1) = K2 modulo R, for two complements of the crown.
template <class F>
Vector<F> complement_conjugator(const LieAlgebra<F>& l, const Crown<F>& k, const Subspace<F>& k1,
                                const Subspace<F>& k2) {
  if (!is_solvable(l)) throw PreconditionError("complement_conjugator: L is not solvable");
  for (const auto* u : {&k1, &k2})
    if (!is_subalgebra(l, *u) || !subspace_sum(*u, k.c).is_full() || !(subspace_intersect(*u, k.c) == k.r))
      throw PreconditionError("complement_conjugator: argument is not a complement of the crown");
  return detail::conjugating_element(l, k.c, k.r, k1, k2);
}

template <class F>
struct PrefrattiniResult {
  Subspace<F> subalgebra;
  std::vector<Crown<F>> crowns;
  std::vector<Subspace<F>> complements;  // one per crown
};

/// Intersection of one complement per crown. Without a choice the canonical
/// complement of each crown is used.
template <class F>
PrefrattiniResult<F> prefrattini(const LieAlgebra<F>& l, const std::vector<std::optional<Subspace<F>>>& choice = {}) {
  if (!is_solvable(l)) throw PreconditionError("prefrattini: L is not solvable");
  PrefrattiniResult<F> out{l.whole(), all_crowns(l), {}};
  for (std::size_t i = 0; i < out.crowns.size(); ++i) {
    const auto& k = out.crowns[i];
    Subspace<F> comp = i < choice.size() && choice[i] ? *choice[i] : crown_complement(l, k);
    if (!is_subalgebra(l, comp) || !subspace_sum(comp, k.c).is_full() || !(subspace_intersect(comp, k.c) == k.r))
      throw PreconditionError("prefrattini: chosen subspace is not a complement of crown " + std::to_string(i));
    out.complements.push_back(comp);
    out.subalgebra = subspace_intersect(out.subalgebra, comp);
  }
  return out;
}

enum class CoverAvoid { Covers, Avoids };

inline const char* to_string(CoverAvoid t) { return t == CoverAvoid::Covers ? "covers" : "avoids"; }

/// Whether complement `comp` of crown k covers or avoids each factor of s.
/// Factors connected to the crown's class are avoided, the rest covered; a
/// mismatch raises CertificationFailure.
template <class F>
std::vector<CoverAvoid> cover_avoid_profile(const LieAlgebra<F>& l, const Crown<F>& k, const Subspace<F>& comp,
                                            const ChiefSeries<F>& s) {
  const ChiefFactor<F>& rep = k.series.factors[k.representative()];
  std::vector<CoverAvoid> out;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    bool covers = subspace_sum(f.b, comp).contains(f.a);
    bool avoids = subspace_intersect(comp, f.a) == subspace_intersect(comp, f.b);
    if (covers == avoids) throw CertificationFailure("cover_avoid_profile: factor " + std::to_string(i) +
                                                     " is neither covered nor avoided exactly once");
    bool in_class = f.supplemented && f.abelian == rep.abelian && l_connected(l, f, rep).value;
    if (avoids != in_class)
      throw CertificationFailure("cover_avoid_profile: factor " + std::to_string(i) + (avoids ? " avoided" : " covered") +
                                 " against the prediction");
    out.push_back(avoids ? CoverAvoid::Avoids : CoverAvoid::Covers);
  }
  return out;
}

/// Intersection of the denominators of the nonabelian crowns.
template <class F>
std::optional<Subspace<F>> nonabelian_crown_denominators(const std::vector<Crown<F>>& crowns) {
  std::optional<Subspace<F>> out;
  for (const auto& k : crowns) {
    if (k.abelian) continue;
    out = out ? subspace_intersect(*out, k.r) : k.r;
  }
  return out;
}

}  // namespace liecrown
