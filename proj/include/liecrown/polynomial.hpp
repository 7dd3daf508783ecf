#pragma once
// Univariate polynomials over Q: characteristic polynomials and the small
// amount of factorization needed to certify irreducible factors (rational
// roots of any degree, quadratic splitting of quartics by Kronecker's method).

#include <cstddef>
#include <optional>
#include <vector>

#include "liecrown/matrix.hpp"

namespace liecrown {

/// Coefficients from the constant term upward; no trailing zeros except for the zero polynomial.
using RationalPoly = std::vector<Rational>;

inline void trim(RationalPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

inline std::size_t degree(const RationalPoly& p) { return p.empty() ? 0 : p.size() - 1; }

inline Rational evaluate(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly& b) {
  trim(a);
  const std::size_t db = degree(b);
  if (a.size() < b.size()) return {RationalPoly{0}, a};
  RationalPoly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = a.size(); k-- > db;) {
    Rational c = a[k] / b[db];
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  a.resize(db == 0 ? 1 : db);
  trim(a);
  trim(q);
  return {q, a};
}

inline bool is_zero_poly(const RationalPoly& p) {
  for (const auto& c : p)
    if (sgn(c) != 0) return false;
  return true;
}

/// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier (characteristic 0 only).
inline RationalPoly characteristic_polynomial(const Matrix<RationalField>& a) {
  const std::size_t n = a.rows();
  RationalField q;
  RationalPoly c(n + 1, Rational(0));
  c[n] = 1;
  Matrix<RationalField> m(q, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + Matrix<RationalField>::identity(q, n).scaled(c[n - k + 1]);
    Rational t = (a * m).trace();
    c[n - k] = -t / Rational(static_cast<long>(k));
  }
  return c;
}

/// p(A) by Horner's rule.
inline Matrix<RationalField> evaluate(const RationalPoly& p, const Matrix<RationalField>& a) {
  RationalField q;
  Matrix<RationalField> acc(q, a.rows(), a.cols());
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + Matrix<RationalField>::identity(q, a.rows()).scaled(p[k]);
  return acc;
}

namespace detail {

/// Primitive integer multiple of p.
inline std::vector<mpz_class> integer_coefficients(const RationalPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_class v = mpz_class(c.get_num()) * (l / mpz_class(c.get_den()));
    z.push_back(v);
    g = gcd(g, v);
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

/// Positive divisors of |n|, or nullopt when |n| is too large to factor by trial division.
inline std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

struct RationalFactorization {
  std::vector<RationalPoly> irreducible;  // monic factors proven irreducible over Q
  RationalPoly unresolved{Rational(1)};   // leftover of degree >= 5 (or too large to factor)
  bool complete() const { return degree(unresolved) == 0; }
};

/// Splits off rational roots; a cofactor of degree <= 3 without rational roots is
/// irreducible, and a quartic one is tested for a quadratic factor.
inline RationalFactorization factor_small(RationalPoly p) {
  trim(p);
  RationalFactorization out;
  if (degree(p) == 0) return out;
  // rational roots, with multiplicity
  bool progress = true;
  while (progress && degree(p) > 0) {
    progress = false;
    if (sgn(p[0]) == 0) {
      out.irreducible.push_back({Rational(0), Rational(1)});
      p = divmod(p, {Rational(0), Rational(1)}).first;
      progress = true;
      continue;
    }
    auto z = detail::integer_coefficients(p);
    auto num = detail::divisors(z.front());
    auto den = detail::divisors(z.back());
    if (!num || !den) break;
    for (const auto& a : *num) {
      for (const auto& b : *den) {
        for (int s : {1, -1}) {
          Rational r(mpz_class(a * s), b);
          r.canonicalize();
          if (sgn(evaluate(p, r)) == 0) {
            out.irreducible.push_back({Rational(-r), Rational(1)});
            p = divmod(p, {Rational(-r), Rational(1)}).first;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  const std::size_t d = degree(p);
  auto monic = [](RationalPoly f) {
    Rational lead = f.back();
    for (auto& c : f) c /= lead;
    return f;
  };
  if (d == 0) return out;
  if (d <= 3 && sgn(p[0]) != 0) {
    // no rational roots were left to find only if the root search ran to completion
    auto z = detail::integer_coefficients(p);
    if (detail::divisors(z.front()) && detail::divisors(z.back())) {
      out.irreducible.push_back(monic(p));
      return out;
    }
  }
  if (d == 4) {
    auto z = detail::integer_coefficients(p);
    auto at = [&](long x) {
      mpz_class acc = 0;
      for (std::size_t k = z.size(); k-- > 0;) acc = acc * x + z[k];
      return acc;
    };
    auto d0 = detail::divisors(at(0)), d1 = detail::divisors(at(1)), d2 = detail::divisors(at(-1));
    if (d0 && d1 && d2 && detail::divisors(z.back())) {
      for (const auto& v0 : *d0)
        for (const auto& u1 : *d1)
          for (int s1 : {1, -1})
            for (const auto& u2 : *d2)
              for (int s2 : {1, -1}) {
                mpz_class v1 = u1 * s1, v2 = u2 * s2;
                // g(t) = a t^2 + b t + c with g(0)=v0, g(1)=v1, g(-1)=v2
                mpz_class sum = v1 + v2 - 2 * v0, diff = v1 - v2;
                if (sum % 2 != 0 || diff % 2 != 0) continue;
                mpz_class a = sum / 2, b = diff / 2;
                if (a == 0) continue;
                RationalPoly g{Rational(v0), Rational(b), Rational(a)};
                auto [q, r] = divmod(p, g);
                if (is_zero_poly(r)) {
                  out.irreducible.push_back(monic(g));
                  out.irreducible.push_back(monic(q));
                  return out;
                }
              }
      out.irreducible.push_back(monic(p));
      return out;
    }
  }
  out.unresolved = p;
  return out;
}

}  // namespace liecrown
