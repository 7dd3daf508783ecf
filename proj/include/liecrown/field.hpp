#pragma once
// Exact scalar fields: the rationals (GMP) and prime fields GF(p), p < 2^16.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>

#include "liecrown/error.hpp"

namespace liecrown {

using Rational = mpq_class;

/// Residue class modulo a small prime. The modulus travels with the value so
/// that elements are self-contained; a default-constructed element is unusable
/// until assigned from a field.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t p, std::int64_t v) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return Fp(p_, t);
  }

 private:
  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

struct RationalField {
  using Element = Rational;
  static constexpr bool finite = false;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long n) const { return Element(static_cast<long>(n)); }
  unsigned characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  /// Parses "n" or "n/d" into a canonical (lowest-terms) rational.
  Element parse(const std::string& s) const {
    Element r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
  std::string format(const Element& x) const { return x.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using Element = Fp;
  static constexpr bool finite = true;
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= kMaxModulus || !is_prime(p))
      throw IncompatibleField("GF(p) requires a prime 2 <= p < 65536, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }
  Element zero() const { return Fp(p_, 0); }
  Element one() const { return Fp(p_, 1); }
  Element from_int(long long n) const { return Fp(p_, n); }
  unsigned characteristic() const { return p_; }
  std::uint32_t size() const { return p_; }
  /// The k-th field element, k in [0, p).
  Element element(std::uint32_t k) const { return Fp(p_, k); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element parse(const std::string& s) const {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw Error("malformed residue '" + s + "'");
    }
    if (pos != s.size()) throw Error("malformed residue '" + s + "'");
    return from_int(v);
  }
  std::string format(const Element& x) const { return std::to_string(x.value()); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// Runtime description of a field, as it appears in files and on the command line.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);
    (void)check;
    return {Kind::PrimeField, p};
  }

  /// Accepts "q", "Q", "gf3", "GF3", "gf(3)".
  static FieldSpec parse(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "rationals") return rationals();
    if (s.rfind("gf", 0) == 0) {
      std::string digits;
      for (char c : s.substr(2))
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
        else if (c != '(' && c != ')') throw IncompatibleField("bad field spec '" + s + "'");
      if (digits.empty() || digits.size() > 6) throw IncompatibleField("bad field spec '" + s + "'");
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw IncompatibleField("bad field spec '" + s + "'");
  }

  bool finite() const { return kind == Kind::PrimeField; }
  unsigned characteristic() const { return finite() ? p : 0; }
  std::string to_string() const { return finite() ? "GF(" + std::to_string(p) + ")" : "Q"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.modulus()); }

}  // namespace liecrown
