#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kleinian {

/// Exponent / order value in {2, 3, ...} ∪ {∞, ∞̄}.
///
/// ∞ marks a parabolic relator (kept in Kleinian presentations), ∞̄ a
/// hyperbolic one (always dropped). Conventions:
///   ∞̄ > ∞ > k for every finite k,
///   ∞/d = ∞, ∞̄/d = ∞̄, and k/d only when d | k,
///   gcd(∞, n) = gcd(∞̄, n) = n, so gcd(t, 2) == 1 forces t finite and odd,
///   1/∞ = 1/∞̄ = 0.
///
/// Fin(1) is permitted only as the implicit exponent of a plain relator such
/// as [x,z]; order slots are validated to be >= 2 where they are consumed.
class ExtExp {
 public:
  enum class Kind { Finite, Inf, BarInf };

  static ExtExp fin(int k);
  static ExtExp inf() noexcept { return ExtExp(Kind::Inf, 0); }
  static ExtExp bar_inf() noexcept { return ExtExp(Kind::BarInf, 0); }

  /// Parses the JSON tag form: "fin:k", "inf", "barinf".
  static ExtExp from_tag(std::string_view tag);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  int value() const;

  ExtExp divided_by(int d) const;
  bool divisible_by(int d) const noexcept;

  /// 1/t as a double (0 for ∞ and ∞̄).
  double reciprocal() const noexcept;

  std::string tag() const;
  /// Human form: "5", "∞", "∞̄".
  std::string to_string() const;

  friend bool operator==(const ExtExp&, const ExtExp&) = default;
  friend std::strong_ordering operator<=>(const ExtExp& a, const ExtExp& b);

 private:
  ExtExp(Kind kind, int value) noexcept : kind_(kind), value_(value) {}

  Kind kind_;
  int value_;
};

int gcd(const ExtExp& t, int n);
inline bool is_odd(const ExtExp& t) { return gcd(t, 2) == 1; }

/// Exact non-negative rational used for reciprocal sums like 1/n + 1/t(u).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reciprocal(const ExtExp& t);

  Rational operator+(const Rational& o) const;
  Rational operator*(std::int64_t k) const;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
};

}  // namespace kleinian
