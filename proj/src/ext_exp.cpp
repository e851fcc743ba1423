#include "kleinian/ext_exp.hpp"

#include <numeric>
#include <stdexcept>

#include "kleinian/errors.hpp"

namespace kleinian {

ExtExp ExtExp::fin(int k) {
  if (k < 1) {
    throw InvalidExponent("finite exponent must be positive, got " +
                          std::to_string(k));
  }
  return ExtExp(Kind::Finite, k);
}

ExtExp ExtExp::from_tag(std::string_view tag) {
  if (tag == "inf") return inf();
  if (tag == "barinf") return bar_inf();
  if (tag.starts_with("fin:")) {
    const std::string digits(tag.substr(4));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && used > 0) return fin(k);
  }
  throw InvalidExponent("bad exponent tag '" + std::string(tag) + "'");
}

int ExtExp::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite exponent");
  return value_;
}

bool ExtExp::divisible_by(int d) const noexcept {
  if (d <= 0) return false;
  return !is_finite() || value_ % d == 0;
}

ExtExp ExtExp::divided_by(int d) const {
  if (!divisible_by(d)) {
    throw InvalidExponent(to_string() + " is not divisible by " +
                          std::to_string(d));
  }
  return is_finite() ? fin(value_ / d) : *this;
}

double ExtExp::reciprocal() const noexcept {
  return is_finite() ? 1.0 / value_ : 0.0;
}

std::string ExtExp::tag() const {
  switch (kind_) {
    case Kind::Finite: return "fin:" + std::to_string(value_);
    case Kind::Inf: return "inf";
    case Kind::BarInf: return "barinf";
  }
  return {};
}

std::string ExtExp::to_string() const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(value_);
    case Kind::Inf: return "∞";
    case Kind::BarInf: return "∞̄";
  }
  return {};
}

std::strong_ordering operator<=>(const ExtExp& a, const ExtExp& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  return a.value_ <=> b.value_;
}

int gcd(const ExtExp& t, int n) {
  if (n <= 0) throw std::invalid_argument("gcd with non-positive integer");
  return t.is_finite() ? std::gcd(t.value(), n) : n;
}

Rational Rational::reciprocal(const ExtExp& t) {
  return t.is_finite() ? Rational{1, t.value()} : Rational{0, 1};
}

Rational Rational::operator+(const Rational& o) const {
  Rational r{num * o.den + o.num * den, den * o.den};
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

Rational Rational::operator*(std::int64_t k) const {
  return Rational{num * k, den} + Rational{0, 1};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num * b.den <=> b.num * a.den;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace kleinian
