#include "kleinian/trace_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {
constexpr double kPi = std::numbers::pi;
// Angle candidates beyond this are numerically meaningless as integers.
constexpr double kMaxAngleIndex = 1e7;
}  // namespace

bool Parameters::is_finite() const {
  return std::isfinite(beta) && std::isfinite(beta_prime) &&
         std::isfinite(gamma);
}

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

ElementClass classify_element(double beta, double tol, int order_bound) {
  if (!std::isfinite(beta)) {
    throw std::invalid_argument("classify_element: beta must be finite");
  }
  if (std::abs(beta) <= tol) return element::Parabolic{};
  if (beta > 0.0) {
    return element::Hyperbolic{2.0 * std::asinh(std::sqrt(beta) / 2.0)};
  }
  if (beta < -4.0) {
    if (approx_equal(beta, -4.0, tol)) return element::Elliptic{2, 1};
    return element::PiLoxodromic{};
  }
  // beta = −4 sin²(θ/2), θ = 2πx with x in (0, 1/2].
  const double half_angle = std::asin(std::min(1.0, std::sqrt(-beta) / 2.0));
  const double x = half_angle / kPi;
  for (int n = 2; n <= order_bound; ++n) {
    const long q = std::lround(x * n);
    if (q < 1 || 2 * q > n || std::gcd(q, static_cast<long>(n)) != 1) continue;
    const double s = std::sin(kPi * static_cast<double>(q) / n);
    if (approx_equal(-4.0 * s * s, beta, tol)) {
      return element::Elliptic{n, static_cast<int>(q)};
    }
  }
  return element::EllipticIrrational{2.0 * half_angle};
}

std::string describe(const ElementClass& c) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, element::Elliptic>) {
          os << "elliptic(n=" << e.order << ",q=" << e.turns << ")";
        } else if constexpr (std::is_same_v<T, element::Parabolic>) {
          os << "parabolic";
        } else if constexpr (std::is_same_v<T, element::Hyperbolic>) {
          os << "hyperbolic(d=" << e.translation_length << ")";
        } else if constexpr (std::is_same_v<T, element::EllipticIrrational>) {
          os << "elliptic-irrational(theta=" << e.angle << ")";
        } else {
          os << "pi-loxodromic";
        }
      },
      c);
  return os.str();
}

// ---------------------------------------------------------------------------
// UPoint

UPoint UPoint::angle(int p) {
  if (p < 2) throw OutOfDomain("UPoint angle index must be >= 2");
  return UPoint(Kind::Angle, p, 0.0);
}

UPoint UPoint::length(double l) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw OutOfDomain("UPoint length must be a positive finite real");
  }
  return UPoint(Kind::Length, 0, l);
}

UPoint UPoint::parse(const std::string& text) {
  if (text == "zero" || text == "0") return zero();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      if (head == "angle") {
        const int p = std::stoi(tail, &used);
        if (used == tail.size()) return angle(p);
      } else if (head == "len") {
        const double l = std::stod(tail, &used);
        if (used == tail.size()) return length(l);
      }
    } catch (const std::logic_error&) {
    }
  }
  throw OutOfDomain("cannot parse half-length '" + text +
                    "' (expected angle:p, zero or len:l)");
}

int UPoint::p() const {
  if (kind_ != Kind::Angle) throw std::logic_error("UPoint::p on non-angle");
  return p_;
}

double UPoint::l() const {
  if (kind_ != Kind::Length) throw std::logic_error("UPoint::l on non-length");
  return l_;
}

ExtExp UPoint::t() const {
  switch (kind_) {
    case Kind::Angle: return ExtExp::fin(p_);
    case Kind::Zero: return ExtExp::inf();
    case Kind::Length: return ExtExp::bar_inf();
  }
  return ExtExp::inf();
}

double UPoint::cosh() const {
  switch (kind_) {
    case Kind::Angle: return std::cos(kPi / p_);
    case Kind::Zero: return 1.0;
    case Kind::Length: return std::cosh(l_);
  }
  return 1.0;
}

double UPoint::cosh_sq() const {
  const double c = cosh();
  return c * c;
}

double UPoint::sinh_sq() const {
  switch (kind_) {
    case Kind::Angle: {
      const double s = std::sin(kPi / p_);
      return -s * s;
    }
    case Kind::Zero: return 0.0;
    case Kind::Length: {
      const double s = std::sinh(l_);
      return s * s;
    }
  }
  return 0.0;
}

std::string UPoint::to_string() const {
  switch (kind_) {
    case Kind::Angle: return "angle:" + std::to_string(p_);
    case Kind::Zero: return "zero";
    case Kind::Length: {
      std::ostringstream os;
      os.precision(17);
      os << "len:" << l_;
      return os.str();
    }
  }
  return {};
}

bool UPoint::same_as(const UPoint& o, double tol) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Angle: return p_ == o.p_;
    case Kind::Zero: return true;
    case Kind::Length: return approx_equal(l_, o.l_, tol);
  }
  return false;
}

double beta_from_upoint(const UPoint& u) { return 4.0 * u.sinh_sq(); }

double gamma_from_upoint(const UPoint& w) {
  if (w.kind() == UPoint::Kind::Angle && w.p() == 2) {
    throw OutOfDomain("gamma_from_upoint: angle:2 gives gamma = 0");
  }
  return -4.0 * w.cosh_sq();
}

std::optional<UPoint> upoint_from_cosh_sq(double c, double tol) {
  if (!std::isfinite(c)) return std::nullopt;
  if (approx_equal(c, 1.0, tol)) return UPoint::zero();
  if (c > 1.0) return UPoint::length(std::acosh(std::sqrt(c)));
  if (c < 0.0) {
    if (c >= -tol) return UPoint::angle(2);
    return std::nullopt;
  }
  const double p = kPi / std::acos(std::sqrt(c));
  if (!(p < kMaxAngleIndex)) return std::nullopt;
  return UPoint::angle(std::max(2, static_cast<int>(std::lround(p))));
}

std::optional<UPoint> upoint_from_cosh(double c, double tol) {
  if (!std::isfinite(c)) return std::nullopt;
  if (approx_equal(c, 1.0, tol)) return UPoint::zero();
  if (c > 1.0) return UPoint::length(std::acosh(c));
  if (c < 0.0) {
    if (c >= -tol) return UPoint::angle(2);
    return std::nullopt;
  }
  const double p = kPi / std::acos(c);
  if (!(p < kMaxAngleIndex)) return std::nullopt;
  return UPoint::angle(std::max(2, static_cast<int>(std::lround(p))));
}

std::optional<UPoint> upoint_from_beta(double beta, double tol) {
  if (!std::isfinite(beta) || beta < -4.0 - 4.0 * tol) return std::nullopt;
  if (std::abs(beta) <= tol) return UPoint::zero();
  if (beta > 0.0) return UPoint::length(std::asinh(std::sqrt(beta) / 2.0));
  auto cand = upoint_from_cosh_sq(1.0 + beta / 4.0, tol);
  if (!cand || cand->kind() != UPoint::Kind::Angle) return std::nullopt;
  if (!approx_equal(beta_from_upoint(*cand), beta, tol)) return std::nullopt;
  return cand;
}

std::complex<double> half_length_from_beta(double beta) {
  const std::complex<double> root = std::sqrt(std::complex<double>(beta, 0.0));
  return std::asinh(root / 2.0);
}

double beta_from_half_length(std::complex<double> u) {
  const auto s = std::sinh(u);
  return std::real(4.0 * s * s);
}

PrimitiveReduction reduce_to_primitive(int n, int q, double gamma) {
  if (n < 5 || q <= 1 || 2 * q >= n || std::gcd(q, n) != 1) {
    throw InvalidRotation("rotation 2π·" + std::to_string(q) + "/" +
                          std::to_string(n) +
                          " is not a non-primitive normal form "
                          "(need gcd(q,n)=1, 1<q<n/2)");
  }
  int r = 1;
  while ((static_cast<long>(q) * r) % n != 1) ++r;
  const double sp = std::sin(kPi / n);
  const double sq = std::sin(kPi * q / n);
  return {r, (sp * sp) / (sq * sq) * gamma};
}

bool class_d_gate(const Parameters& p, double tol) {
  if (!p.is_finite()) return false;
  return p.beta > -4.0 && p.beta_prime > -4.0 &&
         p.gamma < -p.beta * p.beta_prime / 4.0 && std::abs(p.gamma) > tol;
}

}  // namespace kleinian
