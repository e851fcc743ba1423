#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "kleinian/ext_exp.hpp"

namespace kleinian {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultOrderBound = 1000;

/// Trace parameters of a pair (f, g):
///   beta = tr²f − 4, beta_prime = tr²g − 4, gamma = tr[f,g] − 2.
struct Parameters {
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 0.0;

  Parameters swapped() const { return {beta_prime, beta, gamma}; }
  bool is_finite() const;
};

/// |a − b| <= tol · max(1, |a|, |b|).
bool approx_equal(double a, double b, double tol = kDefaultTolerance);

namespace element {
/// Rotation through 2πq/n; q = 1 is primitive.
struct Elliptic {
  int order;
  int turns;
  bool primitive() const { return turns == 1; }
  friend bool operator==(const Elliptic&, const Elliptic&) = default;
};
struct Parabolic {
  friend bool operator==(const Parabolic&, const Parabolic&) = default;
};
struct Hyperbolic {
  double translation_length;
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};
/// Elliptic whose rotation angle is not 2πq/n for any n within the search bound.
struct EllipticIrrational {
  double angle;
  friend bool operator==(const EllipticIrrational&,
                         const EllipticIrrational&) = default;
};
/// beta < −4: not a possible class-D generator, reported only.
struct PiLoxodromic {
  friend bool operator==(const PiLoxodromic&, const PiLoxodromic&) = default;
};
}  // namespace element

using ElementClass =
    std::variant<element::Elliptic, element::Parabolic, element::Hyperbolic,
                 element::EllipticIrrational, element::PiLoxodromic>;

ElementClass classify_element(double beta, double tol = kDefaultTolerance,
                              int order_bound = kDefaultOrderBound);

std::string describe(const ElementClass& c);

/// A point of the set of complex translation half-lengths: iπ/p, 0, or l > 0.
class UPoint {
 public:
  enum class Kind { Angle, Zero, Length };

  static UPoint angle(int p);
  static UPoint zero() noexcept { return UPoint(Kind::Zero, 0, 0.0); }
  static UPoint length(double l);

  /// "angle:p", "zero", "len:l".
  static UPoint parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  int p() const;
  double l() const;

  /// t(u): Angle(p) ↦ p, Zero ↦ ∞, Length ↦ ∞̄.
  ExtExp t() const;

  double cosh() const;
  double cosh_sq() const;
  double sinh_sq() const;

  std::string to_string() const;

  /// Same kind, same p, lengths within relative tolerance.
  bool same_as(const UPoint& o, double tol = kDefaultTolerance) const;

 private:
  UPoint(Kind kind, int p, double l) noexcept : kind_(kind), p_(p), l_(l) {}

  Kind kind_;
  int p_;
  double l_;
};

/// 4 sinh² u.
double beta_from_upoint(const UPoint& u);
/// −4 cosh² w. Throws OutOfDomain for Angle(2), which would give gamma = 0.
double gamma_from_upoint(const UPoint& w);

/// Nearest point of the half-length set with cosh²u = c. Angle candidates are
/// rounded to the nearest integer and must be confirmed by the caller.
std::optional<UPoint> upoint_from_cosh_sq(double c, double tol = kDefaultTolerance);
/// Same for cosh u = c (first power; c must be >= 0).
std::optional<UPoint> upoint_from_cosh(double c, double tol = kDefaultTolerance);
/// The half-length point u with 4 sinh²u = beta, when beta is hyperbolic,
/// parabolic or a primitive elliptic value (confirmed within tol).
std::optional<UPoint> upoint_from_beta(double beta, double tol = kDefaultTolerance);

/// Complex half-length u = λ/2 with 4 sinh²u = beta (principal branches:
/// arcsinh for beta >= 0, i·arcsin for beta in [−4, 0)).
std::complex<double> half_length_from_beta(double beta);
double beta_from_half_length(std::complex<double> u);

struct PrimitiveReduction {
  int power;     ///< r with f^r primitive
  double gamma;  ///< γ(f^r, g)
};

/// For f a rotation through 2πq/n (gcd(q,n) = 1, 1 < q < n/2), the least r
/// with q·r ≡ 1 (mod n) and the rescaled commutator parameter
/// γ(f^r, g) = (β(f^r)/β(f)) γ(f, g).
PrimitiveReduction reduce_to_primitive(int n, int q, double gamma);

/// beta > −4, beta' > −4, gamma < −beta·beta'/4 (all exact) and |gamma| > tol.
bool class_d_gate(const Parameters& p, double tol = kDefaultTolerance);

}  // namespace kleinian
