#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/family.hpp"
#include "kleinian/word.hpp"

namespace kleinian {

using cplx = std::complex<double>;

inline constexpr double kDetTolerance = 1e-12;
inline constexpr double kRelatorTolerance = 1e-8;

/// [[a, b], [c, d]].
struct Mat2C {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2C identity() { return {}; }

  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }
  /// Adjugate; the inverse when det = 1.
  Mat2C inverse() const { return {d, -b, -c, a}; }
  Mat2C operator*(const Mat2C& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2C operator+(const Mat2C& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2C operator-(const Mat2C& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2C operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2C operator-() const { return {-a, -b, -c, -d}; }

  /// Exact integer power by repeated squaring.
  Mat2C pow(long k) const;
  /// Divides by √det (principal branch).
  Mat2C normalized() const;
  double max_abs() const;
  std::array<cplx, 4> entries() const { return {a, b, c, d}; }
};

/// Entrywise max-norm distance.
double distance(const Mat2C& x, const Mat2C& y);
/// min(‖M − I‖, ‖M + I‖): distance to the identity of PSL(2,C).
double distance_to_pm_identity(const Mat2C& m);
/// Same, comparing x to ±y.
double distance_pm(const Mat2C& x, const Mat2C& y);

Mat2C commutator(const Mat2C& x, const Mat2C& y);

struct MatrixPair {
  Mat2C F;
  Mat2C G;
  Parameters params;
  /// γ = 0: the pair has a common fixed point.
  bool reducible = false;
};

/// F = [[s, 1], [0, 1/s]], G = [[t, 0], [r, 1/t]] with (s − 1/s)² = β,
/// (t − 1/t)² = β′ and r² + r(s − 1/s)(t − 1/t) = γ.
MatrixPair realize(const Parameters& p);

/// (β, β′, γ) recomputed from the matrices.
Parameters recompute_parameters(const Mat2C& F, const Mat2C& G);

/// Left-to-right product; throws UnboundSymbol.
Mat2C evaluate_word(const Word& w, const std::map<char, Mat2C>& images);
Mat2C evaluate_word(const Word& w, const MatrixPair& pair);

/// A relator word over {f, g} and its exponent.
struct FgRelator {
  std::string label;
  Word word;
  ExtExp exponent;
};

/// Relators in f, g that must evaluate to ±I. Available for GT instances of
/// row 1, row 2 with odd p, and row 3 with t(u) = 3; nullopt otherwise.
std::optional<std::vector<FgRelator>> relator_words_in_fg(const FamilyInstance& inst);

struct RelatorCheck {
  enum class Kind { Identity, Parabolic, Loxodromic };
  std::string label;
  ExtExp exponent = ExtExp::fin(1);
  Kind kind = Kind::Identity;
  double deviation = 0.0;
  /// Identity checks pass when deviation <= tol · scale, scale = max(1, |base|²)
  /// (rounding in a power of B grows with |B| |B⁻¹| = |B|² in SL(2,C)).
  double scale = 1.0;
  bool ok = false;
};

struct VerificationReport {
  /// False when the f,g word map is unavailable and only the generators and
  /// the commutator were checked.
  bool full = false;
  std::vector<RelatorCheck> checks;
  double max_deviation = 0.0;
  bool passed = false;
};

VerificationReport verify_relators(const FamilyInstance& inst,
                                   double tol = kRelatorTolerance);

struct HalfRoot {
  Mat2C h;
  double trace_hg = 0.0;
  /// The other square root, when there is one.
  std::optional<Mat2C> rejected;
  double rejected_trace_hg = 0.0;
  /// [F,G] parabolic: its square root is unique.
  bool single_root = false;
  /// Neither or both roots satisfy tr(HG) = 0.
  bool not_unique = false;
};

/// The square root h of [F,G] with (hG)² = ±I, i.e. tr(hG) = 0.
/// Throws NoCommutator when [F,G] = ±I.
HalfRoot commutator_half_root(const MatrixPair& pair, double tol = kDefaultTolerance);

/// γ = −2cos φ − 2 for φ ∈ (0, π); throws OutOfDomain otherwise.
double gamma_sign_of_angle(double phi);
/// Inverse of gamma_sign_of_angle for γ ∈ (−4, 0).
double angle_of_gamma(double gamma);

}  // namespace kleinian
