#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "kleinian/errors.hpp"
#include "kleinian/trace_core.hpp"

using namespace kleinian;
using std::numbers::pi;

namespace {

double sin2(double x) { return std::sin(x) * std::sin(x); }

// Least r in 1..n with f^r a primitive rotation, found by checking the angle directly.
int brute_primitive_power(int n, int q) {
  for (int r = 1; r <= n; ++r) {
    const int k = (q * r) % n;
    if (k == 1) return r;
  }
  return -1;
}

}  // namespace

TEST_CASE("classify_element") {
  auto e = std::get<element::Elliptic>(classify_element(-2.0));
  CHECK(e.order == 4);
  CHECK(e.turns == 1);

  CHECK(std::holds_alternative<element::Parabolic>(classify_element(0.0)));

  e = std::get<element::Elliptic>(classify_element(-4.0 * sin2(2 * pi / 5)));
  CHECK(e.order == 5);
  CHECK(e.turns == 2);

  const auto h = std::get<element::Hyperbolic>(classify_element(4.0));
  CHECK(h.translation_length == doctest::Approx(2 * std::asinh(1.0)));

  CHECK(std::holds_alternative<element::PiLoxodromic>(classify_element(-5.0)));
  e = std::get<element::Elliptic>(classify_element(-4.0));
  CHECK(e.order == 2);

  // a rotation angle 2·sqrt(2) is not rational in units of 2π within the bound
  CHECK(std::holds_alternative<element::EllipticIrrational>(
      classify_element(-4.0 * sin2(std::sqrt(2.0)))));
}

TEST_CASE("brute-force elliptic orders agree") {
  for (int n = 2; n <= 60; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(q, n) != 1 || 2 * q > n) continue;
      const auto c = classify_element(-4.0 * sin2(pi * q / n));
      REQUIRE(std::holds_alternative<element::Elliptic>(c));
      CHECK(std::get<element::Elliptic>(c) == element::Elliptic{n, q});
    }
  }
}

TEST_CASE("angle upoints are primitive elliptics") {
  for (int p = 2; p <= 200; ++p) {
    const auto u = UPoint::angle(p);
    CHECK(u.t() == ExtExp::fin(p));
    const auto c = classify_element(beta_from_upoint(u));
    CHECK(std::get<element::Elliptic>(c) == element::Elliptic{p, 1});
  }
}

TEST_CASE("beta and gamma from upoints") {
  CHECK(beta_from_upoint(UPoint::angle(3)) == doctest::Approx(-3.0));
  CHECK(beta_from_upoint(UPoint::zero()) == 0.0);
  CHECK(beta_from_upoint(UPoint::length(std::asinh(1.0))) == doctest::Approx(4.0));

  CHECK(gamma_from_upoint(UPoint::zero()) == doctest::Approx(-4.0));
  CHECK(gamma_from_upoint(UPoint::angle(3)) == doctest::Approx(-1.0));
  CHECK(gamma_from_upoint(UPoint::length(std::acosh(std::sqrt(2.0)))) == doctest::Approx(-8.0));
  CHECK_THROWS_AS(gamma_from_upoint(UPoint::angle(2)), OutOfDomain);

  CHECK(UPoint::zero().t() == ExtExp::inf());
  CHECK(UPoint::length(1.0).t() == ExtExp::bar_inf());
  CHECK(UPoint::parse("angle:7").same_as(UPoint::angle(7)));
  CHECK(UPoint::parse("len:0.5").same_as(UPoint::length(0.5)));
  CHECK(UPoint::parse(UPoint::length(0.3).to_string()).same_as(UPoint::length(0.3)));
}

TEST_CASE("half-length round trip") {
  for (double beta = -4.0; beta <= 50.0; beta += 0.01) {
    const double back = beta_from_half_length(half_length_from_beta(beta));
    CHECK(std::abs(back - beta) <= 1e-12 * std::max(1.0, std::abs(beta)));
  }
  for (int p = 2; p < 40; ++p) {
    const auto u = upoint_from_beta(beta_from_upoint(UPoint::angle(p)));
    REQUIRE(u);
    CHECK(u->same_as(UPoint::angle(p)));
  }
  for (double l : {0.1, 0.7, 2.5}) {
    const auto u = upoint_from_beta(beta_from_upoint(UPoint::length(l)));
    REQUIRE(u);
    CHECK(u->l() == doctest::Approx(l));
  }
}

TEST_CASE("reduce_to_primitive") {
  auto r = reduce_to_primitive(5, 2, -1.0);
  CHECK(r.power == 3);
  CHECK(r.gamma == doctest::Approx(-sin2(pi / 5) / sin2(2 * pi / 5)));
  CHECK(r.gamma == doctest::Approx(-0.381966).epsilon(1e-6));

  r = reduce_to_primitive(7, 2, -1.0);
  CHECK(r.power == 4);
  CHECK(r.gamma == doctest::Approx(-sin2(pi / 7) / sin2(2 * pi / 7)));

  CHECK_THROWS_AS(reduce_to_primitive(5, 4, -1.0), InvalidRotation);
  CHECK_THROWS_AS(reduce_to_primitive(6, 2, -1.0), InvalidRotation);
  CHECK_THROWS_AS(reduce_to_primitive(5, 1, -1.0), InvalidRotation);

  for (int n = 5; n <= 40; ++n) {
    for (int q = 2; 2 * q < n; ++q) {
      if (std::gcd(q, n) != 1) continue;
      r = reduce_to_primitive(n, q, -1.0);
      CHECK(r.power == brute_primitive_power(n, q));
      // f^r is a primitive rotation
      const double beta_r = -4.0 * sin2(pi * q * r.power / n);
      const auto c = std::get<element::Elliptic>(classify_element(beta_r));
      CHECK(c.turns == 1);
      CHECK(c.order == n);
    }
  }
}

TEST_CASE("class_d_gate") {
  const double s5 = std::sqrt(5.0);
  CHECK(class_d_gate({-3.0, s5 - 1, (s5 - 1) / 2}));
  CHECK_FALSE(class_d_gate({-3.0, -3.0, 0.0}));
  CHECK_FALSE(class_d_gate({-5.0, 1.0, -10.0}));
  CHECK_FALSE(class_d_gate({-4.0, 1.0, -10.0}));
  CHECK_FALSE(class_d_gate({1.0, 1.0, -0.25}));

  for (double b : {-3.9, -2.0, -0.5, 0.0, 1.0, 7.0}) {
    for (double bp : {-3.5, -1.0, 0.0, 2.0}) {
      for (double g : {-20.0, -4.0, -1.0, -0.1, 0.3, 2.0}) {
        const Parameters p{b, bp, g};
        CHECK(class_d_gate(p) == class_d_gate(p.swapped()));
      }
    }
  }
}

TEST_CASE("ExtExp conventions") {
  CHECK(gcd(ExtExp::inf(), 2) == 2);
  CHECK(gcd(ExtExp::fin(6), 4) == 2);
  CHECK(ExtExp::fin(6).divided_by(2) == ExtExp::fin(3));
  CHECK(ExtExp::inf().divided_by(2) == ExtExp::inf());
  CHECK(ExtExp::fin(1000) < ExtExp::inf());
  CHECK(ExtExp::inf() < ExtExp::bar_inf());
  CHECK(ExtExp::inf().reciprocal() == 0.0);
  CHECK(ExtExp::from_tag("fin:7") == ExtExp::fin(7));
  CHECK(ExtExp::from_tag(ExtExp::bar_inf().tag()) == ExtExp::bar_inf());
  CHECK(is_odd(ExtExp::fin(9)));
  CHECK_FALSE(is_odd(ExtExp::inf()));
  CHECK(Rational::reciprocal(ExtExp::fin(2)) + Rational::reciprocal(ExtExp::fin(3)) +
            Rational::reciprocal(ExtExp::fin(6)) ==
        Rational{1, 1});
}
