#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kleinian/discreteness.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/orbifolds.hpp"
#include "kleinian/realization.hpp"
#include "support.hpp"

using namespace kleinian;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

double sin2(double x) { return std::sin(x) * std::sin(x); }

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double param_err(const Parameters& a, const Parameters& b) {
  return std::max({rel_err(a.beta, b.beta), rel_err(a.beta_prime, b.beta_prime),
                   rel_err(a.gamma, b.gamma)});
}

FamilyInstance first_admissible(int row) {
  std::optional<FamilyInstance> out;
  support::for_each_admissible(row_info({row}), 9, [&](const IntSlots& is, const UPointSlots& us) {
    if (!out) out = generate_family({row}, is, us);
  });
  REQUIRE(out);
  return *out;
}

}  // namespace

TEST_CASE("realize examples") {
  auto pair = realize({0.0, 0.0, -4.0});
  CHECK(std::abs(pair.G.c - cplx(0, 2)) < 1e-14);
  CHECK(std::abs(commutator(pair.F, pair.G).trace() + 2.0) < 1e-12);

  const double s5 = std::sqrt(5.0);
  const Parameters p5{-3.0, s5 - 1, (s5 - 1) / 2};
  CHECK(param_err(recompute_parameters(realize(p5).F, realize(p5).G), p5) < 1e-12);

  pair = realize({-3.0, -3.0, -3.0});
  const auto k = commutator(pair.F, pair.G);
  CHECK(std::abs(k.trace() + 1.0) < 1e-12);
  CHECK(distance_to_pm_identity(k.pow(3)) < 1e-12);

  for (const auto& m : {pair.F, pair.G}) CHECK(std::abs(m.det() - 1.0) < 1e-12);
  CHECK(realize({-3.0, -3.0, 0.0}).reducible);
}

TEST_CASE("random triples round trip") {
  std::mt19937_64 rng(support::test_seed());
  std::uniform_real_distribution<double> beta(-4.0, 12.0), gamma(-25.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Parameters p{beta(rng), beta(rng), gamma(rng)};
    const auto pair = realize(p);
    worst = std::max(worst, param_err(recompute_parameters(pair.F, pair.G), p));
  }
  INFO("seed " << support::test_seed());
  CHECK(worst <= 1e-10);
}

TEST_CASE("commutator trace identity") {
  std::mt19937_64 rng(support::test_seed() + 1);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const cplx s(re(rng), re(rng)), t(re(rng), re(rng)), r(re(rng), re(rng));
    if (std::abs(s) < 0.1 || std::abs(t) < 0.1) continue;
    const Mat2C F{s, 1.0, 0.0, 1.0 / s}, G{t, 0.0, r, 1.0 / t};
    const cplx lhs = commutator(F, G).trace() - 2.0;
    const cplx rhs = r * r + r * (s - 1.0 / s) * (t - 1.0 / t);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("evaluate_word") {
  const auto pair = realize({-3.0, -3.0, -3.0});
  CHECK(distance(evaluate_word(Word{}, pair), Mat2C::identity()) == 0.0);
  const auto f = Word::gen('f'), g = Word::gen('g');
  CHECK(distance(evaluate_word(f * f.inverse(), pair), Mat2C::identity()) < 1e-14);
  CHECK(std::abs(evaluate_word(Word::commutator(f, g), pair).trace() + 1.0) < 1e-12);
  CHECK(distance(evaluate_word(f.pow(5), pair), pair.F.pow(5)) < 1e-13);
  CHECK_THROWS_AS(evaluate_word(Word::gen('x'), pair), UnboundSymbol);
}

TEST_CASE("relator words") {
  const auto gt = generate_family({1}, {}, {{"u", UPoint::angle(3)}, {"v", UPoint::angle(3)},
                                            {"w", UPoint::angle(6)}});
  CHECK(gt.group.to_string() == "GT[3,3;3]");
  const auto words = relator_words_in_fg(gt);
  REQUIRE(words);
  REQUIRE(words->size() == 3);
  CHECK((*words)[0].word.to_string() == "f");
  CHECK((*words)[2].word.to_string() == "fgf^-1g^-1");
  CHECK((*words)[2].exponent == ExtExp::fin(3));

  const auto tet = generate_family({3}, {{"n", 7}}, {{"u", UPoint::angle(3)}});
  const auto tw = relator_words_in_fg(tet);
  REQUIRE(tw);
  const auto f = Word::gen('f'), g = Word::gen('g'), c = Word::commutator(f, g);
  const auto u = f * c.pow(-9) * f, ef = c.pow(18) * g;
  bool saw_u = false, saw_ef = false;
  for (const auto& r : *tw) {
    CHECK(r.word.is_freely_reduced());
    saw_u = saw_u || r.word == u;
    saw_ef = saw_ef || r.word == ef;
  }
  CHECK(saw_u);
  CHECK(saw_ef);

  CHECK_FALSE(relator_words_in_fg(first_admissible(17)));
}

TEST_CASE("verify_relators") {
  const auto gt = generate_family({1}, {}, {{"u", UPoint::angle(3)}, {"v", UPoint::angle(3)},
                                            {"w", UPoint::angle(6)}});
  auto rep = verify_relators(gt);
  CHECK(rep.full);
  CHECK(rep.passed);
  CHECK(rep.max_deviation < 1e-9);

  rep = verify_relators(generate_family({3}, {{"n", 7}}, {{"u", UPoint::angle(3)}}));
  CHECK(rep.full);
  CHECK(rep.passed);
  CHECK(rep.checks.size() == 6);
  CHECK(rep.max_deviation < 1e-8);

  rep = verify_relators(first_admissible(17));
  CHECK_FALSE(rep.full);
  CHECK(rep.passed);

  // a cusp: [f,g] parabolic
  rep = verify_relators(generate_family({1}, {}, {{"u", UPoint::angle(3)}, {"v", UPoint::angle(3)},
                                                  {"w", UPoint::zero()}}));
  CHECK(rep.passed);
  CHECK(rep.checks.back().kind == RelatorCheck::Kind::Parabolic);
}

TEST_CASE("relators hold on every rows 1-3 instance") {
  int checked = 0;
  for (int row : {1, 2, 3}) {
    support::for_each_admissible(row_info({row}), 12, [&](const IntSlots& is, const UPointSlots& us) {
      const auto inst = generate_family({row}, is, us);
      if (!relator_words_in_fg(inst)) return;
      const auto rep = verify_relators(inst);
      INFO(inst.describe());
      CHECK(rep.full);
      CHECK(rep.passed);
      ++checked;
    });
  }
  CHECK(checked > 100);
}

TEST_CASE("commutator half root") {
  const auto pair = realize({-3.0, -3.0, -3.0});
  const auto h = commutator_half_root(pair);
  const auto k = commutator(pair.F, pair.G);
  CHECK(distance_pm(h.h * h.h, k) < 1e-10);
  CHECK(h.trace_hg < 1e-10);
  CHECK_FALSE(h.not_unique);
  REQUIRE(h.rejected);
  CHECK(h.rejected_trace_hg > 1e-9);

  const auto cusp = realize({-3.0, -3.0, -4.0});
  const auto hc = commutator_half_root(cusp);
  CHECK(hc.single_root);
  CHECK(hc.trace_hg < 1e-9);
  CHECK(distance_pm(hc.h * hc.h, commutator(cusp.F, cusp.G)) < 1e-10);

  Mat2C I = Mat2C::identity();
  CHECK_THROWS_AS(commutator_half_root(MatrixPair{I, I, {}, true}), NoCommutator);
}

TEST_CASE("half root on two-elliptic class-D samples") {
  int checked = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int m = 3; m <= 9; ++m) {
      const double b = -4 * sin2(pi / n), bp = -4 * sin2(pi / m);
      for (double g : {-4.0 * std::pow(std::cosh(0.3), 2), -5.0, -4.0 * std::pow(std::cos(pi / 7), 2),
                       -b * bp / 4 - 0.05}) {
        if (!class_d_gate({b, bp, g})) continue;
        const auto pair = realize({b, bp, g});
        const auto h = commutator_half_root(pair);
        INFO("n=" << n << " m=" << m << " gamma=" << g);
        CHECK(distance_pm(h.h * h.h, commutator(pair.F, pair.G)) < 1e-10);
        CHECK(h.trace_hg < 1e-9);
        CHECK_FALSE(h.not_unique);
        ++checked;
      }
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("gamma and rotation angle") {
  CHECK(gamma_sign_of_angle(2 * pi / 3) == doctest::Approx(-1.0));
  CHECK(gamma_sign_of_angle(1e-8) == doctest::Approx(-4.0));
  for (int p = 3; p < 30; ++p) {
    CHECK(angle_of_gamma(-4 * std::pow(std::cos(pi / p), 2)) == doctest::Approx(2 * pi / p));
  }
  for (double phi = 0.01; phi < pi; phi += 0.01) {
    CHECK(std::abs(angle_of_gamma(gamma_sign_of_angle(phi)) - phi) < 1e-12);
  }
  CHECK_THROWS_AS(gamma_sign_of_angle(0.0), OutOfDomain);
  CHECK_THROWS_AS(gamma_sign_of_angle(4.0), OutOfDomain);
}
