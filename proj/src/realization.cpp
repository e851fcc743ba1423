#include "kleinian/realization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kleinian/errors.hpp"

namespace kleinian {

Mat2C Mat2C::pow(long k) const {
  Mat2C base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Mat2C acc;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Mat2C Mat2C::normalized() const {
  const cplx s = std::sqrt(det());
  return {a / s, b / s, c / s, d / s};
}

double Mat2C::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

double distance(const Mat2C& x, const Mat2C& y) { return (x - y).max_abs(); }

double distance_to_pm_identity(const Mat2C& m) {
  return distance_pm(m, Mat2C::identity());
}

double distance_pm(const Mat2C& x, const Mat2C& y) {
  return std::min(distance(x, y), distance(x, -y));
}

Mat2C commutator(const Mat2C& x, const Mat2C& y) {
  return x * y * x.inverse() * y.inverse();
}

namespace {

/// s with s − 1/s = σ, σ² = β.
cplx root_of_beta(double beta) {
  const cplx sigma = std::sqrt(cplx(beta, 0.0));
  return (sigma + std::sqrt(sigma * sigma + 4.0)) / 2.0;
}

Mat2C keep_unimodular(const Mat2C& m) {
  if (std::abs(m.det() - 1.0) > kDetTolerance / 2) return m.normalized();
  return m;
}

}  // namespace

MatrixPair realize(const Parameters& p) {
  const cplx s = root_of_beta(p.beta);
  const cplx t = root_of_beta(p.beta_prime);
  const cplx ss = s - 1.0 / s;
  const cplx tt = t - 1.0 / t;
  const cplx b = ss * tt;
  const cplx disc = std::sqrt(b * b + 4.0 * p.gamma);
  const cplx r1 = (-b + disc) / 2.0;
  const cplx r2 = (-b - disc) / 2.0;
  cplx r;
  const double tie = 1e-14 * std::max(1.0, std::abs(r1));
  if (std::abs(r1.imag() - r2.imag()) <= tie) {
    r = r1.real() >= r2.real() ? r1 : r2;
  } else {
    r = r1.imag() > r2.imag() ? r1 : r2;
  }
  MatrixPair out;
  out.F = {s, 1.0, 0.0, 1.0 / s};
  out.G = {t, 0.0, r, 1.0 / t};
  out.params = p;
  out.reducible = std::abs(p.gamma) <= kDefaultTolerance;
  return out;
}

Parameters recompute_parameters(const Mat2C& F, const Mat2C& G) {
  const cplx tf = F.trace();
  const cplx tg = G.trace();
  const cplx tk = commutator(F, G).trace();
  return {std::real(tf * tf) - 4.0, std::real(tg * tg) - 4.0, std::real(tk) - 2.0};
}

Mat2C evaluate_word(const Word& w, const std::map<char, Mat2C>& images) {
  Mat2C acc;
  for (const auto& l : w.letters()) {
    auto it = images.find(l.symbol);
    if (it == images.end()) throw UnboundSymbol(l.symbol);
    acc = keep_unimodular(acc * it->second.pow(l.power));
  }
  return acc;
}

Mat2C evaluate_word(const Word& w, const MatrixPair& pair) {
  return evaluate_word(w, {{'f', pair.F}, {'g', pair.G}});
}

std::optional<std::vector<FgRelator>> relator_words_in_fg(const FamilyInstance& inst) {
  const Word f = Word::gen('f');
  const Word g = Word::gen('g');
  const Word c = Word::commutator(f, g);
  const ExtExp two = ExtExp::fin(2);
  const ExtExp three = ExtExp::fin(3);
  const auto& e = inst.group.exponents;

  if (inst.id.row == 1) {
    return std::vector<FgRelator>{{"f", f, e[0]}, {"g", g, e[1]}, {"[f,g]", c, e[2]}};
  }
  if (inst.id.row == 2) {
    const ExtExp p = e[2];
    if (!p.is_finite() || p.value() % 2 == 0) return std::nullopt;
    const Word ew = f.inverse() * g.inverse() * c.pow((p.value() - 1) / 2);
    return std::vector<FgRelator>{{"f", f, e[0]},
                                  {"g", g, e[1]},
                                  {"e", ew, two},
                                  {"fe", f * ew, two},
                                  {"ge", g * ew, two},
                                  {"gfe", g * f * ew, p}};
  }
  if (inst.id.row == 3) {
    auto it = inst.upoints.find("u");
    if (it == inst.upoints.end() || it->second.t() != three) return std::nullopt;
    const long n = inst.ints.at("n");
    const long k = (n - 1) * (n - 1) / 4;
    const Word u = f * c.pow(-k) * f;
    const Word ef = c.pow(2 * k) * g;
    return std::vector<FgRelator>{{"f", f, ExtExp::fin(static_cast<int>(n))},
                                  {"e_f", ef, two},
                                  {"u", u, two},
                                  {"fe_f", f * ef, two},
                                  {"ue_f", u * ef, three},
                                  {"fu", f * u, three}};
  }
  return std::nullopt;
}

namespace {

RelatorCheck check_power(const std::string& label, const Mat2C& base, ExtExp exponent,
                         double tol) {
  RelatorCheck r;
  r.label = label;
  r.exponent = exponent;
  const cplx tr = base.trace();
  switch (exponent.kind()) {
    case ExtExp::Kind::Finite:
      r.kind = RelatorCheck::Kind::Identity;
      r.deviation = distance_to_pm_identity(base.pow(exponent.value()));
      r.scale = std::max(1.0, base.max_abs() * base.max_abs());
      r.ok = r.deviation <= tol * r.scale;
      break;
    case ExtExp::Kind::Inf:
      r.kind = RelatorCheck::Kind::Parabolic;
      r.deviation = std::min(std::abs(tr - 2.0), std::abs(tr + 2.0));
      r.ok = r.deviation <= tol && distance_to_pm_identity(base) > tol;
      break;
    case ExtExp::Kind::BarInf:
      r.kind = RelatorCheck::Kind::Loxodromic;
      r.ok = std::abs(tr.imag()) > tol || std::abs(tr.real()) > 2.0 + tol;
      break;
  }
  return r;
}

/// Order data of an element with the given β, for the partial report.
std::optional<ExtExp> exponent_of_beta(double beta) {
  const auto c = classify_element(beta);
  if (const auto* e = std::get_if<element::Elliptic>(&c)) return ExtExp::fin(e->order);
  if (std::holds_alternative<element::Parabolic>(c)) return ExtExp::inf();
  if (std::holds_alternative<element::Hyperbolic>(c) ||
      std::holds_alternative<element::PiLoxodromic>(c)) {
    return ExtExp::bar_inf();
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_relators(const FamilyInstance& inst, double tol) {
  const MatrixPair pair = realize(inst.params);
  VerificationReport rep;
  if (auto words = relator_words_in_fg(inst)) {
    rep.full = true;
    for (const auto& r : *words) {
      rep.checks.push_back(check_power(r.label, evaluate_word(r.word, pair), r.exponent, tol));
    }
  } else {
    const double gamma = inst.params.gamma;
    const std::vector<std::pair<std::string, double>> probes = {
        {"f", inst.params.beta},
        {"g", inst.params.beta_prime},
        {"[f,g]", (gamma + 2.0) * (gamma + 2.0) - 4.0}};
    const std::map<std::string, Mat2C> mats = {
        {"f", pair.F}, {"g", pair.G}, {"[f,g]", commutator(pair.F, pair.G)}};
    for (const auto& [label, beta] : probes) {
      if (auto e = exponent_of_beta(beta)) {
        rep.checks.push_back(check_power(label, mats.at(label), *e, tol));
      }
    }
  }
  rep.passed = true;
  for (const auto& c : rep.checks) {
    if (c.kind != RelatorCheck::Kind::Loxodromic) {
      rep.max_deviation = std::max(rep.max_deviation, c.deviation);
    }
    rep.passed = rep.passed && c.ok;
  }
  return rep;
}

HalfRoot commutator_half_root(const MatrixPair& pair, double tol) {
  const Mat2C K = commutator(pair.F, pair.G);
  if (distance_to_pm_identity(K) <= tol) {
    throw NoCommutator("[F,G] is the identity in PSL(2,C)");
  }
  const Mat2C I = Mat2C::identity();
  const cplx tk = K.trace();
  auto tr_hg = [&](const Mat2C& h) { return std::abs((h * pair.G).trace()); };

  HalfRoot out;
  if (std::abs(tk + 2.0) <= tol * 4.0) {
    out.h = (I - K) * (1.0 / std::sqrt(2.0 - tk));
    out.single_root = true;
  } else if (std::abs(tk - 2.0) <= tol * 4.0) {
    out.h = (K + I) * (1.0 / std::sqrt(tk + 2.0));
    out.single_root = true;
  } else {
    Mat2C ha = (I - K) * (1.0 / std::sqrt(2.0 - tk));
    Mat2C hb = (K + I) * (1.0 / std::sqrt(tk + 2.0));
    const bool a_ok = tr_hg(ha) <= tol;
    const bool b_ok = tr_hg(hb) <= tol;
    if (b_ok && !a_ok) std::swap(ha, hb);
    out.h = ha;
    out.rejected = hb;
    out.rejected_trace_hg = tr_hg(hb);
    out.not_unique = a_ok == b_ok;
  }
  out.trace_hg = tr_hg(out.h);
  if (out.single_root) out.not_unique = out.trace_hg > tol;
  return out;
}

double gamma_sign_of_angle(double phi) {
  if (!(phi > 0.0 && phi < std::numbers::pi)) {
    throw OutOfDomain("angle must lie in (0, pi)");
  }
  return -2.0 * std::cos(phi) - 2.0;
}

double angle_of_gamma(double gamma) {
  if (!(gamma > -4.0 && gamma < 0.0)) {
    throw OutOfDomain("gamma must lie in (-4, 0)");
  }
  return std::acos(-(gamma + 2.0) / 2.0);
}

}  // namespace kleinian
