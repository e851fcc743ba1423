#include "kleinian/discreteness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;

struct Variant {
  Parameters params;
  int f_power = 1;
  int g_power = 1;
};

std::vector<Variant> parameter_variants(const Parameters& p, const SearchBounds& b) {
  std::vector<Variant> out{{p}};
  auto non_primitive = [&](double beta) -> std::optional<element::Elliptic> {
    if (!(beta >= -4.0 && beta < 0.0)) return std::nullopt;
    auto c = classify_element(beta, b.tol, b.order_bound);
    if (auto* e = std::get_if<element::Elliptic>(&c); e && e->turns > 1) return *e;
    return std::nullopt;
  };
  auto reduce_f = [&](Variant v) -> std::optional<Variant> {
    auto e = non_primitive(v.params.beta);
    if (!e) return std::nullopt;
    const auto red = reduce_to_primitive(e->order, e->turns, v.params.gamma);
    const double s = std::sin(kPi / e->order);
    v.params.beta = -4.0 * s * s;
    v.params.gamma = red.gamma;
    v.f_power = red.power;
    return v;
  };
  auto reduce_g = [&](Variant v) -> std::optional<Variant> {
    auto e = non_primitive(v.params.beta_prime);
    if (!e) return std::nullopt;
    const auto red = reduce_to_primitive(e->order, e->turns, v.params.gamma);
    const double s = std::sin(kPi / e->order);
    v.params.beta_prime = -4.0 * s * s;
    v.params.gamma = red.gamma;
    v.g_power = red.power;
    return v;
  };
  auto f = reduce_f(out[0]);
  auto g = reduce_g(out[0]);
  if (f) out.push_back(*f);
  if (g) out.push_back(*g);
  if (f) {
    if (auto fg = reduce_g(*f)) out.push_back(*fg);
  }
  return out;
}

bool params_match(const Parameters& a, const Parameters& b, double tol) {
  return approx_equal(a.beta, b.beta, tol) &&
         approx_equal(a.beta_prime, b.beta_prime, tol) &&
         approx_equal(a.gamma, b.gamma, tol);
}

std::optional<std::string> beyond_bound(const SlotCandidate& c, int bound) {
  for (const auto& [k, v] : c.ints) {
    if (v > bound) return k + "=" + std::to_string(v);
  }
  for (const auto& [k, v] : c.upoints) {
    if (v.kind() == UPoint::Kind::Angle && v.p() > bound) return k + "=" + v.to_string();
  }
  return std::nullopt;
}

bool instance_less(const FamilyInstance& a, const FamilyInstance& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.swapped != b.swapped) return !a.swapped;
  if (a.f_power != b.f_power) return a.f_power < b.f_power;
  if (a.g_power != b.g_power) return a.g_power < b.g_power;
  if (a.ints != b.ints) return a.ints < b.ints;
  return a.describe() < b.describe();
}

void sort_and_dedupe(std::vector<FamilyInstance>& v, double tol) {
  std::stable_sort(v.begin(), v.end(), instance_less);
  std::vector<FamilyInstance> out;
  for (auto& x : v) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const FamilyInstance& y) {
      return y.swapped == x.swapped && y.f_power == x.f_power &&
             y.g_power == x.g_power && y.same_data(x, tol);
    });
    if (!dup) out.push_back(std::move(x));
  }
  v = std::move(out);
}

FamilyInstance make_instance(FamilyId id, const SlotCandidate& c,
                             const RowEvaluation& ev) {
  FamilyInstance inst;
  inst.id = id;
  inst.ints = c.ints;
  inst.upoints = c.upoints;
  inst.params = ev.params;
  inst.group = *ev.group;
  return inst;
}

std::string gate_failure(const Parameters& p, double tol) {
  if (!p.is_finite()) return "parameters are not finite";
  if (!(p.beta > -4.0)) return "beta <= -4";
  if (!(p.beta_prime > -4.0)) return "beta' <= -4";
  if (std::abs(p.gamma) <= tol) return "gamma = 0";
  return "gamma >= -beta beta'/4";
}

ClassificationResult finish(std::vector<FamilyInstance> matches,
                            std::vector<std::string> unresolved, double tol) {
  ClassificationResult r;
  sort_and_dedupe(matches, tol);
  if (!matches.empty()) {
    r.verdict = Verdict::DiscreteInD;
    r.matches = std::move(matches);
  } else if (!unresolved.empty()) {
    r.verdict = Verdict::Unresolved;
    for (std::size_t i = 0; i < unresolved.size(); ++i) {
      r.reason += (i ? "; " : "") + unresolved[i];
    }
  } else {
    r.verdict = Verdict::NotDiscrete;
  }
  return r;
}

double recip(const ExtExp& t) { return t.reciprocal(); }
bool ge(const ExtExp& t, int k) { return t >= ExtExp::fin(k); }
bool odd(const ExtExp& t) { return gcd(t, 2) == 1; }
bool finite_even_from(const ExtExp& t, int k) {
  return t.is_finite() && t.value() >= k && t.value() % 2 == 0;
}
Rational rec(const ExtExp& t) { return Rational::reciprocal(t); }

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotClassD: return "NotClassD";
    case Verdict::DiscreteInD: return "DiscreteInD";
    case Verdict::NotDiscrete: return "NotDiscrete";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

ClassificationResult classify(const Parameters& p, const SearchBounds& bounds) {
  const double tol = bounds.tol;
  if (!class_d_gate(p, tol)) {
    ClassificationResult r;
    r.verdict = Verdict::NotClassD;
    r.reason = gate_failure(p, tol);
    return r;
  }
  std::vector<FamilyInstance> matches;
  std::vector<std::string> unresolved;
  for (const auto& variant : parameter_variants(p, bounds)) {
    if (!class_d_gate(variant.params, tol)) continue;
    for (const auto& row : family_rows()) {
      for (const bool swap : {false, true}) {
        if (swap && row.symmetric) continue;
        const Parameters target = swap ? variant.params.swapped() : variant.params;
        for (const auto& cand : invert_row(row.id, target, tol)) {
          const auto ev = evaluate_row(row.id, cand.ints, cand.upoints, tol);
          if (!params_match(ev.params, target, tol)) continue;
          if (ev.violations.empty() && ev.group) {
            if (auto big = beyond_bound(cand, bounds.int_bound)) {
              unresolved.push_back("row " + row.id.label() + " needs " + *big +
                                   " beyond the integer bound");
              continue;
            }
            auto inst = make_instance(row.id, cand, ev);
            inst.swapped = swap;
            inst.f_power = swap ? variant.g_power : variant.f_power;
            inst.g_power = swap ? variant.f_power : variant.g_power;
            matches.push_back(std::move(inst));
          } else if (!ev.violations.empty() &&
                     std::all_of(ev.violations.begin(), ev.violations.end(),
                                 [](const Violation& v) { return v.near_boundary; })) {
            unresolved.push_back("row " + row.id.label() + ": '" +
                                 ev.violations.front().condition +
                                 "' holds only up to tolerance");
          }
        }
      }
    }
  }
  return finish(std::move(matches), std::move(unresolved), tol);
}

ClassificationResult two_elliptic_discrete(int n, int m, double gamma,
                                           const SearchBounds& bounds) {
  const double tol = bounds.tol;
  ClassificationResult r;
  if (n < 3 || m < 3) {
    r.verdict = Verdict::NotClassD;
    r.reason = "orders must be at least 3";
    return r;
  }
  const double sn = std::sin(kPi / n);
  const double sm = std::sin(kPi / m);
  const Parameters p{-4.0 * sn * sn, -4.0 * sm * sm, gamma};
  if (!class_d_gate(p, tol)) {
    r.verdict = Verdict::NotClassD;
    r.reason = gate_failure(p, tol);
    return r;
  }

  std::vector<FamilyInstance> matches;
  std::vector<std::string> unresolved;
  auto add = [&](FamilyId id, const IntSlots& ints, const UPointSlots& ups) {
    const auto ev = evaluate_row(id, ints, ups, tol);
    if (ev.violations.empty() && ev.group) {
      matches.push_back(make_instance(id, {ints, ups}, ev));
    } else {
      unresolved.push_back("row " + id.label() + " rejected its own clause data");
    }
  };
  const UPoint un = UPoint::angle(n);
  const UPoint um = UPoint::angle(m);

  // γ ∈ (−∞, −4]
  if (gamma <= -4.0 || approx_equal(gamma, -4.0, tol)) {
    const UPoint w = approx_equal(gamma, -4.0, tol)
                         ? UPoint::zero()
                         : UPoint::length(std::acosh(std::sqrt(-gamma / 4.0)));
    add({1}, {}, {{"u", un}, {"v", um}, {"w", w}});
  } else if (gamma < 0.0) {
    // γ = −4cos²(π/p) with cos(π/p) > sin(π/n) sin(π/m)
    const double c = std::sqrt(-gamma / 4.0);
    const double pr = kPi / std::acos(c);
    if (std::isfinite(pr) && pr < 1e7) {
      const int pi = static_cast<int>(std::lround(pr));
      const double cp = std::cos(kPi / pi);
      if (pi >= 3 && approx_equal(-4.0 * cp * cp, gamma, tol)) {
        if (pi > bounds.int_bound) {
          unresolved.push_back("p=" + std::to_string(pi) + " beyond the integer bound");
        } else if (approx_equal(cp, sn * sm, tol)) {
          unresolved.push_back("cos(pi/p) = sin(pi/n) sin(pi/m) up to tolerance");
        } else if (cp > sn * sm) {
          add({pi % 2 == 0 ? 1 : 2}, {},
              {{"u", un}, {"v", um}, {"w", UPoint::angle(pi)}});
        }
      }
    }
  }
  // γ = −(β+2)², n = m ≥ 7 odd
  if (n == m && n >= 7 && n % 2 == 1 &&
      approx_equal(gamma, -(p.beta + 2.0) * (p.beta + 2.0), tol)) {
    add({3}, {{"n", n}}, {{"u", UPoint::angle(3)}});
  }
  return finish(std::move(matches), std::move(unresolved), tol);
}

GroupSpec canonical_form(const GroupSpec& g) {
  GroupSpec c = g;
  if (g.exponents.size() != schema_arity(g.schema)) return c;
  switch (g.schema) {
    case Schema::GT:
    case Schema::Tet:
      if (c.exponents[1] < c.exponents[0]) std::swap(c.exponents[0], c.exponents[1]);
      break;
    case Schema::H:
      if (c.exponents[2] < c.exponents[1]) std::swap(c.exponents[1], c.exponents[2]);
      break;
    default: break;
  }
  return c;
}

bool group_conditions(const GroupSpec& spec) {
  if (spec.exponents.size() != schema_arity(spec.schema)) {
    throw ArityError(std::string(schema_name(spec.schema)) + " takes " +
                     std::to_string(schema_arity(spec.schema)) + " exponents");
  }
  const GroupSpec g = canonical_form(spec);
  const auto& e = g.exponents;
  const ExtExp two = ExtExp::fin(2);
  switch (g.schema) {
    case Schema::GT:
      return ge(e[0], 3) && e[0] <= e[1] &&
             std::cos(kPi * recip(e[2]) / 2.0) >
                 std::sin(kPi * recip(e[0])) * std::sin(kPi * recip(e[1]));
    case Schema::PH:
      return finite_even_from(e[0], 4) && rec(e[0]) * 2 + rec(e[1]) < Rational{1, 1} &&
             ge(e[2], 3) && odd(e[2]);
    case Schema::H: {
      if (e[0] != two) return false;
      const auto f = [](int k) { return ExtExp::fin(k); };
      if (e[1] == two && e[2] == f(3) && e[3] == f(5)) return true;
      if (e[1] == two && e[2] == f(5) && e[3] == f(3)) return true;
      if (e[1] == f(3) && e[2] == f(3) && ge(e[3], 5) && odd(e[3])) return true;
      return e[1] == f(3) && e[2].is_finite() && e[2].value() >= 5 &&
             std::gcd(e[2].value(), 6) == 1 && e[3] == two;
    }
    case Schema::P:
      return finite_even_from(e[0], 4) && rec(e[0]) + rec(e[1]) < Rational{1, 2} &&
             ge(e[1], 3) && odd(e[1]) && ge(e[2], 3) && odd(e[2]);
    case Schema::Tet6:
      return ge(e[0], 4) && gcd(e[0], 3) == 1;
    case Schema::Tet:
      return ge(e[0], 3) && e[0] <= e[1] && ge(e[2], 3) && odd(e[2]) &&
             std::cos(kPi * recip(e[2])) >
                 std::sin(kPi * recip(e[0])) * std::sin(kPi * recip(e[1]));
    case Schema::GTet1:
      return (finite_even_from(e[0], 4) && odd(e[1]) &&
              rec(e[0]) + rec(e[1]) < Rational{1, 2} && ge(e[2], 2)) ||
             (ge(e[0], 7) && odd(e[0]) && e[1] == ExtExp::fin(3) && e[2] == two);
    case Schema::GTet2:
      return ge(e[0], 3) && odd(e[0]) && ge(e[1], 3) && odd(e[1]) &&
             rec(e[0]) + rec(e[1]) < Rational{1, 2} && ge(e[2], 2);
    case Schema::S2:
      return finite_even_from(e[0], 4) && rec(e[0]) * 2 + rec(e[1]) < Rational{1, 1} &&
             ge(e[2], 2);
    case Schema::S3:
      return ge(e[0], 3) && odd(e[0]) && rec(e[0]) * 2 + rec(e[1]) < Rational{1, 1} &&
             ge(e[2], 2);
    case Schema::R:
      return e[0].is_finite() && e[0].value() >= 5 && std::gcd(e[0].value(), 6) == 1 &&
             e[1] == two && e[2] == two;
  }
  throw ArityError("unknown schema");
}

}  // namespace kleinian
