#include <cmath>
#include <functional>
#include <numeric>
#include <numbers>
#include <sstream>

#include "kleinian/errors.hpp"
#include "kleinian/family.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt5 = std::sqrt(5.0);

Schema schema_of_row(int row) {
  switch (row) {
    case 1: return Schema::GT;
    case 2: case 3: case 4: case 5: case 6: case 7: case 8: return Schema::Tet;
    case 9: return Schema::Tet6;
    case 10: case 11: case 12: case 13: case 14: case 15: return Schema::H;
    case 16: return Schema::R;
    case 17: return Schema::PH;
    case 18: return Schema::S2;
    case 19: return Schema::P;
    case 20: case 22: return Schema::GTet1;
    case 21: return Schema::S3;
    case 23: case 24: return Schema::GTet2;
  }
  throw OutOfDomain("no family row " + std::to_string(row));
}

ExtExp fin(int k) { return ExtExp::fin(k); }

double sin_pi_over(int n) { return std::sin(kPi / n); }
double cos_pi_over(int n) { return std::cos(kPi / n); }
double beta_of_order(int n) {
  const double s = sin_pi_over(n);
  return -4.0 * s * s;
}

class Evaluator {
 public:
  Evaluator(FamilyId id, const IntSlots& ints, const UPointSlots& ups, double tol)
      : id_(id), ints_(ints), ups_(ups), tol_(tol) {}

  int integer(const std::string& name) {
    auto it = ints_.find(name);
    if (it == ints_.end()) throw MissingSlot(id_.label(), name);
    if (it->second < 2) fail(name + " >= 2");
    return std::max(it->second, 2);
  }

  const UPoint& point(const std::string& name) {
    auto it = ups_.find(name);
    if (it == ups_.end()) throw MissingSlot(id_.label(), name);
    return it->second;
  }

  void require(bool ok, const std::string& condition) {
    if (!ok) fail(condition);
  }

  /// lhs > rhs, flagged near-boundary when it fails only within tolerance.
  /// Equality within tolerance counts as a near-boundary violation either way.
  void require_greater(double lhs, double rhs, const std::string& condition) {
    const bool near = approx_equal(lhs, rhs, tol_);
    if (lhs > rhs && !near) return;
    out.violations.push_back({condition, near});
  }

  void set_params(double beta, double gamma, double beta_prime) {
    out.params = {beta, beta_prime, gamma};
  }

  void set_group(Schema s, std::function<std::vector<ExtExp>()> exps) {
    try {
      out.group = GroupSpec{s, exps()};
    } catch (const Error&) {
      out.group.reset();
    }
  }

  void gate() {
    const auto& p = out.params;
    if (!p.is_finite()) {
      fail("class_d_gate");
      return;
    }
    if (!(p.beta > -4.0)) fail("beta > -4");
    if (!(p.beta_prime > -4.0)) fail("beta' > -4");
    if (std::abs(p.gamma) <= tol_) fail("gamma != 0");
    require_greater(-p.beta * p.beta_prime / 4.0, p.gamma,
                    "gamma < -beta beta'/4");
  }

  RowEvaluation out;

 private:
  void fail(const std::string& condition) {
    out.violations.push_back({condition, false});
  }

  FamilyId id_;
  const IntSlots& ints_;
  const UPointSlots& ups_;
  double tol_;
};

bool at_least(const ExtExp& t, int k) { return t >= ExtExp::fin(k); }
bool even(const ExtExp& t) { return gcd(t, 2) == 2; }
bool odd(const ExtExp& t) { return gcd(t, 2) == 1; }
bool reciprocal_sum_below_half(int n, const ExtExp& t) {
  return Rational::reciprocal(fin(n)) + Rational::reciprocal(t) < Rational{1, 2};
}

/// γ = −4cosh²w branch: rows 1 and 2.
void eval_two_upoint(Evaluator& e, bool even_w) {
  const UPoint& u = e.point("u");
  const UPoint& v = e.point("v");
  const UPoint& w = e.point("w");
  e.set_params(beta_from_upoint(u), -4.0 * w.cosh_sq(), beta_from_upoint(v));
  e.require(at_least(u.t(), 3), "t(u) >= 3");
  e.require(at_least(v.t(), 3), "t(v) >= 3");
  if (even_w) {
    e.require(even(w.t()), "(t(w),2) = 2");
  } else {
    e.require(odd(w.t()), "(t(w),2) = 1");
  }
  e.require_greater(std::cos(kPi * w.t().reciprocal()),
                    std::sin(kPi * u.t().reciprocal()) *
                        std::sin(kPi * v.t().reciprocal()),
                    "cos(pi/t(w)) > sin(pi/t(u)) sin(pi/t(v))");
  if (even_w) {
    e.set_group(Schema::GT, [&] {
      return std::vector{u.t(), v.t(), w.t().divided_by(2)};
    });
  } else {
    e.set_group(Schema::Tet, [&] { return std::vector{u.t(), v.t(), w.t()}; });
  }
}

/// Shared β, γ and u conditions of rows 17–20 and 21, 23.
struct EllipticHead {
  int n;
  double beta;
  double gamma;
  UPoint u;
};

EllipticHead eval_head(Evaluator& e, bool n_even, bool u_even) {
  const int n = e.integer("n");
  const UPoint u = e.point("u");
  const double beta = beta_of_order(n);
  if (n_even) {
    e.require(n >= 4 && n % 2 == 0, "n even, 4 <= n");
  } else {
    e.require(n >= 3 && n % 2 == 1, "n odd, n >= 3");
  }
  e.require(u_even ? even(u.t()) : odd(u.t()),
            u_even ? "(t(u),2) = 2" : "(t(u),2) = 1");
  e.require(reciprocal_sum_below_half(n, u.t()), "1/n + 1/t(u) < 1/2");
  return {n, beta, 4.0 * u.cosh_sq() + beta, u};
}

RowEvaluation evaluate(FamilyId id, const IntSlots& ints, const UPointSlots& ups,
                       double tol) {
  Evaluator e(id, ints, ups, tol);
  const bool plus = id.sign == RowSign::Plus;
  switch (id.row) {
    case 1: eval_two_upoint(e, true); break;
    case 2: eval_two_upoint(e, false); break;
    case 3: {
      const int n = e.integer("n");
      const UPoint& u = e.point("u");
      const double beta = beta_of_order(n);
      e.set_params(beta, -(beta + 2) * (beta + 2),
                   4.0 * (beta + 4.0) * u.cosh_sq() - 4.0);
      e.require(n >= 5 && n % 2 == 1, "n >= 5 odd");
      e.require(at_least(u.t(), 3), "t(u) >= 3");
      e.require(!(n == 5 && u.t() == fin(3)), "{n,t(u)} != {5,3}");
      e.set_group(Schema::Tet, [&] { return std::vector{u.t(), fin(n), fin(3)}; });
      break;
    }
    case 4: {
      const int m = e.integer("m");
      const double gamma = 2.0 * std::cos(2.0 * kPi / m);
      e.set_params(-2.0, gamma, gamma * gamma + 4.0 * gamma);
      e.require(m >= 5 && m % 2 == 1, "m >= 5 odd");
      e.set_group(Schema::Tet, [&] { return std::vector{fin(4), fin(m), fin(3)}; });
      break;
    }
    case 5:
      e.set_params(-3.0, (kSqrt5 - 1) / 2, kSqrt5 - 1);
      e.set_group(Schema::Tet, [] { return std::vector{fin(4), fin(5), fin(3)}; });
      break;
    case 6: {
      const int q = e.integer("q");
      const double gamma = 2.0 * std::cos(2.0 * kPi / q);
      e.set_params(-3.0, gamma, 2.0 * gamma);
      e.require(q >= 7, "q >= 7");
      e.require(std::gcd(q, 4) == 1, "(q,4) = 1");
      e.set_group(Schema::Tet, [&] { return std::vector{fin(3), fin(4), fin(q)}; });
      break;
    }
    case 7: {
      const UPoint& u = e.point("u");
      e.set_params(-3.0, (kSqrt5 - 3) / 2,
                   2.0 * (7.0 + 3.0 * kSqrt5) * u.cosh_sq() - 4.0);
      e.require(at_least(u.t(), 3), "t(u) >= 3");
      e.set_group(Schema::Tet, [&] { return std::vector{fin(3), u.t(), fin(5)}; });
      break;
    }
    case 8:
      e.set_params((kSqrt5 - 5) / 2, (kSqrt5 - 1) / 2, (3 * kSqrt5 - 1) / 2);
      e.set_group(Schema::Tet, [] { return std::vector{fin(3), fin(3), fin(5)}; });
      break;
    case 9: {
      const int m = e.integer("m");
      const double gamma = 2.0 * cos_pi_over(m) - 1.0;
      e.set_params(-3.0, gamma, gamma * gamma + 4.0 * gamma);
      e.require(m >= 4, "m >= 4");
      e.require(std::gcd(m, 3) == 1, "(m,3) = 1");
      e.set_group(Schema::Tet6, [&] { return std::vector{fin(m)}; });
      break;
    }
    case 10: {
      const int n = e.integer("n");
      const double beta = beta_of_order(n);
      const double c = cos_pi_over(n);
      e.set_params(beta, beta + 3.0,
                   (2.0 / beta) * ((beta - 3.0) * c - 2.0 * beta - 3.0));
      e.require(n >= 5, "n >= 5");
      e.require(std::gcd(n, 6) == 1, "(n,6) = 1");
      e.set_group(Schema::H, [&] { return std::vector{fin(2), fin(3), fin(n), fin(2)}; });
      break;
    }
    case 11:
      e.set_params((kSqrt5 - 5) / 2, plus ? (kSqrt5 + 1) / 2 : (kSqrt5 - 1) / 2,
                   3 * (kSqrt5 + 1) / 2);
      e.set_group(Schema::H, [] { return std::vector{fin(2), fin(5), fin(2), fin(3)}; });
      break;
    case 12:
      e.set_params(-3.0, plus ? (kSqrt5 + 1) / 2 : (kSqrt5 - 1) / 2, kSqrt5);
      e.set_group(Schema::H, [] { return std::vector{fin(2), fin(3), fin(2), fin(5)}; });
      break;
    case 13:
      e.set_params((kSqrt5 - 5) / 2, (kSqrt5 - 1) / 2, kSqrt5);
      e.set_group(Schema::H, [] { return std::vector{fin(2), fin(3), fin(2), fin(5)}; });
      break;
    case 14:
      e.set_params((kSqrt5 - 5) / 2, kSqrt5 + 2, (5 * kSqrt5 + 9) / 2);
      e.set_group(Schema::H, [] { return std::vector{fin(2), fin(3), fin(2), fin(5)}; });
      break;
    case 15: {
      const int q = e.integer("q");
      const double gamma = 2.0 * std::cos(2.0 * kPi / q);
      e.set_params(-3.0, gamma, 2.0 * gamma);
      e.require(q >= 8, "q >= 8");
      e.require(std::gcd(q, 4) == 2, "(q,4) = 2");
      e.set_group(Schema::H, [&] {
        return std::vector{fin(2), fin(3), fin(3), fin(q).divided_by(2)};
      });
      break;
    }
    case 16: {
      const int n = e.integer("n");
      const double beta = beta_of_order(n);
      e.set_params(beta, 2.0 * (beta + 3.0),
                   -(6.0 / beta) * (2.0 * cos_pi_over(n) + beta + 2.0));
      e.require(n >= 5, "n >= 5");
      e.require(std::gcd(n, 6) == 1, "(n,6) = 1");
      e.set_group(Schema::R, [&] { return std::vector{fin(n), fin(2), fin(2)}; });
      break;
    }
    case 17:
    case 18:
    case 19:
    case 20: {
      const bool u_even = id.row <= 18;
      const auto h = eval_head(e, true, u_even);
      const UPoint& v = e.point("v");
      const double scale = u_even ? 4.0 / h.gamma : 4.0 * (h.gamma - h.beta) / h.gamma;
      e.set_params(h.beta, h.gamma,
                   scale * v.cosh_sq() - 4.0 * h.gamma / h.beta);
      const bool v_odd = id.row % 2 == 1;
      if (v_odd) {
        e.require(at_least(v.t(), 3) && odd(v.t()), "t(v) >= 3 odd");
      } else {
        e.require(at_least(v.t(), 4) && even(v.t()), "t(v) >= 4, (t(v),2) = 2");
      }
      const int n = h.n;
      const UPoint u = h.u;
      switch (id.row) {
        case 17:
          e.set_group(Schema::PH, [&] {
            return std::vector{fin(n), u.t().divided_by(2), v.t()};
          });
          break;
        case 18:
          e.set_group(Schema::S2, [&] {
            return std::vector{fin(n), u.t().divided_by(2), v.t().divided_by(2)};
          });
          break;
        case 19:
          e.set_group(Schema::P, [&] { return std::vector{fin(n), u.t(), v.t()}; });
          break;
        default:
          e.set_group(Schema::GTet1, [&] {
            return std::vector{fin(n), u.t(), v.t().divided_by(2)};
          });
      }
      break;
    }
    case 21:
    case 23: {
      const bool u_even = id.row == 21;
      const auto h = eval_head(e, false, u_even);
      const UPoint& v = e.point("v");
      const double c = cos_pi_over(h.n);
      const double g = h.gamma;
      const double b = h.beta;
      const double tail = (2.0 / (g * b)) * ((g - b) * (g - b) * c + g * (g + b));
      const double beta_prime = u_even
                                    ? (2.0 / g) * (v.cosh() - c) - tail
                                    : (2.0 * (g - b) / g) * v.cosh() - tail;
      e.set_params(b, g, beta_prime);
      const int n = h.n;
      const UPoint u = h.u;
      if (u_even) {
        e.set_group(Schema::S3, [&] {
          return std::vector{fin(n), u.t().divided_by(2), v.t()};
        });
      } else {
        e.set_group(Schema::GTet2, [&] { return std::vector{fin(n), u.t(), v.t()}; });
      }
      break;
    }
    case 22: {
      const int n = e.integer("n");
      const double gamma = 2.0 * std::cos(2.0 * kPi / n) - 1.0;
      e.set_params(-3.0, gamma, (2.0 / gamma) * (gamma * gamma + 2.0 * gamma + 2.0));
      e.require(n >= 7 && n % 2 == 1, "n >= 7 odd");
      e.set_group(Schema::GTet1, [&] { return std::vector{fin(n), fin(3), fin(2)}; });
      break;
    }
    case 24: {
      const int n = e.integer("n");
      const UPoint& v = e.point("v");
      const double b = beta_of_order(n);
      const double c = cos_pi_over(n);
      e.set_params(b, (b + 4.0) * (b + 1.0),
                   (2.0 * (b + 2.0) * (b + 2.0) / (b + 1.0)) * (v.cosh() - c) -
                       (2.0 / b) * (b * b + 6.0 * b + 4.0));
      e.require(n >= 7 && n % 2 == 1, "n >= 7 odd");
      e.set_group(Schema::GTet2, [&] { return std::vector{fin(n), fin(3), v.t()}; });
      break;
    }
    default:
      throw OutOfDomain("no family row " + std::to_string(id.row));
  }
  e.gate();
  return std::move(e.out);
}

// ---------------------------------------------------------------------------
// inversion helpers

std::optional<int> rounded(double x) {
  if (!std::isfinite(x) || x < 1.5 || x > 1e7) return std::nullopt;
  return static_cast<int>(std::lround(x));
}

/// n with β = −4 sin²(π/n).
std::optional<int> order_from_beta(double beta) {
  const double c = 1.0 + beta / 4.0;
  if (!(c > 0.0) || !(c < 1.0)) return std::nullopt;
  return rounded(kPi / std::acos(std::sqrt(c)));
}

/// k with x = cos(num/k).
std::optional<int> index_from_cos(double num, double x) {
  if (!std::isfinite(x) || x >= 1.0 || x < -1.0) return std::nullopt;
  return rounded(num / std::acos(x));
}

}  // namespace

// ---------------------------------------------------------------------------

Schema FamilyId::schema() const { return schema_of_row(row); }

std::string FamilyId::label() const {
  std::string s = std::to_string(row);
  if (sign == RowSign::Plus) s += "+";
  if (sign == RowSign::Minus) s += "-";
  return s;
}

std::optional<FamilyId> FamilyId::parse(const std::string& label) {
  for (const auto& r : family_rows()) {
    if (r.id.label() == label) return r.id;
  }
  return std::nullopt;
}

std::string FamilyInstance::describe() const {
  std::ostringstream os;
  os << "row " << id.label() << " " << group.to_string();
  std::vector<std::string> parts;
  for (const auto& [k, v] : ints) parts.push_back(k + "=" + std::to_string(v));
  for (const auto& [k, v] : upoints) parts.push_back(k + "=" + v.to_string());
  if (!parts.empty()) {
    os << " {";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
    os << "}";
  }
  if (swapped) os << " (f,g exchanged)";
  if (f_power != 1) os << " (f -> f^" << f_power << ")";
  if (g_power != 1) os << " (g -> g^" << g_power << ")";
  return os.str();
}

bool FamilyInstance::same_data(const FamilyInstance& o, double tol) const {
  if (id != o.id || ints != o.ints || upoints.size() != o.upoints.size()) return false;
  for (const auto& [k, v] : upoints) {
    auto it = o.upoints.find(k);
    if (it == o.upoints.end() || !v.same_as(it->second, tol)) return false;
  }
  return true;
}

const std::vector<RowInfo>& family_rows() {
  static const std::vector<RowInfo> rows = [] {
    using R = RowSign;
    const std::string elliptic = "-4 sin^2(pi/n)";
    std::vector<RowInfo> v = {
        {{1}, {}, {"u", "v", "w"}, "4 sinh^2 u, t(u) >= 3",
         "-4 cosh^2 w, (t(w),2) = 2", "4 sinh^2 v, t(v) >= 3",
         "GT[t(u),t(v);t(w)/2]", true},
        {{2}, {}, {"u", "v", "w"}, "4 sinh^2 u, t(u) >= 3",
         "-4 cosh^2 w, (t(w),2) = 1", "4 sinh^2 v, t(v) >= 3",
         "Tet[t(u),t(v);t(w)]", true},
        {{3}, {"n"}, {"u"}, elliptic + ", n >= 5 odd", "-(beta+2)^2",
         "4(beta+4) cosh^2 u - 4, t(u) >= 3, {n,t(u)} != {5,3}",
         "Tet[t(u),n;3]"},
        {{4}, {"m"}, {}, "-2", "2 cos(2pi/m), m >= 5 odd", "gamma^2 + 4 gamma",
         "Tet[4,m;3]"},
        {{5}, {}, {}, "-3", "(sqrt5-1)/2", "sqrt5-1", "Tet[4,5;3]"},
        {{6}, {"q"}, {}, "-3", "2 cos(2pi/q), q >= 7, (q,4) = 1", "2 gamma",
         "Tet[3,4;q]"},
        {{7}, {}, {"u"}, "-3", "(sqrt5-3)/2",
         "2(7+3 sqrt5) cosh^2 u - 4, t(u) >= 3", "Tet[3,t(u);5]"},
        {{8}, {}, {}, "(sqrt5-5)/2", "(sqrt5-1)/2", "(3 sqrt5-1)/2", "Tet[3,3;5]"},
        {{9}, {"m"}, {}, "-3", "2 cos(pi/m) - 1, m >= 4, (m,3) = 1",
         "gamma^2 + 4 gamma", "Tet[2,3,3;2,3,m]"},
        {{10}, {"n"}, {}, elliptic + ", n >= 5, (n,6) = 1", "beta + 3",
         "(2/beta)((beta-3) cos(pi/n) - 2 beta - 3)", "H[2;3,n;2]"},
        {{11, R::Plus}, {}, {}, "(sqrt5-5)/2", "(sqrt5+1)/2", "3(sqrt5+1)/2",
         "H[2;5,2;3]"},
        {{11, R::Minus}, {}, {}, "(sqrt5-5)/2", "(sqrt5-1)/2", "3(sqrt5+1)/2",
         "H[2;5,2;3]"},
        {{12, R::Plus}, {}, {}, "-3", "(sqrt5+1)/2", "sqrt5", "H[2;3,2;5]"},
        {{12, R::Minus}, {}, {}, "-3", "(sqrt5-1)/2", "sqrt5", "H[2;3,2;5]"},
        {{13}, {}, {}, "(sqrt5-5)/2", "(sqrt5-1)/2", "sqrt5", "H[2;3,2;5]"},
        {{14}, {}, {}, "(sqrt5-5)/2", "sqrt5+2", "(5 sqrt5+9)/2", "H[2;3,2;5]"},
        {{15}, {"q"}, {}, "-3", "2 cos(2pi/q), q >= 8, (q,4) = 2", "2 gamma",
         "H[2;3,3;q/2]"},
        {{16}, {"n"}, {}, elliptic + ", n >= 5, (n,6) = 1", "2(beta+3)",
         "-(6/beta)(2 cos(pi/n) + beta + 2)", "R[n,2;2]"},
        {{17}, {"n"}, {"u", "v"}, elliptic + ", n even, 4 <= n",
         "4 cosh^2 u + beta, (t(u),2) = 2, 1/n + 1/t(u) < 1/2",
         "(4/gamma) cosh^2 v - 4 gamma/beta, t(v) >= 3 odd", "PH[n,t(u)/2,t(v)]"},
        {{18}, {"n"}, {"u", "v"}, elliptic + ", n even, 4 <= n",
         "4 cosh^2 u + beta, (t(u),2) = 2, 1/n + 1/t(u) < 1/2",
         "(4/gamma) cosh^2 v - 4 gamma/beta, t(v) >= 4, (t(v),2) = 2",
         "S2[n,t(u)/2,t(v)/2]"},
        {{19}, {"n"}, {"u", "v"}, elliptic + ", n even, 4 <= n",
         "4 cosh^2 u + beta, (t(u),2) = 1, 1/n + 1/t(u) < 1/2",
         "(4(gamma-beta)/gamma) cosh^2 v - 4 gamma/beta, t(v) >= 3 odd",
         "P[n,t(u),t(v)]"},
        {{20}, {"n"}, {"u", "v"}, elliptic + ", n even, 4 <= n",
         "4 cosh^2 u + beta, (t(u),2) = 1, 1/n + 1/t(u) < 1/2",
         "(4(gamma-beta)/gamma) cosh^2 v - 4 gamma/beta, t(v) >= 4, (t(v),2) = 2",
         "GTet1[n,t(u),t(v)/2]"},
        {{21}, {"n"}, {"u", "v"}, elliptic + ", n odd, n >= 3",
         "4 cosh^2 u + beta, (t(u),2) = 2, 1/n + 1/t(u) < 1/2",
         "(2/gamma)(cosh v - cos(pi/n)) - (2/(gamma beta))((gamma-beta)^2 "
         "cos(pi/n) + gamma(gamma+beta))",
         "S3[n,t(u)/2,t(v)]"},
        {{22}, {"n"}, {}, "-3", "2 cos(2pi/n) - 1, n >= 7 odd",
         "(2/gamma)(gamma^2 + 2 gamma + 2)", "GTet1[n,3,2]"},
        {{23}, {"n"}, {"u", "v"}, elliptic + ", n odd, n >= 3",
         "4 cosh^2 u + beta, (t(u),2) = 1, 1/n + 1/t(u) < 1/2",
         "(2(gamma-beta)/gamma) cosh v - (2/(gamma beta))((gamma-beta)^2 "
         "cos(pi/n) + gamma(gamma+beta))",
         "GTet2[n,t(u),t(v)]"},
        {{24}, {"n"}, {"v"}, elliptic + ", n odd, n >= 7", "(beta+4)(beta+1)",
         "(2(beta+2)^2/(beta+1))(cosh v - cos(pi/n)) - (2/beta)(beta^2 + 6 beta "
         "+ 4)",
         "GTet2[n,3,t(v)]"},
    };
    return v;
  }();
  return rows;
}

const RowInfo& row_info(FamilyId id) {
  for (const auto& r : family_rows()) {
    if (r.id == id) return r;
  }
  throw OutOfDomain("no family row " + id.label());
}

RowEvaluation evaluate_row(FamilyId id, const IntSlots& ints,
                           const UPointSlots& upoints, double tol) {
  row_info(id);
  return evaluate(id, ints, upoints, tol);
}

FamilyInstance generate_family(FamilyId id, const IntSlots& ints,
                               const UPointSlots& upoints, double tol) {
  const RowInfo& info = row_info(id);
  auto ev = evaluate(id, ints, upoints, tol);
  if (!ev.violations.empty()) {
    throw ConditionViolated(id.label(), ev.violations.front().condition);
  }
  if (!ev.group) throw ConditionViolated(id.label(), info.group_cell);
  FamilyInstance inst;
  inst.id = id;
  for (const auto& s : info.int_slots) inst.ints[s] = ints.at(s);
  for (const auto& s : info.upoint_slots) inst.upoints.emplace(s, upoints.at(s));
  inst.params = ev.params;
  inst.group = *ev.group;
  return inst;
}

std::vector<SlotCandidate> invert_row(FamilyId id, const Parameters& p, double tol) {
  std::vector<SlotCandidate> out;
  const double beta = p.beta;
  const double bp = p.beta_prime;
  const double gamma = p.gamma;
  auto from_beta_upoint = [&](double b) { return upoint_from_cosh_sq(1.0 + b / 4.0, tol); };

  switch (id.row) {
    case 1:
    case 2: {
      auto u = from_beta_upoint(beta);
      auto v = from_beta_upoint(bp);
      auto w = upoint_from_cosh_sq(-gamma / 4.0, tol);
      if (u && v && w) out.push_back({{}, {{"u", *u}, {"v", *v}, {"w", *w}}});
      break;
    }
    case 3: {
      auto n = order_from_beta(beta);
      if (!n || !(beta + 4.0 > 0.0)) break;
      auto u = upoint_from_cosh_sq((bp + 4.0) / (4.0 * (beta + 4.0)), tol);
      if (u) out.push_back({{{"n", *n}}, {{"u", *u}}});
      break;
    }
    case 4:
      if (auto m = index_from_cos(2.0 * kPi, gamma / 2.0)) out.push_back({{{"m", *m}}, {}});
      break;
    case 6:
    case 15:
      if (auto q = index_from_cos(2.0 * kPi, gamma / 2.0)) out.push_back({{{"q", *q}}, {}});
      break;
    case 7:
      if (auto u = upoint_from_cosh_sq((bp + 4.0) / (2.0 * (7.0 + 3.0 * kSqrt5)), tol)) {
        out.push_back({{}, {{"u", *u}}});
      }
      break;
    case 9:
      if (auto m = index_from_cos(kPi, (gamma + 1.0) / 2.0)) out.push_back({{{"m", *m}}, {}});
      break;
    case 10:
    case 16:
      if (auto n = order_from_beta(beta)) out.push_back({{{"n", *n}}, {}});
      break;
    case 17:
    case 18:
    case 19:
    case 20:
    case 21:
    case 23: {
      auto n = order_from_beta(beta);
      if (!n) break;
      auto u = upoint_from_cosh_sq((gamma - beta) / 4.0, tol);
      if (!u) break;
      const double b = beta_of_order(*n);
      const double g = gamma;
      std::optional<UPoint> v;
      if (id.row <= 18) {
        v = upoint_from_cosh_sq((bp + 4.0 * g / b) * g / 4.0, tol);
      } else if (id.row <= 20) {
        v = upoint_from_cosh_sq((bp + 4.0 * g / b) * g / (4.0 * (g - b)), tol);
      } else {
        const double c = cos_pi_over(*n);
        const double tail = (2.0 / (g * b)) * ((g - b) * (g - b) * c + g * (g + b));
        v = id.row == 21 ? upoint_from_cosh((bp + tail) * g / 2.0 + c, tol)
                         : upoint_from_cosh((bp + tail) * g / (2.0 * (g - b)), tol);
      }
      if (v) out.push_back({{{"n", *n}}, {{"u", *u}, {"v", *v}}});
      break;
    }
    case 22:
      if (auto n = index_from_cos(2.0 * kPi, (gamma + 1.0) / 2.0)) {
        out.push_back({{{"n", *n}}, {}});
      }
      break;
    case 24: {
      auto n = order_from_beta(beta);
      if (!n) break;
      const double b = beta_of_order(*n);
      if (std::abs(b + 1.0) < 1e-12 || std::abs(b + 2.0) < 1e-12) break;
      const double c = cos_pi_over(*n);
      const double cv = (bp + (2.0 / b) * (b * b + 6.0 * b + 4.0)) * (b + 1.0) /
                            (2.0 * (b + 2.0) * (b + 2.0)) +
                        c;
      if (auto v = upoint_from_cosh(cv, tol)) out.push_back({{{"n", *n}}, {{"v", *v}}});
      break;
    }
    default:
      // Rows without free data: the forward check alone decides.
      out.push_back({});
  }
  return out;
}

}  // namespace kleinian
