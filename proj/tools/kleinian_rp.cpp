// kleinian-rp: command-line front end to the kleinian library.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kleinian/discreteness.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/expr.hpp"
#include "kleinian/json_io.hpp"
#include "kleinian/orbifolds.hpp"
#include "kleinian/realization.hpp"

using namespace kleinian;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;

struct Config {
  double tolerance = kDefaultTolerance;
  double relator_tolerance = kRelatorTolerance;
  int int_bound = 200;
  int census_bound = kDefaultCensusBound;
  bool json = false;

  SearchBounds bounds() const { return {tolerance, int_bound, kDefaultOrderBound}; }
};

void emit(const json& j) { std::cout << dump_canonical(j) << "\n"; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string cfmt(std::complex<double> z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return fmt(z.real()) + (std::signbit(im) ? "-" : "+") + fmt(std::abs(im)) + "i";
}

std::string power_label(const std::string& label, const ExtExp& e) {
  const std::string base = label.size() > 1 ? "(" + label + ")" : label;
  return base + "^" + e.to_string();
}

Parameters parse_triple(const std::vector<std::string>& args) {
  return {evaluate_expression(args.at(0)), evaluate_expression(args.at(1)),
          evaluate_expression(args.at(2))};
}

ExtExp parse_exponent(const std::string& s) {
  if (s == "inf") return ExtExp::inf();
  if (s == "barinf") return ExtExp::bar_inf();
  if (s.rfind("fin:", 0) == 0 || s.rfind("inf", 0) == 0 || s.rfind("barinf", 0) == 0) {
    return ExtExp::from_tag(s);
  }
  try {
    std::size_t used = 0;
    const int k = std::stoi(s, &used);
    if (used == s.size()) return ExtExp::fin(k);
  } catch (const std::logic_error&) {
  }
  throw InvalidExponent("cannot parse exponent '" + s + "'");
}

void print_params(const Parameters& p) {
  std::cout << "beta = " << fmt(p.beta) << ", beta' = " << fmt(p.beta_prime)
            << ", gamma = " << fmt(p.gamma) << "\n";
}

void print_instance(const FamilyInstance& inst) {
  std::cout << "  " << inst.describe() << "\n";
  std::cout << "    presentation: " << build(inst.group).to_string() << "\n";
  std::cout << "    ambient space: " << ambient_space(inst.group.schema).to_string() << "\n";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::DiscreteInD: return 0;
    case Verdict::NotDiscrete: return 1;
    case Verdict::NotClassD: return 2;
    case Verdict::Unresolved: return 3;
  }
  return 3;
}

int report(const ClassificationResult& r, const Config& cfg) {
  if (cfg.json) {
    emit(to_json(r));
  } else {
    std::cout << verdict_name(r.verdict);
    if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
    std::cout << "\n";
    for (const auto& m : r.matches) print_instance(m);
  }
  return verdict_exit(r.verdict);
}

std::pair<IntSlots, UPointSlots> parse_slots(const std::vector<std::string>& ints,
                                             const std::vector<std::string>& ups) {
  IntSlots is;
  UPointSlots us;
  auto split = [](const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw OutOfDomain("slot '" + s + "' is not name=value");
    return std::pair{s.substr(0, eq), s.substr(eq + 1)};
  };
  for (const auto& s : ints) {
    auto [k, v] = split(s);
    try {
      is[k] = std::stoi(v);
    } catch (const std::logic_error&) {
      throw OutOfDomain("slot '" + s + "' needs an integer value");
    }
  }
  for (const auto& s : ups) {
    auto [k, v] = split(s);
    us.insert_or_assign(k, UPoint::parse(v));
  }
  return {is, us};
}

int print_verification(const std::vector<FamilyInstance>& instances, const Config& cfg) {
  bool all = !instances.empty();
  json out = json::array();
  for (const auto& inst : instances) {
    const auto rep = verify_relators(inst, cfg.relator_tolerance);
    all = all && rep.passed;
    if (cfg.json) {
      out.push_back({{"instance", to_json(inst)}, {"report", to_json(rep)}});
      continue;
    }
    std::cout << inst.describe() << "\n";
    std::cout << "  coverage: " << (rep.full ? "full" : "partial")
              << ", max deviation: " << rep.max_deviation
              << ", passed: " << (rep.passed ? "true" : "false") << "\n";
    for (const auto& c : rep.checks) {
      std::cout << "  " << power_label(c.label, c.exponent) << ": "
                << (c.kind == RelatorCheck::Kind::Identity
                        ? "deviation " + fmt(c.deviation) +
                              (c.scale > 1.0 ? " (scale " + fmt(c.scale) + ")" : "")
                    : c.kind == RelatorCheck::Kind::Parabolic ? "parabolic, |tr -+ 2| " + fmt(c.deviation)
                                                              : std::string("loxodromic"))
                << (c.ok ? "" : "  FAILED") << "\n";
    }
  }
  if (cfg.json) emit(out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discreteness, presentations and orbifold data for real-parameter "
               "two-generator Kleinian groups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tolerance", cfg.tolerance, "relative tolerance for real matching")
      ->check(CLI::PositiveNumber);
  app.add_option("--relator-tolerance", cfg.relator_tolerance,
                 "tolerance for relator words evaluating to +-I")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.int_bound, "largest integer slot searched")
      ->check(CLI::Range(3, 1000000));
  app.add_option("--census-bound", cfg.census_bound, "largest order in infinite census families")
      ->check(CLI::Range(3, 100000));
  app.add_flag("--json", cfg.json, "machine-readable output");

  std::vector<std::string> triple;
  auto* classify_cmd = app.add_subcommand("classify", "classify a triple (beta, beta', gamma)");
  classify_cmd->add_option("params", triple, "beta beta' gamma (expressions allowed)")
      ->expected(3)
      ->required();

  auto* realize_cmd = app.add_subcommand("realize", "matrix pair with the given parameters");
  realize_cmd->add_option("params", triple, "beta beta' gamma")->expected(3)->required();
  bool with_half_root = false;
  realize_cmd->add_flag("--half-root", with_half_root, "also compute the commutator half root");

  std::string row_label;
  std::vector<std::string> int_slots, upoint_slots;
  auto* verify_cmd = app.add_subcommand(
      "verify", "realize and check relators, for a triple or a family row instance");
  verify_cmd->add_option("params", triple, "beta beta' gamma")->expected(3);
  verify_cmd->add_option("--row", row_label, "family row label, e.g. 3 or 12+");
  verify_cmd->add_option("--int", int_slots, "integer slot, e.g. n=7");
  verify_cmd->add_option("--upoint", upoint_slots, "half-length slot, e.g. u=angle:3");

  auto* generate_cmd = app.add_subcommand("generate", "instantiate a family row");
  generate_cmd->add_option("--row", row_label, "row label")->required();
  generate_cmd->add_option("--int", int_slots, "integer slot, e.g. n=7");
  generate_cmd->add_option("--upoint", upoint_slots, "half-length slot, e.g. u=angle:3");

  int n = 0, m = 0, q = 0;
  std::string gamma_text;
  bool clause3 = false;
  auto* two_cmd = app.add_subcommand("two-elliptic", "criterion for two primitive elliptics");
  two_cmd->add_option("n", n, "order of f")->required();
  two_cmd->add_option("m", m, "order of g")->required();
  auto* gamma_opt = two_cmd->add_option("--gamma", gamma_text, "commutator parameter");
  auto* clause3_opt =
      two_cmd->add_flag("--gamma-from-clause3", clause3, "use gamma = -(beta+2)^2");
  gamma_opt->excludes(clause3_opt);

  bool compact = false, cusped = false, schema_list = false;
  std::string schema_text;
  auto* census_cmd = app.add_subcommand("census", "finite-volume orbifold census");
  auto* compact_opt = census_cmd->add_flag("--compact", compact, "compact entries only");
  census_cmd->add_flag("--cusped", cusped, "cusped entries only")->excludes(compact_opt);
  census_cmd->add_option("--schema", schema_text, "restrict to one schema");
  census_cmd->add_flag("--check", schema_list, "also report the group conditions and ambient space");

  auto* gram_cmd = app.add_subcommand("gram", "Gram determinant of the R[n,m;q] polyhedron");
  gram_cmd->add_option("n", n)->required();
  gram_cmd->add_option("m", m)->required();
  gram_cmd->add_option("q", q)->required();

  std::string gamma_arg;
  auto* reduce_cmd = app.add_subcommand("reduce", "primitive power of a rotation through 2 pi q/n");
  reduce_cmd->add_option("n", n)->required();
  reduce_cmd->add_option("q", q)->required();
  reduce_cmd->add_option("gamma", gamma_arg, "commutator parameter")->required();

  auto* families_cmd = app.add_subcommand("enumerate-families", "list the family registry");

  std::string schema_arg;
  std::vector<std::string> exps;
  bool abstract_form = false;
  auto* pres_cmd = app.add_subcommand("presentation", "build a schema presentation");
  pres_cmd->add_option("schema", schema_arg)->required();
  pres_cmd->add_option("exponents", exps, "integers, inf or barinf")->required();
  pres_cmd->add_flag("--abstract", abstract_form, "drop parabolic relators too");

  std::string graph_file;
  auto* graph_cmd = app.add_subcommand("graph", "validate and classify a singular graph");
  graph_cmd->add_option("file", graph_file, "graph JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      return report(classify(parse_triple(triple), cfg.bounds()), cfg);
    }

    if (*realize_cmd) {
      const auto pair = realize(parse_triple(triple));
      const auto back = recompute_parameters(pair.F, pair.G);
      std::optional<HalfRoot> h;
      if (with_half_root) h = commutator_half_root(pair, cfg.tolerance);
      if (cfg.json) {
        json j = to_json(pair);
        j["recomputed"] = to_json(back);
        if (h) j["half_root"] = to_json(*h);
        emit(j);
      } else {
        auto row = [](const char* name, const Mat2C& M) {
          std::cout << name << " = [[" << cfmt(M.a) << ", " << cfmt(M.b) << "], [" << cfmt(M.c)
                    << ", " << cfmt(M.d) << "]]\n";
        };
        row("F", pair.F);
        row("G", pair.G);
        std::cout << "recomputed: ";
        print_params(back);
        if (pair.reducible) std::cout << "warning: gamma = 0, the pair is reducible\n";
        if (h) {
          row("h", h->h);
          std::cout << "|tr(hG)| = " << h->trace_hg
                    << (h->not_unique ? " (root not unique)" : "") << "\n";
        }
      }
      return 0;
    }

    if (*verify_cmd) {
      std::vector<FamilyInstance> instances;
      if (!row_label.empty()) {
        const auto id = FamilyId::parse(row_label);
        if (!id) throw OutOfDomain("unknown family row '" + row_label + "'");
        auto [is, us] = parse_slots(int_slots, upoint_slots);
        instances.push_back(generate_family(*id, is, us, cfg.tolerance));
      } else if (triple.size() == 3) {
        const auto r = classify(parse_triple(triple), cfg.bounds());
        if (r.verdict != Verdict::DiscreteInD) {
          std::cerr << "nothing to verify: " << verdict_name(r.verdict) << "\n";
          return 1;
        }
        instances = r.matches;
      } else {
        std::cerr << "error: verify needs a triple or --row\n\n" << verify_cmd->help();
        return kExitUsage;
      }
      return print_verification(instances, cfg);
    }

    if (*generate_cmd) {
      const auto id = FamilyId::parse(row_label);
      if (!id) throw OutOfDomain("unknown family row '" + row_label + "'");
      auto [is, us] = parse_slots(int_slots, upoint_slots);
      const auto inst = generate_family(*id, is, us, cfg.tolerance);
      const auto pres = build(inst.group);
      if (cfg.json) {
        json j = to_json(inst);
        j["presentation"] = to_json(pres);
        j["abstract"] = to_json(to_abstract(pres));
        j["ambient_space"] = ambient_space(inst.group.schema).to_string();
        j["group_conditions"] = group_conditions(inst.group);
        emit(j);
      } else {
        std::cout << inst.describe() << "\n";
        print_params(inst.params);
        std::cout << "presentation: " << pres.to_string() << "\n";
        std::cout << "abstract: " << to_abstract(pres).to_string() << "\n";
        std::cout << "ambient space: " << ambient_space(inst.group.schema).to_string() << "\n";
      }
      return 0;
    }

    if (*two_cmd) {
      double gamma = 0.0;
      if (clause3) {
        const double s = std::sin(std::numbers::pi / n);
        const double beta = -4.0 * s * s;
        gamma = -(beta + 2.0) * (beta + 2.0);
      } else if (!gamma_text.empty()) {
        gamma = evaluate_expression(gamma_text);
      } else {
        std::cerr << "error: give --gamma or --gamma-from-clause3\n\n" << two_cmd->help();
        return kExitUsage;
      }
      return report(two_elliptic_discrete(n, m, gamma, cfg.bounds()), cfg);
    }

    if (*census_cmd) {
      std::optional<Schema> schema;
      if (!schema_text.empty()) {
        schema = parse_schema(schema_text);
        if (!schema) throw OutOfDomain("unknown schema '" + schema_text + "'");
      }
      const auto filter = compact ? CensusFilter::Compact
                          : cusped ? CensusFilter::Cusped
                                   : CensusFilter::All;
      for (const auto& e : finite_volume_census(filter, cfg.census_bound, schema)) {
        if (cfg.json) {
          json j = to_json(e);
          if (schema_list) {
            j["group_conditions"] = group_conditions(e.group);
            j["ambient_space"] = ambient_space(e.group.schema).to_string();
          }
          emit(j);
        } else {
          std::cout << e.group.to_string() << " " << (e.compact ? "compact" : "cusped");
          if (schema_list) {
            std::cout << " " << ambient_space(e.group.schema).to_string()
                      << (group_conditions(e.group) ? "" : " CONDITIONS-FAIL");
          }
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*gram_cmd) {
      const double det = gram_det(n, m, q);
      if (cfg.json) {
        emit({{"n", n}, {"m", m}, {"q", q}, {"det", det}, {"hyperbolic", det < 0.0}});
      } else {
        std::cout << "det = " << fmt(det) << "\nhyperbolic: " << (det < 0.0 ? "true" : "false")
                  << "\n";
      }
      return 0;
    }

    if (*reduce_cmd) {
      const auto r = reduce_to_primitive(n, q, evaluate_expression(gamma_arg));
      if (cfg.json) {
        emit({{"power", r.power}, {"gamma", r.gamma}});
      } else {
        std::cout << "r = " << r.power << "\ngamma' = " << fmt(r.gamma) << "\n";
      }
      return 0;
    }

    if (*families_cmd) {
      for (const auto& r : family_rows()) {
        if (cfg.json) {
          emit(to_json(r));
        } else {
          std::cout << r.id.label() << "\t" << r.group_cell << "\tbeta: " << r.beta_cell
                    << "\tgamma: " << r.gamma_cell << "\tbeta': " << r.beta_prime_cell << "\n";
        }
      }
      return 0;
    }

    if (*pres_cmd) {
      const auto schema = parse_schema(schema_arg);
      if (!schema) throw OutOfDomain("unknown schema '" + schema_arg + "'");
      std::vector<ExtExp> e;
      for (const auto& s : exps) e.push_back(parse_exponent(s));
      auto p = build(*schema, e);
      if (abstract_form) p = to_abstract(p);
      if (cfg.json) {
        emit(to_json(p));
      } else {
        std::cout << p.to_string() << "\n";
      }
      return 0;
    }

    if (*graph_cmd) {
      std::ifstream in(graph_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw GraphError(std::string("cannot parse graph file: ") + e.what());
      }
      const auto g = graph_from_json(j);
      const auto a = analyze(g);
      if (cfg.json) {
        json vs = json::array(), cs = json::array();
        for (const auto& [id, c] : a.fat_vertices) vs.push_back({{"id", id}, {"class", c.to_string()}});
        for (const auto& [i, s] : a.cusps) {
          cs.push_back({{"edge", i}, {"section", to_string(s)}, {"class_d", occurs_in_class_d(s)}});
        }
        emit({{"fat_vertices", vs}, {"cusps", cs}});
      } else {
        for (const auto& [id, c] : a.fat_vertices) {
          std::cout << "vertex " << id << ": " << c.to_string() << "\n";
        }
        for (const auto& [i, s] : a.cusps) {
          std::cout << "edge " << i << ": cusp " << to_string(s)
                    << (occurs_in_class_d(s) ? "" : " (does not occur in class D)") << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
