#include "kleinian/presentations.hpp"

#include <array>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "GT", "PH", "H", "P", "Tet", "Tet6", "GTet1", "GTet2", "S2", "S3", "R"};

Word w(std::initializer_list<Letter> letters) { return Word(letters); }

Relator power(char symbol, ExtExp e) {
  return {Word::gen(symbol), e, std::string(1, symbol)};
}

Relator paren(Word word, ExtExp e) {
  std::string base = "(" + word.to_string() + ")";
  return {std::move(word), e, std::move(base)};
}

Relator comm(char a, char b, ExtExp e) {
  return {Word::commutator(Word::gen(a), Word::gen(b)), e,
          std::string("[") + a + "," + b + "]"};
}

void check_slots(Schema s, const std::vector<ExtExp>& e) {
  if (e.size() != schema_arity(s)) {
    throw ArityError(std::string(schema_name(s)) + " takes " +
                     std::to_string(schema_arity(s)) + " exponents, got " +
                     std::to_string(e.size()));
  }
  for (const auto& x : e) {
    if (x.is_finite() && x.value() < 2) {
      throw InvalidExponent("exponent slot " + x.to_string() + " is below 2");
    }
  }
}

Presentation assemble(std::vector<char> gens, std::vector<Relator> rels) {
  Presentation p;
  p.generators = std::move(gens);
  for (auto& r : rels) {
    if (r.exponent.kind() != ExtExp::Kind::BarInf) {
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

}  // namespace

std::string_view schema_name(Schema s) {
  return kNames[static_cast<std::size_t>(s)];
}

std::optional<Schema> parse_schema(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Schema>(i);
  }
  return std::nullopt;
}

std::size_t schema_arity(Schema s) {
  switch (s) {
    case Schema::H: return 4;
    case Schema::Tet6: return 1;
    default: return 3;
  }
}

std::string GroupSpec::to_string() const {
  std::string s(schema_name(schema));
  s += "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) {
      bool semi = false;
      switch (schema) {
        case Schema::GT:
        case Schema::Tet:
        case Schema::R: semi = (i == 2); break;
        case Schema::H: semi = (i == 1 || i == 3); break;
        default: break;
      }
      s += semi ? ";" : ",";
    }
    s += exponents[i].to_string();
  }
  return s + "]";
}

std::string Relator::to_string() const {
  if (exponent == ExtExp::fin(1)) return base;
  return base + "^" + exponent.to_string();
}

std::string Presentation::to_string() const {
  std::string s = "⟨";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) s += ",";
    s += generators[i];
  }
  if (!relators.empty()) {
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i > 0) s += ", ";
      s += relators[i].to_string();
    }
  }
  return s + "⟩";
}

Presentation build_tet(const std::vector<ExtExp>& e) {
  if (e.size() != 6) throw ArityError("Tet[p1,p2,p3;q1,q2,q3] takes 6 exponents");
  for (const auto& x : e) {
    if (x.is_finite() && x.value() < 2) {
      throw InvalidExponent("exponent slot " + x.to_string() + " is below 2");
    }
  }
  return assemble({'x', 'y', 'z'},
                  {power('x', e[0]), power('y', e[1]), power('z', e[2]),
                   paren(w({{'x', 1}, {'y', -1}}), e[5]),
                   paren(w({{'y', 1}, {'z', -1}}), e[3]),
                   paren(w({{'z', 1}, {'x', -1}}), e[4])});
}

Presentation build(Schema schema, const std::vector<ExtExp>& e) {
  check_slots(schema, e);
  const ExtExp two = ExtExp::fin(2);
  const ExtExp one = ExtExp::fin(1);
  switch (schema) {
    case Schema::GT:
      return assemble({'f', 'g'},
                      {power('f', e[0]), power('g', e[1]), comm('f', 'g', e[2])});
    case Schema::PH:
      return assemble({'x', 'y', 'z'},
                      {power('x', e[0]), power('y', two), power('z', two),
                       paren(w({{'x', 1}, {'z', 1}}), two), comm('x', 'y', e[1]),
                       paren(w({{'y', 1}, {'x', 1}, {'y', 1}, {'z', 1}}), e[2])});
    case Schema::H:
      // H[p;n,m;q]
      return assemble({'x', 'y', 's'},
                      {power('s', two), power('x', e[1]), power('y', e[2]),
                       paren(w({{'x', 1}, {'y', -1}}), e[0]),
                       paren(w({{'s', 1}, {'x', 1}, {'s', 1}, {'y', -1}}), e[3]),
                       paren(w({{'s', 1}, {'x', -1}, {'y', 1}}), two)});
    case Schema::P:
      return assemble({'w', 'x', 'y', 'z'},
                      {power('w', e[0]), power('x', two), power('y', two),
                       power('z', two), paren(w({{'w', 1}, {'x', 1}}), two),
                       paren(w({{'w', 1}, {'y', 1}}), two),
                       paren(w({{'y', 1}, {'z', 1}}), two),
                       paren(w({{'z', 1}, {'x', 1}}), e[2]),
                       paren(w({{'z', 1}, {'w', 1}}), e[1])});
    case Schema::Tet:
      return build_tet({two, two, e[0], two, e[2], e[1]});
    case Schema::Tet6:
      return build_tet({two, ExtExp::fin(3), ExtExp::fin(3), two, ExtExp::fin(3), e[0]});
    case Schema::GTet1:
      return assemble({'x', 'y', 'z'},
                      {power('x', e[0]), power('y', two),
                       paren(w({{'x', 1}, {'y', 1}}), e[1]), comm('y', 'z', e[2]),
                       comm('x', 'z', one)});
    case Schema::GTet2:
      return assemble(
          {'x', 'y', 'z'},
          {power('x', e[0]), power('y', two), paren(w({{'x', 1}, {'y', 1}}), e[1]),
           paren(w({{'x', 1}, {'z', -1}, {'y', -1}, {'z', 1}, {'y', 1}}), e[2]),
           comm('x', 'z', one)});
    case Schema::S2:
      return assemble(
          {'x', 'L'},
          {power('x', e[0]), paren(w({{'x', 1}, {'L', 1}, {'x', 1}, {'L', -1}}), e[1]),
           paren(w({{'x', 1}, {'L', 2}, {'x', -1}, {'L', -2}}), e[2])});
    case Schema::S3:
      return assemble(
          {'x', 'L'},
          {power('x', e[0]), paren(w({{'x', 1}, {'L', 1}, {'x', 1}, {'L', -1}}), e[1]),
           paren(w({{'x', 1}, {'L', 1}, {'x', 1}, {'L', 1}, {'x', 1}, {'L', -2}}),
                 e[2])});
    case Schema::R:
      return assemble({'u', 'v'},
                      {paren(w({{'u', 1}, {'v', 1}}), e[0]),
                       paren(w({{'u', 1}, {'v', -1}}), e[1]), comm('u', 'v', e[2])});
  }
  throw ArityError("unknown schema");
}

Presentation to_abstract(const Presentation& p) {
  Presentation out;
  out.generators = p.generators;
  out.form = PresentationForm::Abstract;
  for (const auto& r : p.relators) {
    if (r.exponent.is_finite()) out.relators.push_back(r);
  }
  return out;
}

}  // namespace kleinian
