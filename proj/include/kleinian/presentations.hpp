#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian/ext_exp.hpp"
#include "kleinian/word.hpp"

namespace kleinian {

/// The ten presentation schemas. Tet carries the short form Tet[n,m;q] =
/// Tet[2,2,n;2,q,m]; Tet6 is Tet[2,3,3;2,3,m].
enum class Schema { GT, PH, H, P, Tet, Tet6, GTet1, GTet2, S2, S3, R };

inline constexpr Schema kAllSchemas[] = {
    Schema::GT,    Schema::PH,    Schema::H,  Schema::P,  Schema::Tet, Schema::Tet6,
    Schema::GTet1, Schema::GTet2, Schema::S2, Schema::S3, Schema::R};

std::string_view schema_name(Schema s);
std::optional<Schema> parse_schema(std::string_view name);
/// Number of exponent slots: H takes [p;n,m;q], Tet6 takes [m], the rest three.
std::size_t schema_arity(Schema s);

/// A schema with its exponents, e.g. GT[3,3;3] or H[2;3,5;2].
struct GroupSpec {
  Schema schema;
  std::vector<ExtExp> exponents;

  /// "GT[3,3;3]", "PH[4,3,3]", "H[2;3,5;2]", "Tet[5,4;3]", "Tet6[4]" ...
  std::string to_string() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct Relator {
  Word word;
  ExtExp exponent;
  /// Display form of the base, e.g. "[f,g]" or "(xy^-1)".
  std::string base;

  std::string to_string() const;
  friend bool operator==(const Relator& a, const Relator& b) {
    return a.word == b.word && a.exponent == b.exponent;
  }
};

enum class PresentationForm { Kleinian, Abstract };

struct Presentation {
  std::vector<char> generators;
  std::vector<Relator> relators;
  PresentationForm form = PresentationForm::Kleinian;

  /// "⟨f,g | f^3, g^3, [f,g]^3⟩".
  std::string to_string() const;
};

/// Kleinian-form presentation: finite exponents embedded, ∞ relators kept,
/// ∞̄ relators dropped. Throws ArityError or InvalidExponent.
Presentation build(Schema schema, const std::vector<ExtExp>& exponents);
inline Presentation build(const GroupSpec& g) { return build(g.schema, g.exponents); }

/// Tet[p1,p2,p3;q1,q2,q3].
Presentation build_tet(const std::vector<ExtExp>& exponents);

/// Drops every ∞ and ∞̄ relator.
Presentation to_abstract(const Presentation& p);

}  // namespace kleinian
