#pragma once

#include <string>

#include <json.hpp>

#include "kleinian/discreteness.hpp"
#include "kleinian/orbifolds.hpp"
#include "kleinian/presentations.hpp"
#include "kleinian/realization.hpp"

namespace kleinian {

using json = nlohmann::json;

json to_json(const Parameters& p);
json to_json(const ExtExp& e);
json to_json(const GroupSpec& g);
json to_json(const Presentation& p);
json to_json(const FamilyInstance& inst);
json to_json(const ClassificationResult& r);
/// [[re, im], [re, im], [re, im], [re, im]] in row order a, b, c, d.
json to_json(const Mat2C& m);
json to_json(const MatrixPair& pair);
json to_json(const VerificationReport& rep);
json to_json(const HalfRoot& h);
json to_json(const CensusEntry& e);
json to_json(const VertexClass& v);
json to_json(const RowInfo& r);

Parameters parameters_from_json(const json& j);
Mat2C mat_from_json(const json& j);

/// {vertices:[{id,fat}], edges:[{a,b,label,fat}]}, label an integer, "inf" or
/// "barinf". Throws GraphError.
SingularGraph graph_from_json(const json& j);

/// Sorted keys, shortest round-trip floats, no whitespace.
std::string dump_canonical(const json& j);

}  // namespace kleinian
