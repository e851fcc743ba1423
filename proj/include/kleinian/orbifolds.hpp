#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/family.hpp"

namespace kleinian {

// ---------------------------------------------------------------------------
// vertices and cusps of the singular set

enum class LocalGroup { Dihedral, A4, S4, A5 };

struct VertexClass {
  enum class Kind { FiniteVertex, RigidCusp, Puncture22Inf, BoundaryRemoved };
  Kind kind = Kind::BoundaryRemoved;
  /// FiniteVertex only.
  LocalGroup group = LocalGroup::Dihedral;
  /// Order 2n of the dihedral local group (2,2,n).
  int dihedral_order = 0;
  /// RigidCusp only: (2,3,6), (2,4,4) or (3,3,3).
  std::array<int, 3> triangle{};

  /// "finite(A5)", "finite(D10)", "rigid-cusp(2,4,4)", "puncture(2,2,inf)",
  /// "boundary-removed".
  std::string to_string() const;
};

/// Symmetric in its arguments.
VertexClass classify_fat_vertex(const ExtExp& p, const ExtExp& q, const ExtExp& r);

enum class CuspSection { Annulus, DiscTwoCone2, Torus, Pillow };

/// What an ∞-labelled edge runs into at one end.
enum class CuspEnd { Boundary, Fold22 };

std::string to_string(CuspSection s);

/// Cross-section of the cusp around an ∞-labelled edge. `ends` is nullopt for
/// a closed loop without vertices. Throws GraphError when label is not ∞.
CuspSection classify_cusp_edge(const ExtExp& label,
                               std::optional<std::pair<CuspEnd, CuspEnd>> ends);

/// Torus and pillow cusps do not occur for class-D groups.
inline bool occurs_in_class_d(CuspSection s) {
  return s == CuspSection::Annulus || s == CuspSection::DiscTwoCone2;
}

struct GraphVertex {
  int id;
  bool fat;
};

struct GraphEdge {
  int a;
  int b;
  ExtExp label;
  bool fat;
};

struct SingularGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  /// 3-regular, fat edges between fat vertices, 1/p + 1/q + 1/r > 1 at every
  /// other vertex. Throws GraphError.
  void validate() const;
};

struct GraphAnalysis {
  std::vector<std::pair<int, VertexClass>> fat_vertices;
  /// (edge index, section) for every ∞-labelled edge.
  std::vector<std::pair<std::size_t, CuspSection>> cusps;
};

/// Validates, then classifies fat vertices and cusp edges.
GraphAnalysis analyze(const SingularGraph& g);

// ---------------------------------------------------------------------------
// ambient spaces, census, Gram matrix

struct AmbientSpace {
  enum class Kind { S3, RP3, SeifertS, S2xS1 };
  Kind kind;
  /// n of S(n) for SeifertS.
  int n = 0;

  /// "S^3", "RP^3", "S(2)", "S^2 x S^1".
  std::string to_string() const;
  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

AmbientSpace ambient_space(Schema s);

struct CensusEntry {
  GroupSpec group;
  bool compact;
};

enum class CensusFilter { Compact, Cusped, All };

inline constexpr int kDefaultCensusBound = 50;

/// Calls `emit` for every finite-volume entry in census order; infinite
/// families stop at orders above `bound`.
void for_each_census_entry(CensusFilter filter, int bound,
                           const std::function<void(const CensusEntry&)>& emit);

std::vector<CensusEntry> finite_volume_census(
    CensusFilter filter, int bound = kDefaultCensusBound,
    std::optional<Schema> schema = std::nullopt);

/// Family rows (with slot data) whose group is the entry's group, most
/// direct first.
std::vector<std::pair<FamilyId, SlotCandidate>> census_row_candidates(const CensusEntry& e);

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 gram_matrix(int n, int m, int q);
/// det Δ(n,m,q); throws OutOfDomain unless n, m, q >= 2.
double gram_det(int n, int m, int q);
inline bool gram_hyperbolic(int n, int m, int q) { return gram_det(n, m, q) < 0.0; }

}  // namespace kleinian
