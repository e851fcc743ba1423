#include "kleinian/orbifolds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "kleinian/errors.hpp"

namespace kleinian {

std::string VertexClass::to_string() const {
  switch (kind) {
    case Kind::FiniteVertex:
      switch (group) {
        case LocalGroup::Dihedral: return "finite(D" + std::to_string(dihedral_order) + ")";
        case LocalGroup::A4: return "finite(A4)";
        case LocalGroup::S4: return "finite(S4)";
        case LocalGroup::A5: return "finite(A5)";
      }
      break;
    case Kind::RigidCusp:
      return "rigid-cusp(" + std::to_string(triangle[0]) + "," +
             std::to_string(triangle[1]) + "," + std::to_string(triangle[2]) + ")";
    case Kind::Puncture22Inf: return "puncture(2,2,inf)";
    case Kind::BoundaryRemoved: return "boundary-removed";
  }
  return "?";
}

VertexClass classify_fat_vertex(const ExtExp& p, const ExtExp& q, const ExtExp& r) {
  std::array<ExtExp, 3> t{p, q, r};
  std::sort(t.begin(), t.end());
  VertexClass v;
  if (!t[2].is_finite()) {
    const ExtExp two = ExtExp::fin(2);
    v.kind = (t[2].kind() == ExtExp::Kind::Inf && t[0] == two && t[1] == two)
                 ? VertexClass::Kind::Puncture22Inf
                 : VertexClass::Kind::BoundaryRemoved;
    return v;
  }
  const Rational sum = Rational::reciprocal(t[0]) + Rational::reciprocal(t[1]) +
                       Rational::reciprocal(t[2]);
  const int a = t[0].value(), b = t[1].value(), c = t[2].value();
  if (sum > Rational{1, 1}) {
    v.kind = VertexClass::Kind::FiniteVertex;
    if (a <= 2 && b <= 2) {
      v.group = LocalGroup::Dihedral;
      v.dihedral_order = 2 * c;
    } else if (c == 3) {
      v.group = LocalGroup::A4;
    } else if (c == 4) {
      v.group = LocalGroup::S4;
    } else {
      v.group = LocalGroup::A5;
    }
  } else if (sum == Rational{1, 1}) {
    v.kind = VertexClass::Kind::RigidCusp;
    v.triangle = {a, b, c};
  } else {
    v.kind = VertexClass::Kind::BoundaryRemoved;
  }
  return v;
}

std::string to_string(CuspSection s) {
  switch (s) {
    case CuspSection::Annulus: return "annulus";
    case CuspSection::DiscTwoCone2: return "disc-two-cone-2";
    case CuspSection::Torus: return "torus";
    case CuspSection::Pillow: return "pillow";
  }
  return "?";
}

CuspSection classify_cusp_edge(const ExtExp& label,
                               std::optional<std::pair<CuspEnd, CuspEnd>> ends) {
  if (label.kind() != ExtExp::Kind::Inf) {
    throw GraphError("cusp edges carry the label inf, got " + label.to_string());
  }
  if (!ends) return CuspSection::Torus;
  const int folds = (ends->first == CuspEnd::Fold22) + (ends->second == CuspEnd::Fold22);
  switch (folds) {
    case 0: return CuspSection::Annulus;
    case 1: return CuspSection::DiscTwoCone2;
    default: return CuspSection::Pillow;
  }
}

namespace {

struct Incidence {
  bool fat = false;
  std::vector<ExtExp> labels;
};

std::map<int, Incidence> incidences(const SingularGraph& g) {
  std::map<int, Incidence> inc;
  for (const auto& v : g.vertices) {
    if (!inc.emplace(v.id, Incidence{v.fat, {}}).second) {
      throw GraphError("duplicate vertex id " + std::to_string(v.id));
    }
  }
  for (const auto& e : g.edges) {
    auto a = inc.find(e.a);
    auto b = inc.find(e.b);
    if (a == inc.end() || b == inc.end()) {
      throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " has an unknown endpoint");
    }
    a->second.labels.push_back(e.label);
    b->second.labels.push_back(e.label);
  }
  return inc;
}

}  // namespace

void SingularGraph::validate() const {
  const auto inc = incidences(*this);
  for (const auto& [id, v] : inc) {
    if (v.labels.size() != 3) {
      throw GraphError("vertex " + std::to_string(id) + " has degree " +
                       std::to_string(v.labels.size()) + ", expected 3");
    }
    if (!v.fat) {
      Rational sum;
      for (const auto& l : v.labels) sum = sum + Rational::reciprocal(l);
      if (!(sum > Rational{1, 1})) {
        throw GraphError("vertex " + std::to_string(id) +
                         " is not fat but 1/p + 1/q + 1/r <= 1");
      }
    }
  }
  for (const auto& e : edges) {
    if (e.fat && !(inc.at(e.a).fat && inc.at(e.b).fat)) {
      throw GraphError("fat edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " has a non-fat endpoint");
    }
  }
}

GraphAnalysis analyze(const SingularGraph& g) {
  g.validate();
  const auto inc = incidences(g);
  GraphAnalysis out;
  std::map<int, VertexClass> classes;
  for (const auto& v : g.vertices) {
    if (!v.fat) continue;
    const auto& l = inc.at(v.id).labels;
    const auto c = classify_fat_vertex(l[0], l[1], l[2]);
    classes.emplace(v.id, c);
    out.fat_vertices.emplace_back(v.id, c);
  }
  auto end_kind = [&](int id) {
    auto it = classes.find(id);
    if (it != classes.end() && it->second.kind == VertexClass::Kind::Puncture22Inf) {
      return CuspEnd::Fold22;
    }
    return CuspEnd::Boundary;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.label.kind() != ExtExp::Kind::Inf) continue;
    out.cusps.emplace_back(
        i, classify_cusp_edge(e.label, std::pair{end_kind(e.a), end_kind(e.b)}));
  }
  return out;
}

std::string AmbientSpace::to_string() const {
  switch (kind) {
    case Kind::S3: return "S^3";
    case Kind::RP3: return "RP^3";
    case Kind::SeifertS: return "S(" + std::to_string(n) + ")";
    case Kind::S2xS1: return "S^2 x S^1";
  }
  return "?";
}

AmbientSpace ambient_space(Schema s) {
  using K = AmbientSpace::Kind;
  switch (s) {
    case Schema::GT:
    case Schema::PH:
    case Schema::H:
    case Schema::Tet:
    case Schema::Tet6:
    case Schema::P: return {K::S3};
    case Schema::S2:
    case Schema::GTet2: return {K::SeifertS, 2};
    case Schema::S3: return {K::SeifertS, 3};
    case Schema::GTet1: return {K::S2xS1};
    case Schema::R: return {K::RP3};
  }
  return {K::S3};
}

Mat4 gram_matrix(int n, int m, int q) {
  if (n < 2 || m < 2 || q < 2) throw OutOfDomain("gram matrix needs n, m, q >= 2");
  constexpr double pi = std::numbers::pi;
  const double a = -std::cos(pi / q);
  const double b = -std::cos(pi / (2.0 * m));
  const double c = -std::cos(pi / n);
  return {{{1.0, a, 0.0, b}, {a, 1.0, b, 0.0}, {0.0, b, 1.0, c}, {b, 0.0, c, 1.0}}};
}

double gram_det(int n, int m, int q) {
  Mat4 a = gram_matrix(n, m, q);
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace kleinian
