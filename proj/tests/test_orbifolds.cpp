#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "kleinian/discreteness.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/orbifolds.hpp"

using namespace kleinian;
using std::numbers::pi;

namespace {

ExtExp fin(int k) { return ExtExp::fin(k); }

// Laplace expansion along the first row, any size.
double cofactor_det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    sum += (j % 2 ? -1.0 : 1.0) * a[0][j] * cofactor_det(minor);
  }
  return sum;
}

std::vector<std::vector<double>> to_vec(const Mat4& m) {
  std::vector<std::vector<double>> out(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j];
  }
  return out;
}

std::set<std::string> names(const std::vector<CensusEntry>& es) {
  std::set<std::string> out;
  for (const auto& e : es) out.insert(e.group.to_string());
  return out;
}

}  // namespace

TEST_CASE("fat vertices") {
  auto v = classify_fat_vertex(fin(2), fin(3), fin(5));
  CHECK(v.kind == VertexClass::Kind::FiniteVertex);
  CHECK(v.group == LocalGroup::A5);
  CHECK(classify_fat_vertex(fin(3), fin(2), fin(4)).group == LocalGroup::S4);
  CHECK(classify_fat_vertex(fin(3), fin(3), fin(2)).group == LocalGroup::A4);
  v = classify_fat_vertex(fin(2), fin(7), fin(2));
  CHECK(v.group == LocalGroup::Dihedral);
  CHECK(v.dihedral_order == 14);

  v = classify_fat_vertex(fin(2), fin(4), fin(4));
  CHECK(v.kind == VertexClass::Kind::RigidCusp);
  CHECK(v.triangle == std::array<int, 3>{2, 4, 4});
  CHECK(classify_fat_vertex(fin(6), fin(3), fin(2)).to_string() == "rigid-cusp(2,3,6)");
  CHECK(classify_fat_vertex(fin(3), fin(3), fin(3)).kind == VertexClass::Kind::RigidCusp);

  CHECK(classify_fat_vertex(fin(2), fin(3), fin(7)).kind == VertexClass::Kind::BoundaryRemoved);
  CHECK(classify_fat_vertex(fin(2), ExtExp::inf(), fin(2)).kind ==
        VertexClass::Kind::Puncture22Inf);
  CHECK(classify_fat_vertex(fin(2), ExtExp::inf(), fin(3)).kind ==
        VertexClass::Kind::BoundaryRemoved);
  CHECK(classify_fat_vertex(fin(2), ExtExp::bar_inf(), fin(2)).kind ==
        VertexClass::Kind::BoundaryRemoved);
}

TEST_CASE("cusp edges") {
  using E = CuspEnd;
  CHECK(classify_cusp_edge(ExtExp::inf(), std::pair{E::Boundary, E::Boundary}) ==
        CuspSection::Annulus);
  CHECK(classify_cusp_edge(ExtExp::inf(), std::pair{E::Fold22, E::Boundary}) ==
        CuspSection::DiscTwoCone2);
  CHECK(classify_cusp_edge(ExtExp::inf(), std::pair{E::Fold22, E::Fold22}) == CuspSection::Pillow);
  CHECK(classify_cusp_edge(ExtExp::inf(), std::nullopt) == CuspSection::Torus);
  CHECK_FALSE(occurs_in_class_d(CuspSection::Torus));
  CHECK_FALSE(occurs_in_class_d(CuspSection::Pillow));
  CHECK_THROWS_AS(classify_cusp_edge(fin(5), std::pair{E::Boundary, E::Boundary}), GraphError);
  CHECK_THROWS_AS(classify_cusp_edge(ExtExp::bar_inf(), std::nullopt), GraphError);
}

TEST_CASE("singular graphs") {
  // K4 with a cusp edge from a (2,2,inf) vertex to a boundary vertex
  SingularGraph g{{{0, true}, {1, true}, {2, true}, {3, true}},
                  {{0, 1, ExtExp::inf(), false},
                   {0, 2, fin(2), false},
                   {0, 3, fin(2), false},
                   {1, 2, fin(3), false},
                   {1, 3, fin(7), false},
                   {2, 3, fin(3), false}}};
  const auto a = analyze(g);
  REQUIRE(a.cusps.size() == 1);
  CHECK(a.cusps[0].second == CuspSection::DiscTwoCone2);
  CHECK(a.fat_vertices.size() == 4);

  g.edges[1].label = fin(3);
  CHECK(analyze(g).cusps[0].second == CuspSection::Annulus);

  SingularGraph bad = g;
  bad.vertices[2].fat = false;  // labels (3,3,3) at a thin vertex
  CHECK_THROWS_AS(bad.validate(), GraphError);

  bad = g;
  bad.edges.pop_back();
  CHECK_THROWS_AS(bad.validate(), GraphError);

  // theta graph, thin vertices of type (2,2,3), one fat edge
  SingularGraph theta{{{0, false}, {1, false}},
                      {{0, 1, fin(2), false}, {0, 1, fin(2), false}, {0, 1, fin(3), true}}};
  CHECK_THROWS_AS(theta.validate(), GraphError);
  theta.edges[2].fat = false;
  CHECK_NOTHROW(theta.validate());
}

TEST_CASE("ambient spaces") {
  using K = AmbientSpace::Kind;
  CHECK(ambient_space(Schema::GT) == AmbientSpace{K::S3});
  CHECK(ambient_space(Schema::S3) == AmbientSpace{K::SeifertS, 3});
  CHECK(ambient_space(Schema::S2) == AmbientSpace{K::SeifertS, 2});
  CHECK(ambient_space(Schema::GTet2) == AmbientSpace{K::SeifertS, 2});
  CHECK(ambient_space(Schema::GTet1) == AmbientSpace{K::S2xS1});
  CHECK(ambient_space(Schema::R) == AmbientSpace{K::RP3});
  CHECK(ambient_space(Schema::R).to_string() == "RP^3");
  for (Schema s : kAllSchemas) {
    const auto a = ambient_space(s);
    if (a.kind == K::SeifertS) CHECK((a.n == 2 || a.n == 3));
  }
}

TEST_CASE("census") {
  CHECK(names(finite_volume_census(CensusFilter::Cusped, kDefaultCensusBound, Schema::GT)) ==
        std::set<std::string>{"GT[3,3;3]", "GT[4,4;2]", "GT[4,3;2]"});
  CHECK(names(finite_volume_census(CensusFilter::Compact, kDefaultCensusBound, Schema::Tet6)) ==
        std::set<std::string>{"Tet6[4]", "Tet6[5]"});
  CHECK(finite_volume_census(CensusFilter::Compact, kDefaultCensusBound, Schema::R).empty());
  CHECK(finite_volume_census(CensusFilter::Compact, kDefaultCensusBound, Schema::GT).empty());
  CHECK(finite_volume_census(CensusFilter::Cusped, kDefaultCensusBound, Schema::H).empty());

  const auto ph = names(finite_volume_census(CensusFilter::Compact, kDefaultCensusBound, Schema::PH));
  CHECK(ph.count("PH[4,3,3]"));
  CHECK(ph.count("PH[4,5,3]"));

  const auto small = finite_volume_census(CensusFilter::All, 12);
  const auto large = finite_volume_census(CensusFilter::All, 40);
  CHECK(small.size() < large.size());

  for (const auto& e : finite_volume_census(CensusFilter::All)) {
    INFO(e.group.to_string());
    CHECK(group_conditions(e.group));
    for (const auto& x : e.group.exponents) {
      CHECK(x != ExtExp::bar_inf());
      if (e.compact) CHECK(x.is_finite());
    }
  }
}

TEST_CASE("census entries come from family rows") {
  for (const auto& e : finite_volume_census(CensusFilter::All, 15)) {
    INFO(e.group.to_string());
    const auto cands = census_row_candidates(e);
    REQUIRE_FALSE(cands.empty());
    const auto& [id, slots] = cands.front();
    const auto inst = generate_family(id, slots.ints, slots.upoints);
    CHECK(canonical_form(inst.group) == canonical_form(e.group));
    CHECK(class_d_gate(inst.params));
    CHECK(classify(inst.params).verdict == Verdict::DiscreteInD);
  }
}

TEST_CASE("gram determinant") {
  for (int n = 2; n <= 13; ++n) {
    for (int m = 2; m <= 6; ++m) {
      for (int q = 2; q <= 6; ++q) {
        const double oracle = cofactor_det(to_vec(gram_matrix(n, m, q)));
        CHECK(std::abs(gram_det(n, m, q) - oracle) < 1e-14);
      }
    }
  }
  const auto d = gram_matrix(5, 2, 2);
  for (int i = 0; i < 4; ++i) {
    CHECK(d[i][i] == 1.0);
    for (int j = 0; j < 4; ++j) CHECK(d[i][j] == d[j][i]);
  }
  CHECK(gram_det(5, 2, 2) < 0.0);
  CHECK(gram_hyperbolic(7, 2, 2));

  const double d222 = cofactor_det(to_vec(gram_matrix(2, 2, 2)));
  CHECK(gram_det(2, 2, 2) == doctest::Approx(d222));
  CHECK_FALSE(gram_hyperbolic(2, 2, 2));

  // reversing the vertex order permutes rows and columns together
  auto m = to_vec(gram_matrix(11, 3, 4));
  std::vector<std::vector<double>> r(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r[i][j] = m[3 - i][3 - j];
  }
  CHECK(std::abs(cofactor_det(r) - gram_det(11, 3, 4)) < 1e-14);

  CHECK_THROWS_AS(gram_det(1, 2, 2), OutOfDomain);
}
