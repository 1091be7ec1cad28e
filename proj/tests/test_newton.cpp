#include <doctest.h>

#include <algorithm>

#include "dflab/newton.hpp"
#include "helpers.hpp"

using namespace dflab;
using testing::chart_flag;
using testing::error_kind_of;
using testing::normal_cone;

TEST_CASE("exceptional facet of (x^2) + (t)") {
  auto np = newton_polyhedron(normal_cone(1, {{2}}));
  REQUIRE(np.facets().size() == 1);
  const auto& f = np.facets()[0];
  CHECK(f.normal == IVec{1, 2});
  CHECK(f.order == 2);
  CHECK(f.discrepancy == 2);
  CHECK(f.vertices == std::vector<IVec>{{0, 1}, {2, 0}});
}

TEST_CASE("exceptional facet of m^2 + (t)") {
  auto np = newton_polyhedron(normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(np.facets().size() == 1);
  const auto& f = np.facets()[0];
  CHECK(f.normal == IVec{1, 1, 2});
  CHECK(f.order == 2);
  CHECK(f.discrepancy == 3);
  CHECK(f.vertices == std::vector<IVec>{{0, 0, 1}, {0, 2, 0}, {2, 0, 0}});
}

TEST_CASE("blow-up of a smooth point") {
  auto np = newton_polyhedron(normal_cone(1, {{1}}));
  REQUIRE(np.facets().size() == 1);
  CHECK(np.facets()[0].normal == IVec{1, 1});
  CHECK(np.facets()[0].order == 1);
  CHECK(np.facets()[0].discrepancy == 1);
}

TEST_CASE("two exceptional facets") {
  auto np = newton_polyhedron(chart_flag(1, {{{3}}, {{1}}}));
  REQUIRE(np.facets().size() == 2);
  CHECK(np.facets()[0].normal == IVec{1, 1});
  CHECK(np.facets()[0].order == 2);
  CHECK(np.facets()[0].discrepancy == 1);
  CHECK(np.facets()[0].vertices == std::vector<IVec>{{0, 2}, {1, 1}});
  CHECK(np.facets()[1].normal == IVec{1, 2});
  CHECK(np.facets()[1].order == 3);
  CHECK(np.facets()[1].discrepancy == 2);
  CHECK(np.facets()[1].vertices == std::vector<IVec>{{1, 1}, {3, 0}});
}

TEST_CASE("envelope values") {
  auto np1 = newton_polyhedron(normal_cone(1, {{2}}));
  CHECK(phi_value(np1, {1}) == make_rational(1, 2));
  CHECK(phi_value(np1, {5}) == 0);
  auto np2 = newton_polyhedron(normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(phi_value(np2, {0, 0}) == 1);
  CHECK(phi_value(np2, {make_rational(1, 2), make_rational(1, 2)}) == make_rational(1, 2));
  CHECK(np2.contains({2, 0, 0}));
  CHECK_FALSE(np2.contains({1, 0, 0}));
}

TEST_CASE("envelope is convex, bounded and vanishes on NP(I_0)") {
  auto J = chart_flag(2, {{{4, 0}, {1, 1}, {0, 3}}, {{2, 0}, {0, 1}}});
  auto np = newton_polyhedron(J);
  const Rational N = J.length();
  std::vector<QVec> samples;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 8; ++b) samples.push_back({make_rational(a, 2), make_rational(b, 2)});
  }
  for (const auto& x : samples) {
    Rational v = np.phi(x);
    CHECK(v >= 0);
    CHECK(v <= N);
    // Φ vanishes exactly on the Newton polyhedron of I_0.
    CHECK((v == 0) == np.contains({x[0], x[1], 0}));
  }
  for (std::size_t i = 0; i < samples.size(); i += 7) {
    for (std::size_t j = 3; j < samples.size(); j += 11) {
      for (const auto& lambda : {make_rational(1, 3), make_rational(1, 2)}) {
        QVec mid{lambda * samples[i][0] + (1 - lambda) * samples[j][0], lambda * samples[i][1] + (1 - lambda) * samples[j][1]};
        CHECK(np.phi(mid) <= lambda * np.phi(samples[i]) + (1 - lambda) * np.phi(samples[j]));
      }
    }
  }
  for (const auto& f : np.facets()) {
    for (auto c : f.normal) CHECK(c > 0);
    CHECK(f.order > 0);
  }
}

TEST_CASE("swapping coordinates of a symmetric ideal permutes facets") {
  auto J = normal_cone(2, {{3, 0}, {1, 1}, {0, 3}});
  auto np = newton_polyhedron(J);
  std::vector<IVec> normals, swapped;
  for (const auto& f : np.facets()) {
    normals.push_back(f.normal);
    swapped.push_back({f.normal[1], f.normal[0], f.normal[2]});
  }
  std::sort(swapped.begin(), swapped.end());
  CHECK(normals == swapped);
}

TEST_CASE("normality of the Rees algebra") {
  CHECK(is_normal(normal_cone(1, {{2}})));
  CHECK(is_normal(normal_cone(2, {{2, 0}, {1, 1}, {0, 2}})));
  CHECK(is_normal(chart_flag(1, {{{2}}, {{1}}})));
  CHECK_FALSE(is_normal(chart_flag(1, {{{2}}, {{2}}})));        // (x^2, t^2)
  CHECK_FALSE(is_normal(normal_cone(2, {{2, 0}, {0, 2}})));      // xy is integral
  CHECK_FALSE(is_normal(chart_flag(1, {{{3}}, {{3}}})));         // x^2 t is integral
}

TEST_CASE("newton polyhedra need point-supported chart ideals") {
  CHECK(error_kind_of([] { newton_polyhedron(chart_flag(2, {{{1, 0}}})); }) == ErrorKind::UnsupportedMode);
  CHECK(error_kind_of([] { newton_polyhedron(testing::cox_flag(3, {{{1, 0, 0}, {0, 1, 0}}})); }) ==
        ErrorKind::UnsupportedMode);
}
