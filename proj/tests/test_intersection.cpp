#include <doctest.h>

#include <random>

#include "dflab/intersection.hpp"
#include "dflab/weights.hpp"
#include "helpers.hpp"

using namespace dflab;
using testing::chart_flag;
using testing::error_kind_of;
using testing::normal_cone;

TEST_CASE("integral of the envelope") {
  CHECK(lower_hull_integral(projective_space(1, 2), normal_cone(1, {{2}}), 1) == 1);
  CHECK(lower_hull_integral(projective_space(2, 2), normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}), 1) ==
        make_rational(2, 3));
  RawFlagIdeal unit{1, IdealMode::chart, 2, {{{0, 0}}}};
  auto trivial = df_intersection(projective_space(2, 2), validate_flag_ideal(unit), 1);
  CHECK(trivial.top_self_intersection == 0);
  CHECK(trivial.df == 0);
}

TEST_CASE("exceptional data") {
  auto a = exceptional_data(normal_cone(1, {{1}}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].normal == IVec{1, 1});
  CHECK(a[0].order == 1);
  CHECK(a[0].discrepancy == 1);
  auto b = exceptional_data(normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].normal == IVec{1, 1, 2});
  CHECK(b[0].discrepancy == 3);
  auto c = exceptional_data(chart_flag(1, {{{3}}, {{1}}}));
  REQUIRE(c.size() == 2);
  CHECK(c[0].order == 2);
  CHECK(c[1].order == 3);
}

TEST_CASE("face degrees") {
  CHECK(face_degree(projective_space(1, 2), normal_cone(1, {{2}}), 1, {1, 2}) == 1);
  CHECK(face_degree(projective_space(2, 2), normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}), 1, {1, 1, 2}) == 2);
  CHECK(face_degree(projective_space(1, 1), normal_cone(1, {{1}}), 1, {1, 1}) == 1);
  CHECK(error_kind_of([] { face_degree(projective_space(1, 1), normal_cone(1, {{1}}), 1, {1, 2}); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("decomposition of the worked examples") {
  auto a = df_intersection(projective_space(1, 2), normal_cone(1, {{2}}), 1);
  CHECK(a.T1 == -4);
  CHECK(a.T2 == 0);
  CHECK(a.T3 == 8);
  CHECK(a.df == 1);
  CHECK(a.top_self_intersection == -2);
  auto b = df_intersection(projective_space(2, 2), normal_cone(2, {{2, 0}, {1, 1}, {0, 2}}), 1);
  CHECK(b.T1 == -48);
  CHECK(b.T2 == 0);
  CHECK(b.T3 == 72);
  CHECK(b.df == 1);
  CHECK(b.top_self_intersection == -4);
  REQUIRE(b.rays.size() == 1);
  CHECK(b.rays[0].discrepancy * b.rays[0].face_degree == 6);
  auto c = df_intersection(projective_space(1, 1), normal_cone(1, {{1}}), 1);
  CHECK(c.T1 == -2);
  CHECK(c.T2 == 0);
  CHECK(c.T3 == 2);
  CHECK(c.df == 0);
}

TEST_CASE("exceptional geometry must fit inside rP") {
  auto J = normal_cone(1, {{3}});
  CHECK(error_kind_of([&] { df_intersection(projective_space(1, 1), J, 1); }) == ErrorKind::ExponentTooSmall);
  CHECK(error_kind_of([&] { df_intersection(projective_space(1, 1), J, 2); }) == ErrorKind::ExponentTooSmall);
  CHECK(df_intersection(projective_space(1, 1), J, 3).df == df_counting(projective_space(1, 1), J, 3).df);
  CHECK(error_kind_of([] { df_intersection(projective_space(2, 1), chart_flag(2, {{{1, 0}}}), 1); }) ==
        ErrorKind::UnsupportedMode);
}

TEST_CASE("pipelines agree on integrally closed inputs") {
  struct Case {
    PolarizedToricVariety V;
    FlagIdeal J;
    Int r;
  };
  std::vector<Case> cases{
      {projective_space(1, 3), chart_flag(1, {{{3}}, {{1}}}), 1},
      {projective_space(2, 2), chart_flag(2, {{{2, 0}, {1, 1}, {0, 2}}, {{1, 0}, {0, 1}}}), 1},
      {testing::f1(), normal_cone(2, {{2, 0}, {0, 1}}), 1},
      {testing::p1xp1(2, 2), normal_cone(2, {{1, 0}, {0, 1}}), 1},
  };
  for (const auto& c : cases) {
    REQUIRE(is_normal(c.J));
    auto dec = df_intersection(c.V, c.J, c.r);
    auto cnt = df_counting(c.V, c.J, c.r);
    CHECK(dec.df == cnt.df);
    const int n = c.V.dimension();
    CHECK(dec.top_self_intersection == Rational(static_cast<long>(factorial(n + 1))) * cnt.A->coefficient(n + 1));
    CHECK_FALSE(dec.normalized_configuration);
  }
}

TEST_CASE("non-normal inputs satisfy the normalization inequality") {
  struct Case {
    PolarizedToricVariety V;
    FlagIdeal J;
  };
  std::vector<Case> cases{
      {projective_space(1, 2), chart_flag(1, {{{2}}, {{2}}})},
      {projective_space(2, 2), normal_cone(2, {{2, 0}, {0, 2}})},
  };
  for (const auto& c : cases) {
    auto dec = df_intersection(c.V, c.J, 1);
    auto cnt = df_counting(c.V, c.J, 1);
    CHECK(dec.normalized_configuration);
    CHECK(dec.df <= cnt.df);
    const int n = c.V.dimension();
    CHECK(dec.top_self_intersection == Rational(static_cast<long>(factorial(n + 1))) * cnt.A->coefficient(n + 1));
  }
}

TEST_CASE("discrepancy term and face degrees are nonnegative") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(1, 4), coin(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IVec a{deg(rng), 0}, b{0, deg(rng)};
    std::vector<IVec> gens{a, b};
    if (coin(rng)) gens.push_back({1, 1});
    auto J = normal_cone(2, gens);
    auto V = projective_space(2, 4);
    auto dec = df_intersection(V, J, 1);
    CHECK(dec.T3 >= 0);
    for (const auto& ray : dec.rays) {
      CHECK(ray.face_degree >= 0);
      CHECK(ray.discrepancy >= 1);
    }
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("randomized agreement between the pipelines") {
  std::mt19937 rng(99);
  std::vector<PolarizedToricVariety> spaces{projective_space(1, 2), projective_space(2, 2), testing::f1(),
                                            testing::p1xp1(2, 2), projective_space(2, 3)};
  std::uniform_int_distribution<std::size_t> pick(0, spaces.size() - 1);
  std::uniform_int_distribution<Int> deg(1, 3), coin(0, 2);
  int equal = 0, strict = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& V = spaces[pick(rng)];
    const auto n = static_cast<std::size_t>(V.dimension());
    std::vector<std::vector<IVec>> gens(1 + coin(rng) % 2);
    for (auto& I : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = deg(rng);
        I.push_back(e);
      }
      if (n == 2 && coin(rng) == 0) I.push_back({1, deg(rng) - 1});
    }
    // Make the chain increasing: I_1 := I_1 + I_0.
    if (gens.size() == 2) gens[1].insert(gens[1].end(), gens[0].begin(), gens[0].end());
    auto J = chart_flag(n, gens);
    if (J.trivial()) continue;
    for (Int r = 1; r <= 4; ++r) {
      DecompositionReport dec;
      try {
        dec = df_intersection(V, J, r);
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ExponentTooSmall);
        continue;
      }
      DFReport cnt;
      try {
        cnt = df_counting(V, J, r);
      } catch (const NotStabilizedError&) {
        continue;
      }
      INFO(J.canonical_key() << " r=" << r);
      const int dim = V.dimension();
      CHECK(dec.top_self_intersection == Rational(static_cast<long>(factorial(dim + 1))) * cnt.A->coefficient(dim + 1));
      if (dec.normalized_configuration) {
        CHECK(dec.df <= cnt.df);
        strict += dec.df < cnt.df;
      } else {
        CHECK(dec.df == cnt.df);
        ++equal;
      }
      break;
    }
  }
  CHECK(equal >= 10);
  CHECK(strict >= 1);
}
