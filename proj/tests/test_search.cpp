#include <doctest.h>

#include <algorithm>
#include <set>

#include "dflab/search.hpp"
#include "dflab/weights.hpp"
#include "helpers.hpp"

using namespace dflab;

namespace {

std::vector<std::string> keys(const std::vector<FlagIdeal>& v) {
  std::vector<std::string> out;
  for (const auto& J : v) out.push_back(J.canonical_key());
  return out;
}

}  // namespace

TEST_CASE("enumeration in one variable") {
  SearchBounds b;
  b.N_max = 1;
  b.d_max = 2;
  auto all = enumerate_flag_ideals(projective_space(1, 1), b);
  CHECK(keys(all) == std::vector<std::string>{"chart;N=1;[[1]]", "chart;N=1;[[2]]"});
}

TEST_CASE("empty bounds") {
  SearchBounds b;
  b.d_max = 0;
  CHECK(enumerate_flag_ideals(projective_space(2, 1), b).empty());
  auto report = search_destabilizers(projective_space(2, 1), b);
  CHECK(report.candidates == 0);
  CHECK_FALSE(report.min_df.has_value());
}

TEST_CASE("enumerated chains are valid, distinct and nested") {
  SearchBounds b;
  b.N_max = 2;
  b.d_max = 2;
  b.g_max = 3;
  auto all = enumerate_flag_ideals(projective_space(2, 2), b);
  auto k = keys(all);
  CHECK(std::set<std::string>(k.begin(), k.end()).size() == k.size());
  CHECK(std::is_sorted(k.begin(), k.end()));
  for (const auto& J : all) {
    CHECK(J.support() == SupportClass::point_supported);
    for (int j = 0; j + 1 < J.length(); ++j) CHECK(J.ideal(j + 1).contains(J.ideal(j)));
    CHECK_FALSE(J.ideal(J.length() - 1).is_unit());
  }
  // Re-validating the raw form is the identity.
  for (const auto& J : all) CHECK(validate_flag_ideal(J.raw()).canonical_key() == J.canonical_key());
}

TEST_CASE("enlarging bounds never removes candidates") {
  auto V = projective_space(2, 1);
  SearchBounds small, large;
  small.d_max = 2;
  small.g_max = 2;
  large.d_max = 3;
  large.g_max = 3;
  large.N_max = 2;
  auto a = keys(enumerate_flag_ideals(V, small));
  auto b = keys(enumerate_flag_ideals(V, large));
  CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
}

TEST_CASE("cox enumeration deduplicates ideal sheaves") {
  SearchBounds b;
  b.mode = IdealMode::cox;
  b.d_max = 1;
  b.g_max = 3;
  auto all = enumerate_flag_ideals(projective_space(2, 1), b);
  // Nonunit sheaves generated by variables of P^2: three lines and three points.
  CHECK(all.size() == 6);
  auto charts = vertex_charts(projective_space(2, 1));
  std::set<std::vector<MonomialIdeal>> sheaves;
  for (const auto& J : all) {
    std::vector<MonomialIdeal> local;
    for (const auto& c : charts) local.push_back(J.ideal(0).restrict_to(c.facets));
    sheaves.insert(local);
  }
  CHECK(sheaves.size() == all.size());
}

TEST_CASE("search on the projective line") {
  SearchBounds b;
  b.N_max = 1;
  b.d_max = 2;
  b.r_list = {1, 2};
  auto report = search_destabilizers(projective_space(1, 1), b);
  CHECK(report.candidates == 2);
  CHECK(report.results.size() == 4);
  REQUIRE(report.min_df.has_value());
  CHECK(*report.min_df == 0);
  CHECK(report.negatives == 0);
  CHECK(report.mismatches.empty());
  REQUIRE_FALSE(report.witnesses.empty());
  CHECK(report.witnesses[0].key == "chart;N=1;[[1]]");
  // (x^2)+(t) at r = 1 is undecided rather than dropped.
  REQUIRE(report.undecided.size() == 1);
  CHECK(report.undecided[0].key == "chart;N=1;[[2]]");
  CHECK(report.undecided[0].r == 1);
  // Witnesses re-evaluate to the reported value.
  for (const auto& w : report.witnesses) CHECK(df_counting(projective_space(1, 1), w.ideal, w.r).df == *report.min_df);
}

TEST_CASE("search is deterministic across worker counts and resumable") {
  SearchBounds b;
  b.N_max = 2;
  b.d_max = 2;
  b.g_max = 2;
  b.r_list = {1, 2};
  auto V = projective_space(2, 1);
  SearchOptions one;
  one.workers = 1;
  std::vector<std::string> streamed;
  one.on_result = [&](const CandidateResult& c) { streamed.push_back(result_key(c.key, c.r)); };
  auto a = search_destabilizers(V, b, one);
  SearchOptions many;
  many.workers = 4;
  std::vector<std::string> streamed_many;
  many.on_result = [&](const CandidateResult& c) { streamed_many.push_back(result_key(c.key, c.r)); };
  auto c = search_destabilizers(V, b, many);
  CHECK(streamed == streamed_many);
  REQUIRE(a.results.size() == c.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].key == c.results[i].key);
    CHECK(a.results[i].df == c.results[i].df);
  }
  CHECK(a.min_df == c.min_df);

  SearchOptions resumed;
  for (std::size_t i = 0; i < a.results.size() / 2; ++i) {
    resumed.completed[result_key(a.results[i].key, a.results[i].r)] = a.results[i];
  }
  std::size_t fresh = 0;
  resumed.on_result = [&](const CandidateResult&) { ++fresh; };
  auto d = search_destabilizers(V, b, resumed);
  CHECK(fresh == a.results.size() - a.results.size() / 2);
  CHECK(d.min_df == a.min_df);
  CHECK(d.witnesses.size() == a.witnesses.size());
  CHECK(d.negatives == a.negatives);
}

TEST_CASE("a lattice symmetry leaves the DF multiset unchanged") {
  // Swapping x and y is a symmetry of the standard simplex.
  SearchBounds b;
  b.d_max = 2;
  b.g_max = 3;
  b.r_list = {2};
  auto V = projective_space(2, 1);
  auto report = search_destabilizers(V, b);
  std::multiset<std::string> dfs, swapped;
  for (const auto& res : report.results) {
    if (!res.df) continue;
    dfs.insert(to_string(*res.df));
    std::vector<IVec> gens;
    const auto I0 = res.ideal.ideal(0);
    for (const auto& g : I0.generators()) gens.push_back({g[1], g[0]});
    swapped.insert(to_string(df_counting(V, testing::normal_cone(2, gens), 2).df));
  }
  CHECK(dfs == swapped);
}

TEST_CASE("preset deformations to the normal cone") {
  auto J = preset_normal_cone(minimalize(2, {{1, 0}, {0, 1}}));
  CHECK(J.length() == 1);
  CHECK(J.ideal(0).generators() == std::vector<IVec>{{0, 1}, {1, 0}});
}
