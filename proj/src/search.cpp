#include "dflab/search.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "dflab/error.hpp"
#include "dflab/intersection.hpp"
#include "dflab/newton.hpp"
#include "dflab/parallel.hpp"

namespace dflab {

namespace {

std::vector<IVec> monomials_up_to(std::size_t vars, int d_max) {
  std::vector<IVec> out;
  IVec e(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == vars) {
      int deg = d_max - left;
      if (deg >= 1) out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, d_max);
  std::sort(out.begin(), out.end());
  return out;
}

bool comparable(const IVec& a, const IVec& b) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) le = false;
    if (a[i] < b[i]) ge = false;
  }
  return le || ge;
}

// Antichains of 1..g_max monomials, each yielding a minimal generating set.
std::vector<MonomialIdeal> antichain_ideals(std::size_t vars, int d_max, int g_max) {
  auto monos = monomials_up_to(vars, d_max);
  std::vector<MonomialIdeal> out;
  std::vector<IVec> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!current.empty()) out.push_back(minimalize(vars, current));
    if (static_cast<int>(current.size()) == g_max) return;
    for (std::size_t i = start; i < monos.size(); ++i) {
      bool ok = std::none_of(current.begin(), current.end(),
                             [&](const IVec& c) { return comparable(c, monos[i]); });
      if (!ok) continue;
      current.push_back(monos[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

// Chains of length 1..N_max, each ideal containing its predecessor.
template <class Contains>
void for_each_chain(std::size_t count, int N_max, Contains&& contains,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> chain;
  std::function<void()> rec = [&] {
    if (!chain.empty()) fn(chain);
    if (static_cast<int>(chain.size()) == N_max) return;
    for (std::size_t i = 0; i < count; ++i) {
      if (!chain.empty() && !contains(i, chain.back())) continue;
      chain.push_back(i);
      rec();
      chain.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<FlagIdeal> enumerate_flag_ideals(const PolarizedToricVariety& variety,
                                             const SearchBounds& bounds) {
  std::vector<FlagIdeal> out;
  if (bounds.N_max < 1 || bounds.d_max < 1 || bounds.g_max < 1) return out;
  std::set<std::string> seen;
  auto emit = [&](const RawFlagIdeal& raw) {
    FlagIdeal J = validate_flag_ideal(raw);
    if (J.trivial()) return;
    if (seen.insert(J.canonical_key()).second) out.push_back(std::move(J));
  };

  if (bounds.mode == IdealMode::chart) {
    const auto n = static_cast<std::size_t>(variety.dimension());
    std::vector<MonomialIdeal> ideals;
    for (auto& I : antichain_ideals(n, bounds.d_max, bounds.g_max)) {
      if (!I.is_unit() && I.has_pure_powers()) ideals.push_back(std::move(I));
    }
    std::sort(ideals.begin(), ideals.end());
    for_each_chain(
        ideals.size(), bounds.N_max,
        [&](std::size_t next, std::size_t prev) { return ideals[next].contains(ideals[prev]); },
        [&](const std::vector<std::size_t>& chain) {
          RawFlagIdeal raw{static_cast<int>(chain.size()), IdealMode::chart, n, {}};
          for (auto i : chain) raw.ideals.push_back(ideals[i].generators());
          emit(raw);
        });
  } else {
    const auto charts = vertex_charts(variety);
    const std::size_t m = variety.polytope.facets().size();
    // One Cox representative per ideal sheaf, keyed by its chart restrictions.
    std::vector<MonomialIdeal> ideals;
    std::vector<std::vector<MonomialIdeal>> sheaves;
    std::set<std::vector<MonomialIdeal>> known;
    for (auto& I : antichain_ideals(m, bounds.d_max, bounds.g_max)) {
      std::vector<MonomialIdeal> local;
      for (const auto& c : charts) local.push_back(I.restrict_to(c.facets));
      if (std::all_of(local.begin(), local.end(), [](const MonomialIdeal& x) { return x.is_unit(); })) continue;
      if (!known.insert(local).second) continue;
      ideals.push_back(std::move(I));
      sheaves.push_back(std::move(local));
    }
    auto sheaf_contains = [&](std::size_t big, std::size_t small) {
      for (std::size_t c = 0; c < charts.size(); ++c) {
        if (!sheaves[big][c].contains(sheaves[small][c])) return false;
      }
      return true;
    };
    for_each_chain(ideals.size(), bounds.N_max, sheaf_contains, [&](const std::vector<std::size_t>& chain) {
      RawFlagIdeal raw{static_cast<int>(chain.size()), IdealMode::cox, m, {}};
      // Cumulative sums realize the same sheaves with an honest Cox-ring chain.
      MonomialIdeal acc(m);
      for (auto i : chain) {
        acc = acc + ideals[i];
        raw.ideals.push_back(acc.generators());
      }
      emit(raw);
    });
  }
  std::sort(out.begin(), out.end(), [](const FlagIdeal& a, const FlagIdeal& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::ok: return "ok";
    case CandidateStatus::undecided: return "undecided";
    case CandidateStatus::failed: return "failed";
  }
  return "failed";
}

std::string result_key(const std::string& candidate_key, Int r) {
  return candidate_key + "|r=" + std::to_string(r);
}

CandidateResult evaluate_candidate(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                                   const FitOptions& fit, bool cross_check) {
  CandidateResult res;
  res.key = J.canonical_key();
  res.ideal = J;
  res.r = r;
  DFReport counting;
  try {
    counting = df_counting(variety, J, r, fit);
    res.df = counting.df;
  } catch (const NotStabilizedError& e) {
    res.status = CandidateStatus::undecided;
    res.message = e.what();
    return res;
  } catch (const Error& e) {
    res.status = CandidateStatus::failed;
    res.message = std::string(kind_name(e.kind())) + ": " + e.what();
    return res;
  }
  if (!cross_check || J.mode() != IdealMode::chart || J.support() != SupportClass::point_supported) {
    return res;
  }
  try {
    auto dec = df_intersection(variety, J, r);
    res.df_intersection = dec.df;
    res.normal = !dec.normalized_configuration;
    const int n = variety.dimension();
    const Rational lead = Rational(static_cast<long>(factorial(n + 1))) * counting.A->coefficient(n + 1);
    if (lead != dec.top_self_intersection) res.mismatch = true;
    if (res.normal ? dec.df != *res.df : dec.df > *res.df) res.mismatch = true;
    if (res.mismatch) res.message = "counting and intersection pipelines disagree";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ExponentTooSmall) throw;
    res.message = "decomposition skipped: exponent too small";
  }
  return res;
}

SearchReport search_destabilizers(const PolarizedToricVariety& variety, const SearchBounds& bounds,
                                  const SearchOptions& options) {
  SearchReport report;
  auto candidates = enumerate_flag_ideals(variety, bounds);
  report.candidates = candidates.size();
  const std::size_t per = bounds.r_list.size();
  const std::size_t total = candidates.size() * per;
  report.results.resize(total);

  FitOptions fit = options.fit;
  fit.workers = 1;
  std::vector<bool> fresh(total, false), done(total, false);
  std::size_t emitted = 0;
  std::mutex emit_mutex;

  parallel_for(total, options.workers, [&](std::size_t i) {
    const FlagIdeal& J = candidates[i / per];
    const Int r = bounds.r_list[i % per];
    auto it = options.completed.find(result_key(J.canonical_key(), r));
    CandidateResult res;
    if (it != options.completed.end()) {
      res = it->second;
      res.ideal = J;
    } else {
      res = evaluate_candidate(variety, J, r, fit, options.cross_check);
    }
    std::lock_guard lock(emit_mutex);
    report.results[i] = std::move(res);
    fresh[i] = it == options.completed.end();
    done[i] = true;
    while (emitted < total && done[emitted]) {
      if (fresh[emitted] && options.on_result) options.on_result(report.results[emitted]);
      ++emitted;
    }
  });

  for (const auto& res : report.results) {
    if (res.mismatch) report.mismatches.push_back(res);
    if (res.status != CandidateStatus::ok) {
      report.undecided.push_back(res);
      continue;
    }
    if (*res.df < 0) ++report.negatives;
    if (!report.min_df || *res.df < *report.min_df) {
      report.min_df = *res.df;
      report.witnesses.clear();
    }
    if (*res.df == *report.min_df) report.witnesses.push_back(res);
  }
  return report;
}

}  // namespace dflab
