#pragma once

// Bounded exhaustive search over monomial flag ideals. Bounds are heuristic:
// a clean report is evidence, never a proof of K-semistability.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dflab/lattice.hpp"
#include "dflab/monomial.hpp"
#include "dflab/weights.hpp"

namespace dflab {

struct SearchBounds {
  int N_max = 1;
  int d_max = 1;  ///< max total degree of a generator
  int g_max = 3;  ///< max generators per ideal
  std::vector<Int> r_list{1};
  IdealMode mode = IdealMode::chart;
};

/// Every normalized flag ideal within the bounds, once each, sorted by
/// canonical key. Chart mode yields point-supported ideals; cox mode
/// deduplicates by the ideal sheaf (the tuple of chart restrictions).
std::vector<FlagIdeal> enumerate_flag_ideals(const PolarizedToricVariety& variety,
                                             const SearchBounds& bounds);

enum class CandidateStatus { ok, undecided, failed };
std::string to_string(CandidateStatus s);

struct CandidateResult {
  std::string key;  ///< canonical key of the flag ideal
  FlagIdeal ideal;
  Int r = 1;
  CandidateStatus status = CandidateStatus::ok;
  std::optional<Rational> df;               ///< counting pipeline
  std::optional<Rational> df_intersection;  ///< when the decomposition applies
  bool normal = true;
  bool mismatch = false;
  std::string message;
};

struct SearchReport {
  std::size_t candidates = 0;
  std::vector<CandidateResult> results;  ///< candidate-major, r-minor order
  std::optional<Rational> min_df;
  std::vector<CandidateResult> witnesses;
  std::vector<CandidateResult> undecided;
  std::vector<CandidateResult> mismatches;
  std::size_t negatives = 0;
};

struct SearchOptions {
  FitOptions fit;
  unsigned workers = 0;
  bool cross_check = true;
  /// Results already known (keyed by result_key), e.g. from a resumed stream.
  std::map<std::string, CandidateResult> completed;
  /// Called for each freshly computed result, in report order, from one thread at a time.
  std::function<void(const CandidateResult&)> on_result;
};

std::string result_key(const std::string& candidate_key, Int r);

/// Counting DF plus, for point-supported chart ideals, the decomposition
/// and its equality (normal J) or inequality (non-normal J) cross-check.
CandidateResult evaluate_candidate(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r,
                                   const FitOptions& fit, bool cross_check = true);

SearchReport search_destabilizers(const PolarizedToricVariety& variety, const SearchBounds& bounds,
                                  const SearchOptions& options = {});

}  // namespace dflab
