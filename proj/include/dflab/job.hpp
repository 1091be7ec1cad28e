#pragma once

// JSON job documents and report serialization. Every number written is an
// integer or an exact "p/q" string, and objects use sorted keys, so output
// is byte-stable.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dflab/lattice.hpp"
#include "dflab/monomial.hpp"
#include "dflab/report.hpp"
#include "dflab/search.hpp"
#include "dflab/weights.hpp"

namespace dflab {

using Json = nlohmann::json;

struct VerifyGrid {
  std::vector<Int> r{1, 2};
  std::vector<Int> k{2, 4, 6};
  std::vector<Int> k_prime{2, 3};
};

struct JobDescription {
  Json variety_json;  ///< canonical descriptor (used for cache keys)
  PolarizedToricVariety variety;
  std::optional<RawFlagIdeal> flag_ideal;
  std::optional<SearchBounds> bounds;
  Int r = 1;
  bool has_k_range = false;
  FitOptions fit;
  Pipeline pipeline = Pipeline::both;
  std::string format = "json";
  VerifyGrid grid;
  std::optional<std::string> stream;
  std::optional<std::string> cache_dir;
};

/// Parses and validates a job. Structural problems throw Error(InvalidInput);
/// geometric ones throw the matching domain error.
JobDescription parse_job(const Json& doc);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json polynomial_to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const Json& j);

Json flag_ideal_to_json(const FlagIdeal& J);
RawFlagIdeal raw_flag_ideal_from_json(const Json& j, std::size_t num_vars_hint);

Json decomposition_to_json(const DecompositionReport& d);
DecompositionReport decomposition_from_json(const Json& j);
Json report_to_json(const DFReport& report);
DFReport report_from_json(const Json& j);

Json candidate_to_json(const CandidateResult& c);
/// Everything but the FlagIdeal object (the key identifies it).
CandidateResult candidate_from_json(const Json& j);
Json search_report_to_json(const SearchReport& report, const SearchBounds& bounds);
Json bounds_to_json(const SearchBounds& b);

}  // namespace dflab
