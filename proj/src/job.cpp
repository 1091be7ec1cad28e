#include "dflab/job.hpp"

#include <algorithm>
#include <set>

#include "dflab/error.hpp"

namespace dflab {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) invalid(std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

Int as_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<Int>();
  invalid(what + " must be an integer");
}

Int as_positive(const Json& j, const std::string& what) {
  Int v = as_int(j, what);
  if (v < 1) invalid(what + " must be positive");
  return v;
}

// Integers, exact "p/q" strings, or floats with an exact binary value.
Rational as_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<Int>()));
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  invalid(what + " must be a number");
}

IVec as_ivec(const Json& j, const std::string& what) {
  if (!j.is_array()) invalid(what + " must be an array");
  IVec v;
  for (const auto& e : j) v.push_back(as_int(e, what));
  return v;
}

QVec as_qvec(const Json& j, const std::string& what) {
  if (!j.is_array()) invalid(what + " must be an array");
  QVec v;
  for (const auto& e : j) v.push_back(as_rational(e, what));
  return v;
}

Json ivec_json(const IVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

IdealMode parse_mode(const Json& j) {
  if (!j.is_string()) invalid("mode must be a string");
  const auto s = j.get<std::string>();
  if (s == "chart") return IdealMode::chart;
  if (s == "cox") return IdealMode::cox;
  invalid("unknown mode \"" + s + "\"");
}

PolarizedToricVariety parse_variety(const Json& v, Json& canonical) {
  const auto& type = require(v, "type");
  if (type == "projective_space") {
    const Int n = as_positive(require(v, "n"), "n");
    const Int d = as_positive(require(v, "d"), "d");
    if (n > 6) invalid("n is too large");
    auto variety = projective_space(static_cast<int>(n), d);
    canonical = {{"type", "projective_space"}, {"n", n}, {"d", d}};
    return variety;
  }
  if (type == "polytope") {
    const auto& verts = require(v, "vertices");
    if (!verts.is_array() || verts.empty()) invalid("vertices must be a non-empty array");
    std::vector<QVec> qs;
    for (const auto& p : verts) qs.push_back(as_qvec(p, "vertex"));
    QVec chart = as_qvec(require(v, "chart_vertex"), "chart_vertex");
    auto variety = make_variety_from_rationals(qs, chart);
    Json vs = Json::array();
    for (const auto& p : variety.polytope.vertices()) vs.push_back(ivec_json(p));
    canonical = {{"type", "polytope"}, {"vertices", vs}, {"chart_vertex", ivec_json(variety.chart.vertex)}};
    return variety;
  }
  invalid("unknown variety type");
}

std::string status_name(CandidateStatus s) { return to_string(s); }

CandidateStatus parse_status(const std::string& s) {
  if (s == "ok") return CandidateStatus::ok;
  if (s == "undecided") return CandidateStatus::undecided;
  if (s == "failed") return CandidateStatus::failed;
  invalid("unknown candidate status");
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) invalid("exact rationals are serialized as strings");
  return parse_rational(j.get<std::string>());
}

Json polynomial_to_json(const ExactPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(rational_to_json(c));
  return {{"coefficients", coeffs}, {"threshold", p.threshold()}};
}

ExactPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : require(j, "coefficients")) coeffs.push_back(rational_from_json(c));
  return ExactPolynomial(std::move(coeffs), as_int(require(j, "threshold"), "threshold"));
}

Json flag_ideal_to_json(const FlagIdeal& J) {
  Json ideals = Json::array();
  for (const auto& I : J.chain()) {
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(ivec_json(g));
    ideals.push_back({{"gens", gens}});
  }
  return {{"N", J.length()}, {"mode", to_string(J.mode())}, {"ideals", ideals}};
}

RawFlagIdeal raw_flag_ideal_from_json(const Json& j, std::size_t num_vars) {
  RawFlagIdeal raw;
  raw.N = static_cast<int>(as_positive(require(j, "N"), "N"));
  raw.mode = j.contains("mode") ? parse_mode(j.at("mode")) : IdealMode::chart;
  raw.num_vars = num_vars;
  const auto& ideals = require(j, "ideals");
  if (!ideals.is_array()) invalid("ideals must be an array");
  for (const auto& I : ideals) {
    const auto& gens = I.is_object() ? require(I, "gens") : I;
    if (!gens.is_array()) invalid("gens must be an array");
    std::vector<IVec> g;
    for (const auto& e : gens) g.push_back(as_ivec(e, "generator"));
    raw.ideals.push_back(std::move(g));
  }
  return raw;
}

JobDescription parse_job(const Json& doc) {
  if (!doc.is_object()) invalid("job must be a JSON object");
  JobDescription job;
  job.variety = parse_variety(require(doc, "variety"), job.variety_json);
  const int n = job.variety.dimension();

  if (doc.contains("r")) job.r = as_positive(doc.at("r"), "r");
  if (doc.contains("K_range")) {
    const auto& kr = doc.at("K_range");
    if (!kr.is_array() || kr.size() != 2) invalid("K_range must be [first, last]");
    job.fit.k_first = as_positive(kr[0], "K_range");
    job.fit.k_last = as_positive(kr[1], "K_range");
    if (job.fit.k_last < job.fit.k_first) invalid("K_range is empty");
    job.has_k_range = true;
  }
  if (doc.contains("guard")) {
    Int g = as_int(doc.at("guard"), "guard");
    if (g < 0) invalid("guard must be non-negative");
    job.fit.guard = static_cast<int>(g);
  }
  if (doc.contains("K_cap")) job.fit.k_cap = as_positive(doc.at("K_cap"), "K_cap");
  if (doc.contains("workers")) job.fit.workers = static_cast<unsigned>(as_positive(doc.at("workers"), "workers"));
  if (doc.contains("pipeline")) {
    const auto& p = doc.at("pipeline");
    if (p == "counting") job.pipeline = Pipeline::counting;
    else if (p == "intersection") job.pipeline = Pipeline::intersection;
    else if (p == "both") job.pipeline = Pipeline::both;
    else invalid("pipeline must be counting, intersection or both");
  }
  if (doc.contains("format")) {
    const auto& f = doc.at("format");
    if (f != "json" && f != "table") invalid("format must be json or table");
    job.format = f.get<std::string>();
  }
  if (doc.contains("stream")) {
    if (!doc.at("stream").is_string()) invalid("stream must be a path");
    job.stream = doc.at("stream").get<std::string>();
  }
  if (doc.contains("cache_dir")) {
    if (!doc.at("cache_dir").is_string()) invalid("cache_dir must be a path");
    job.cache_dir = doc.at("cache_dir").get<std::string>();
  }
  if (doc.contains("verify")) {
    const auto& v = doc.at("verify");
    auto list = [&](const char* key, std::vector<Int>& out) {
      if (!v.contains(key)) return;
      out.clear();
      for (const auto& e : v.at(key)) out.push_back(as_positive(e, key));
      if (out.empty()) invalid(std::string(key) + " grid is empty");
    };
    list("r", job.grid.r);
    list("k", job.grid.k);
    list("k_prime", job.grid.k_prime);
  }

  if (doc.contains("flag_ideal")) {
    const auto& fj = doc.at("flag_ideal");
    IdealMode mode = fj.contains("mode") ? parse_mode(fj.at("mode")) : IdealMode::chart;
    std::size_t vars = mode == IdealMode::chart ? static_cast<std::size_t>(n)
                                                : job.variety.polytope.facets().size();
    job.flag_ideal = raw_flag_ideal_from_json(fj, vars);
    // Full validation up front: a bad chain rejects the job before any work.
    (void)validate_flag_ideal(*job.flag_ideal);
  }
  if (doc.contains("bounds")) {
    const auto& b = doc.at("bounds");
    SearchBounds bounds;
    auto nonneg = [&](const char* key, int& out) {
      if (!b.contains(key)) return;
      Int v = as_int(b.at(key), key);
      if (v < 0) invalid(std::string(key) + " must be non-negative");
      out = static_cast<int>(v);
    };
    nonneg("N_max", bounds.N_max);
    nonneg("d_max", bounds.d_max);
    nonneg("g_max", bounds.g_max);
    if (b.contains("r_list")) {
      bounds.r_list.clear();
      for (const auto& e : b.at("r_list")) bounds.r_list.push_back(as_positive(e, "r_list"));
    } else if (doc.contains("r_list")) {
      bounds.r_list.clear();
      for (const auto& e : doc.at("r_list")) bounds.r_list.push_back(as_positive(e, "r_list"));
    } else {
      bounds.r_list = {job.r};
    }
    if (b.contains("mode")) bounds.mode = parse_mode(b.at("mode"));
    if (bounds.mode == IdealMode::cox && !job.variety.smooth) {
      throw Error(ErrorKind::UnsupportedMode, "cox mode needs a smooth polytope");
    }
    job.bounds = bounds;
  }
  return job;
}

Json decomposition_to_json(const DecompositionReport& d) {
  Json rays = Json::array();
  for (const auto& ray : d.rays) {
    rays.push_back({{"w", ivec_json(ray.normal)},
                    {"ord", ray.order},
                    {"a", ray.discrepancy},
                    {"face_degree", rational_to_json(ray.face_degree)}});
  }
  return {{"T1", rational_to_json(d.T1)},
          {"T2", rational_to_json(d.T2)},
          {"T3", rational_to_json(d.T3)},
          {"DF", rational_to_json(d.df)},
          {"top_self_intersection", rational_to_json(d.top_self_intersection)},
          {"Ln", d.Ln},
          {"LK", d.LK},
          {"normalized_configuration", d.normalized_configuration},
          {"rays", rays}};
}

DecompositionReport decomposition_from_json(const Json& j) {
  DecompositionReport d;
  d.T1 = rational_from_json(require(j, "T1"));
  d.T2 = rational_from_json(require(j, "T2"));
  d.T3 = rational_from_json(require(j, "T3"));
  d.df = rational_from_json(require(j, "DF"));
  d.top_self_intersection = rational_from_json(require(j, "top_self_intersection"));
  d.Ln = as_int(require(j, "Ln"), "Ln");
  d.LK = as_int(require(j, "LK"), "LK");
  d.normalized_configuration = require(j, "normalized_configuration").get<bool>();
  for (const auto& ray : require(j, "rays")) {
    d.rays.push_back({as_ivec(require(ray, "w"), "w"), as_int(require(ray, "ord"), "ord"),
                      as_int(require(ray, "a"), "a"), rational_from_json(require(ray, "face_degree"))});
  }
  return d;
}

Json report_to_json(const DFReport& r) {
  Json out = {{"status", "ok"},
              {"DF", rational_to_json(r.df)},
              {"dimension", r.dimension},
              {"exponent", r.exponent},
              {"normalization", r.normalization},
              {"pipeline", to_string(r.pipeline)},
              {"trivial", r.trivial},
              {"consistent", r.consistent}};
  if (r.A) out["A"] = polynomial_to_json(*r.A);
  if (r.h) out["h"] = polynomial_to_json(*r.h);
  if (r.chow) out["chow"] = rational_to_json(*r.chow);
  if (r.df_counting) out["DF_counting"] = rational_to_json(*r.df_counting);
  if (r.df_intersection) out["DF_intersection"] = rational_to_json(*r.df_intersection);
  if (r.decomposition) out["decomposition"] = decomposition_to_json(*r.decomposition);
  if (!r.identities.empty()) out["identities"] = r.identities;
  return out;
}

DFReport report_from_json(const Json& j) {
  DFReport r;
  r.df = rational_from_json(require(j, "DF"));
  r.dimension = static_cast<int>(as_int(require(j, "dimension"), "dimension"));
  r.exponent = as_int(require(j, "exponent"), "exponent");
  r.normalization = require(j, "normalization").get<std::string>();
  const auto p = require(j, "pipeline").get<std::string>();
  r.pipeline = p == "counting" ? Pipeline::counting : p == "intersection" ? Pipeline::intersection : Pipeline::both;
  r.trivial = require(j, "trivial").get<bool>();
  r.consistent = require(j, "consistent").get<bool>();
  if (j.contains("A")) r.A = polynomial_from_json(j.at("A"));
  if (j.contains("h")) r.h = polynomial_from_json(j.at("h"));
  if (j.contains("chow")) r.chow = rational_from_json(j.at("chow"));
  if (j.contains("DF_counting")) r.df_counting = rational_from_json(j.at("DF_counting"));
  if (j.contains("DF_intersection")) r.df_intersection = rational_from_json(j.at("DF_intersection"));
  if (j.contains("decomposition")) r.decomposition = decomposition_from_json(j.at("decomposition"));
  if (j.contains("identities")) r.identities = j.at("identities").get<std::map<std::string, bool>>();
  return r;
}

Json candidate_to_json(const CandidateResult& c) {
  Json out = {{"key", c.key},
              {"r", c.r},
              {"status", status_name(c.status)},
              {"normal", c.normal},
              {"mismatch", c.mismatch},
              {"flag_ideal", flag_ideal_to_json(c.ideal)}};
  if (c.df) out["DF"] = rational_to_json(*c.df);
  if (c.df_intersection) out["DF_intersection"] = rational_to_json(*c.df_intersection);
  if (!c.message.empty()) out["message"] = c.message;
  return out;
}

CandidateResult candidate_from_json(const Json& j) {
  CandidateResult c;
  c.key = require(j, "key").get<std::string>();
  c.r = as_positive(require(j, "r"), "r");
  c.status = parse_status(require(j, "status").get<std::string>());
  c.normal = require(j, "normal").get<bool>();
  c.mismatch = require(j, "mismatch").get<bool>();
  if (j.contains("DF")) c.df = rational_from_json(j.at("DF"));
  if (j.contains("DF_intersection")) c.df_intersection = rational_from_json(j.at("DF_intersection"));
  if (j.contains("message")) c.message = j.at("message").get<std::string>();
  return c;
}

Json bounds_to_json(const SearchBounds& b) {
  return {{"N_max", b.N_max}, {"d_max", b.d_max}, {"g_max", b.g_max},
          {"r_list", b.r_list}, {"mode", to_string(b.mode)}};
}

Json search_report_to_json(const SearchReport& report, const SearchBounds& bounds) {
  auto brief = [](const CandidateResult& c) {
    Json out = {{"flag_ideal", flag_ideal_to_json(c.ideal)}, {"key", c.key}, {"r", c.r}};
    if (c.df) out["DF"] = rational_to_json(*c.df);
    if (c.df_intersection) out["DF_intersection"] = rational_to_json(*c.df_intersection);
    if (!c.message.empty()) out["message"] = c.message;
    if (c.status != CandidateStatus::ok) out["status"] = to_string(c.status);
    return out;
  };
  Json witnesses = Json::array(), undecided = Json::array(), mismatches = Json::array();
  for (const auto& c : report.witnesses) witnesses.push_back(brief(c));
  for (const auto& c : report.undecided) undecided.push_back(brief(c));
  for (const auto& c : report.mismatches) mismatches.push_back(brief(c));
  Json out = {{"status", "ok"},
              {"bounds", bounds_to_json(bounds)},
              {"bounds_are_heuristic", true},
              {"candidates", report.candidates},
              {"evaluations", report.results.size()},
              {"negatives", report.negatives},
              {"witnesses", witnesses},
              {"undecided", undecided},
              {"mismatches", mismatches}};
  out["min_DF"] = report.min_df ? rational_to_json(*report.min_df) : Json(nullptr);
  return out;
}

}  // namespace dflab
