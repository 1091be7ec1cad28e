#include "dflab/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dflab/cache.hpp"
#include "dflab/error.hpp"
#include "dflab/intersection.hpp"
#include "dflab/newton.hpp"

namespace dflab {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotStabilized:
    case ErrorKind::ExponentTooSmall: return 2;
    case ErrorKind::CrossCheckFailure: return 3;
    default: return 1;
  }
}

CommandResult failure(int code, const std::string& kind, const std::string& message) {
  return {code, {{"status", "error"}, {"error", kind}, {"message", message}, {"exit_code", code}}, "json"};
}

// Runs a command body, mapping exceptions onto the exit-code contract.
template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const NotStabilizedError& e) {
    auto res = failure(2, "NotStabilized", e.what());
    res.payload["quasi_period"] = e.quasi_period();
    return res;
  } catch (const Error& e) {
    return failure(exit_code_for(e.kind()), std::string(kind_name(e.kind())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure(1, "InvalidInput", e.what());
  }
}

unsigned env_workers(unsigned fallback) {
  if (const char* s = std::getenv("DFLAB_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return fallback;
}

struct Context {
  JobDescription job;
  std::optional<FitCache> cache;
  std::string format;
};

Context make_context(const Json& doc, const CliOptions& options) {
  Context ctx{parse_job(doc), std::nullopt, "json"};
  ctx.job.fit.workers = env_workers(ctx.job.fit.workers);
  ctx.format = options.format.value_or(ctx.job.format);
  if (options.use_cache) {
    std::optional<std::string> dir = options.cache_dir ? options.cache_dir : ctx.job.cache_dir;
    if (!dir) {
      if (const char* env = std::getenv("DFLAB_CACHE_DIR")) dir = std::string(env);
    }
    if (dir && !dir->empty()) ctx.cache.emplace(*dir);
  }
  return ctx;
}

FlagIdeal job_flag_ideal(const JobDescription& job) {
  if (!job.flag_ideal) throw Error(ErrorKind::InvalidInput, "job has no flag_ideal");
  return validate_flag_ideal(*job.flag_ideal);
}

CountingFit obtain_fit(const Context& ctx, const FlagIdeal& J) {
  std::string key;
  if (ctx.cache) {
    key = cache_key(ctx.job.variety_json, J, ctx.job.r, ctx.job.fit);
    if (auto hit = ctx.cache->load(key)) return *hit;
  }
  auto fit = fit_counting(ctx.job.variety, J, ctx.job.r, ctx.job.fit);
  if (ctx.cache) ctx.cache->store(key, fit);
  return fit;
}

bool decomposition_applies(const FlagIdeal& J) {
  return !J.trivial() && J.mode() == IdealMode::chart && J.support() == SupportClass::point_supported;
}

}  // namespace

CommandResult cmd_compute(const Json& doc, const CliOptions& options) {
  return guarded([&]() -> CommandResult {
    Context ctx = make_context(doc, options);
    const auto& job = ctx.job;
    FlagIdeal J = job_flag_ideal(job);
    const int n = job.variety.dimension();

    DFReport report;
    report.dimension = n;
    report.exponent = job.r;
    report.pipeline = job.pipeline;
    report.trivial = J.trivial();

    if (job.pipeline != Pipeline::intersection) {
      auto fit = obtain_fit(ctx, J);
      report.A = fit.A;
      report.h = fit.h;
      report.df_counting = J.trivial() ? Rational(0) : df_from_polynomials(fit.A, fit.h, n);
      report.chow = J.trivial() ? Rational(0) : chow_from_polynomials(fit.A, fit.h, n);
      report.df = *report.df_counting;
    }
    if (job.pipeline != Pipeline::counting) {
      if (J.trivial() || decomposition_applies(J)) {
        auto dec = df_intersection(job.variety, J, job.r);
        report.df_intersection = dec.df;
        report.decomposition = dec;
        if (job.pipeline == Pipeline::intersection) {
          report.df = dec.df;
          if (dec.normalized_configuration) report.normalization = "normalized";
        }
      } else if (job.pipeline == Pipeline::intersection) {
        throw Error(ErrorKind::UnsupportedMode,
                    "the intersection pipeline needs a point-supported chart-mode flag ideal");
      } else {
        report.identities["decomposition_applicable"] = false;
      }
    }
    if (report.df_counting && report.decomposition) {
      const auto& dec = *report.decomposition;
      const Rational lead = Rational(static_cast<long>(factorial(n + 1))) * report.A->coefficient(n + 1);
      report.identities["leading_coefficient_agreement"] = J.trivial() || lead == dec.top_self_intersection;
      if (dec.normalized_configuration) {
        report.identities["normalization_inequality"] = dec.df <= *report.df_counting;
      } else {
        report.identities["pipelines_agree"] = dec.df == *report.df_counting;
      }
      for (const auto& [name, ok] : report.identities) {
        if (name != "decomposition_applicable" && !ok) report.consistent = false;
      }
    }
    Json payload = report_to_json(report);
    payload["stripped_t_power"] = J.stripped_t_power();
    payload["flag_ideal"] = flag_ideal_to_json(J);
    payload["support"] = to_string(J.support());
    if (!semiample_precheck(job.variety, J, job.r)) {
      payload["warnings"] = Json::array({"exponent r may be too small for L^r(-E) to be semiample"});
    }
    if (!report.consistent) payload["status"] = "cross_check_failure";
    return {report.consistent ? 0 : 3, payload, ctx.format};
  });
}

CommandResult cmd_verify(const Json& doc, const CliOptions& options) {
  return guarded([&]() -> CommandResult {
    Context ctx = make_context(doc, options);
    const auto& job = ctx.job;
    FlagIdeal J = job_flag_ideal(job);
    const auto& V = job.variety;
    const int n = V.dimension();
    std::map<std::string, bool> checks;

    auto fit = obtain_fit(ctx, J);
    const Int k_last = fit.k_first + static_cast<Int>(fit.weights.size()) - 1;

    bool reproduces = fit.weights.size() == fit.hilbert.size() && !fit.weights.empty();
    for (std::size_t i = 0; reproduces && i < fit.weights.size(); ++i) {
      const Int K = fit.k_first + static_cast<Int>(i);
      if (K < fit.A.threshold() || K < fit.h.threshold()) continue;
      reproduces = fit.A(static_cast<long>(K)) == static_cast<long>(fit.weights[i]) &&
                   fit.h(static_cast<long>(K)) == static_cast<long>(fit.hilbert[i]);
    }
    checks["fit_reproduces_samples"] = reproduces;

    // Fresh samples beyond the fitted window guard against a stale or edited cache.
    {
      auto w = weight_sequence(V, J, job.r, k_last, k_last + 1, job.fit.workers);
      auto h = hilbert_sequence(V, job.r, k_last, k_last + 1);
      bool ok = true;
      for (Int i = 0; i < 2; ++i) {
        const long K = static_cast<long>(k_last + i);
        ok = ok && fit.A(K) == static_cast<long>(w[i]) && fit.h(K) == static_cast<long>(h[i]);
      }
      checks["fresh_samples_match"] = ok;
    }

    for (Int r : job.grid.r) {
      for (Int k : job.grid.k) {
        for (Int kp : job.grid.k_prime) {
          checks["mabuchi r=" + std::to_string(r) + " k=" + std::to_string(k) + " k'=" + std::to_string(kp)] =
              mabuchi_check(fit.A, fit.h, job.r, r, k, kp);
        }
      }
      const Rational rq(static_cast<long>(r));
      checks["normalized_weight_vanishes r=" + std::to_string(r)] =
          normalized_weight(fit.A, fit.h, job.r, rq, rq) == 0;
    }
    checks["normalized_leading_coefficient"] = normalized_leading_check(fit.A, fit.h, n, job.r);
    checks["weak_riemann_roch"] = weak_riemann_roch_check(V, fit.h, job.r);
    {
      const Int K = std::max<Int>(1, static_cast<Int>(n) + 3);
      bool ok = true;
      for (Int k = 1; k <= K; ++k) ok = ok && fit.h(static_cast<long>(k)) == static_cast<long>(ehrhart_count(V, k * job.r));
      checks["ehrhart_counts"] = ok;
    }

    // Metamorphic: t·J has the same DF, and its weights shift by -K·h(K).
    {
      FlagIdeal tJ = J.times_t();
      FitOptions opt = job.fit;
      opt.k_first = fit.k_first;
      opt.k_last = k_last;
      auto tfit = fit_counting(V, tJ, job.r, opt);
      const Rational df = J.trivial() ? Rational(0) : df_from_polynomials(fit.A, fit.h, n);
      checks["t_power_invariance"] = df_from_polynomials(tfit.A, tfit.h, n) == df;
      bool shift = true;
      const std::size_t m = std::min(tfit.weights.size(), fit.weights.size());
      for (std::size_t i = 0; i < m && tfit.k_first == fit.k_first; ++i) {
        const Int K = fit.k_first + static_cast<Int>(i);
        shift = shift && tfit.weights[i] == fit.weights[i] - K * fit.hilbert[i];
      }
      checks["weight_shift_law"] = shift && m > 0 && tfit.k_first == fit.k_first;
    }

    if (decomposition_applies(J)) {
      try {
        auto dec = df_intersection(V, J, job.r);
        const Rational df = df_from_polynomials(fit.A, fit.h, n);
        checks["cross_pipeline"] = dec.normalized_configuration ? dec.df <= df : dec.df == df;
        checks["leading_coefficient_agreement"] =
            Rational(static_cast<long>(factorial(n + 1))) * fit.A.coefficient(n + 1) == dec.top_self_intersection;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ExponentTooSmall) throw;
      }
    }

    if (options.polytope_library) {
      for (const auto& [name, lib] : polytope_library()) {
        const int d = lib.dimension();
        auto counts = hilbert_sequence(lib, 1, 1, d + 4);
        std::vector<Sample> samples;
        for (std::size_t i = 0; i < counts.size(); ++i) {
          samples.push_back({static_cast<Int>(i) + 1, Rational(static_cast<long>(counts[i]))});
        }
        checks["library " + name] = weak_riemann_roch_check(lib, fit_polynomial(samples, d), 1);
      }
    }

    bool all = true;
    for (const auto& [name, ok] : checks) all = all && ok;
    Json payload = {{"status", all ? "ok" : "identity_failure"}, {"checks", checks}, {"all_passed", all}};
    return {all ? 0 : 3, payload, ctx.format};
  });
}

CommandResult cmd_search(const Json& doc, const CliOptions& options) {
  return guarded([&]() -> CommandResult {
    Context ctx = make_context(doc, options);
    const auto& job = ctx.job;
    if (!job.bounds) throw Error(ErrorKind::InvalidInput, "search job has no bounds");

    SearchOptions sopt;
    sopt.fit = job.fit;
    sopt.workers = job.fit.workers;
    const auto stream_path = options.stream ? options.stream : job.stream;
    std::ofstream stream;
    if (stream_path) {
      std::ifstream in(*stream_path);
      std::string line;
      while (std::getline(in, line)) {
        // A torn last line from an interrupted run is simply recomputed.
        try {
          auto c = candidate_from_json(Json::parse(line));
          sopt.completed[result_key(c.key, c.r)] = c;
        } catch (const std::exception&) {
        }
      }
      in.close();
      stream.open(*stream_path, std::ios::app);
      if (!stream) return failure(1, "InvalidInput", "cannot open stream file " + *stream_path);
      sopt.on_result = [&](const CandidateResult& c) { stream << candidate_to_json(c).dump() << '\n' << std::flush; };
    }
    auto report = search_destabilizers(job.variety, *job.bounds, sopt);
    Json payload = search_report_to_json(report, *job.bounds);
    if (!report.mismatches.empty()) payload["status"] = "cross_check_failure";
    return {report.mismatches.empty() ? 0 : 3, payload, ctx.format};
  });
}

std::string render(const CommandResult& result) {
  if (result.format != "table") return result.payload.dump(2) + "\n";
  std::ostringstream out;
  std::size_t width = 0;
  for (auto it = result.payload.begin(); it != result.payload.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = result.payload.begin(); it != result.payload.end(); ++it) {
    out << it.key() << std::string(width - it.key().size() + 2, ' ');
    if (it->is_string()) out << it->get<std::string>();
    else out << it->dump();
    out << '\n';
  }
  return out.str();
}

}  // namespace dflab
