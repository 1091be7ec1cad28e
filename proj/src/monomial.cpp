#include "dflab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dflab/error.hpp"

namespace dflab {

namespace {

bool dominates(std::span<const Int> a, std::span<const Int> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] < g[i]) return false;
  }
  return true;
}

Int total_degree(const IVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

}  // namespace

MonomialIdeal minimalize(std::size_t num_vars, std::vector<IVec> gens) {
  for (const auto& g : gens) {
    if (g.size() != num_vars) throw Error(ErrorKind::InvalidInput, "generator has the wrong number of variables");
    for (Int e : g) {
      if (e < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in a monomial generator");
    }
  }
  std::sort(gens.begin(), gens.end(), [](const IVec& a, const IVec& b) {
    Int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(num_vars);
  for (auto& g : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const IVec& h) { return dominates(g, h); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) {
  return minimalize(num_vars, {IVec(num_vars, 0)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](Int e) { return e == 0; });
}

bool MonomialIdeal::contains(std::span<const Int> exponent) const {
  for (const auto& g : gens_) {
    if (dominates(exponent, g)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const IVec& g) { return contains(std::span<const Int>(g)); });
}

bool MonomialIdeal::has_pure_powers() const {
  for (std::size_t i = 0; i < num_vars_; ++i) {
    bool found = std::any_of(gens_.begin(), gens_.end(), [&](const IVec& g) {
      for (std::size_t c = 0; c < num_vars_; ++c) {
        if (c != i && g[c] != 0) return false;
      }
      return true;
    });
    if (!found) return false;
  }
  return true;
}

Int MonomialIdeal::max_degree() const {
  Int d = 0;
  for (const auto& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<IVec> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return minimalize(num_vars_, std::move(all));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  std::vector<IVec> all;
  all.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) {
      IVec s(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) s[i] = a[i] + b[i];
      all.push_back(std::move(s));
    }
  }
  return minimalize(num_vars_, std::move(all));
}

MonomialIdeal MonomialIdeal::restrict_to(const std::vector<std::size_t>& coords) const {
  std::vector<IVec> out;
  for (const auto& g : gens_) {
    IVec r;
    for (auto c : coords) r.push_back(g[c]);
    out.push_back(std::move(r));
  }
  return minimalize(coords.size(), std::move(out));
}

MonomialIdeal MonomialIdeal::embed(std::size_t num_vars, const std::vector<std::size_t>& coords) const {
  std::vector<IVec> out;
  for (const auto& g : gens_) {
    IVec e(num_vars, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) e[coords[i]] = g[i];
    out.push_back(std::move(e));
  }
  return minimalize(num_vars, std::move(out));
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t c = 0; c < gens_[i].size(); ++c) os << (c ? "," : "") << gens_[i][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_string(IdealMode mode) { return mode == IdealMode::chart ? "chart" : "cox"; }

std::string to_string(SupportClass support) {
  return support == SupportClass::point_supported ? "point_supported" : "general";
}

MonomialIdeal FlagIdeal::ideal(int j) const {
  if (j < length()) return chain_[j];
  return MonomialIdeal::unit(num_vars_);
}

FlagIdeal FlagIdeal::times_t() const {
  FlagIdeal out = *this;
  out.chain_.insert(out.chain_.begin(), MonomialIdeal(num_vars_));
  return out;
}

RawFlagIdeal FlagIdeal::raw() const {
  RawFlagIdeal r;
  r.N = length();
  r.mode = mode_;
  r.num_vars = num_vars_;
  for (const auto& I : chain_) r.ideals.push_back(I.generators());
  return r;
}

std::string FlagIdeal::canonical_key() const {
  std::ostringstream os;
  os << to_string(mode_) << ";N=" << length() << ';';
  for (const auto& I : chain_) os << I.to_string();
  return os.str();
}

FlagIdeal validate_flag_ideal(const RawFlagIdeal& raw, bool strip_t_powers) {
  if (raw.N < 1) throw Error(ErrorKind::InvalidInput, "flag ideal needs N >= 1");
  if (static_cast<int>(raw.ideals.size()) != raw.N) {
    throw Error(ErrorKind::InvalidInput, "flag ideal must list exactly N ideals");
  }
  if (raw.num_vars == 0) throw Error(ErrorKind::InvalidInput, "flag ideal needs at least one variable");
  std::vector<MonomialIdeal> chain;
  for (const auto& gens : raw.ideals) chain.push_back(minimalize(raw.num_vars, gens));
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (!chain[j + 1].contains(chain[j])) {
      throw Error(ErrorKind::ChainViolation,
                  "I_" + std::to_string(j) + " is not contained in I_" + std::to_string(j + 1));
    }
  }
  FlagIdeal J;
  J.mode_ = raw.mode;
  J.num_vars_ = raw.num_vars;
  std::size_t lead = 0;
  if (strip_t_powers) {
    while (lead < chain.size() && chain[lead].is_zero()) ++lead;
  }
  J.stripped_ = static_cast<int>(lead);
  chain.erase(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!chain.empty() && chain.back().is_unit()) chain.pop_back();
  J.chain_ = std::move(chain);

  bool point = raw.mode == IdealMode::chart;
  for (const auto& I : J.chain_) {
    if (!I.is_zero() && !I.is_unit() && !I.has_pure_powers()) point = false;
  }
  J.support_ = point ? SupportClass::point_supported : SupportClass::general;
  return J;
}

GradedPieces::GradedPieces(std::vector<MonomialIdeal> chain, std::size_t num_vars)
    : chain_(std::move(chain)), num_vars_(num_vars), unit_(MonomialIdeal::unit(num_vars)) {}

const std::vector<MonomialIdeal>& GradedPieces::row(int k) const {
  std::lock_guard lock(mutex_);
  const int N = length();
  while (static_cast<int>(rows_.size()) < k) {
    const int kk = static_cast<int>(rows_.size()) + 1;
    std::vector<MonomialIdeal> next;
    if (kk == 1) {
      next = chain_;
    } else {
      const auto& prev = rows_.back();
      auto prev_at = [&](int a) -> const MonomialIdeal& {
        return a < static_cast<int>(prev.size()) ? prev[a] : unit_;
      };
      next.reserve(static_cast<std::size_t>(kk * N));
      for (int j = 0; j < kk * N; ++j) {
        MonomialIdeal acc(num_vars_);
        for (int b = 0; b <= std::min(j, N); ++b) {
          const MonomialIdeal& tail = b < N ? chain_[b] : unit_;
          acc = acc + prev_at(j - b) * tail;
        }
        next.push_back(std::move(acc));
      }
    }
    rows_.push_back(std::move(next));
  }
  return rows_[static_cast<std::size_t>(k - 1)];
}

void GradedPieces::prepare(int k) const {
  if (k >= 1) row(k);
}

const MonomialIdeal& GradedPieces::piece(int k, int j) const {
  if (k < 1 || j < 0) throw Error(ErrorKind::InvalidInput, "graded piece needs k >= 1 and j >= 0");
  if (j >= k * length()) return unit_;
  return row(k)[static_cast<std::size_t>(j)];
}

Int GradedPieces::least_level(int k, std::span<const Int> exponent) const {
  const int top = k * length();
  if (top == 0) return 0;
  const auto& r = row(k);
  int lo = 0, hi = top;  // exponent ∈ M_{k,hi} always
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (r[static_cast<std::size_t>(mid)].contains(exponent)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

MonomialIdeal graded_piece(const FlagIdeal& J, int k, int j) {
  return GradedPieces(J.chain(), J.num_vars()).piece(k, j);
}

TDegree::TDegree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r)
    : variety_(&variety), r_(r), trivial_(J.trivial()), mode_(J.mode()) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "exponent r must be positive");
  const auto n = static_cast<std::size_t>(variety.dimension());
  if (mode_ == IdealMode::chart) {
    if (J.num_vars() != n) throw Error(ErrorKind::InvalidInput, "chart ideal must use n variables");
    if (!trivial_ && J.support() != SupportClass::point_supported) {
      throw Error(ErrorKind::UnsupportedMode,
                  "chart mode needs every I_j to be supported at the chart origin; use cox mode");
    }
    pieces_.push_back(std::make_unique<GradedPieces>(J.chain(), n));
  } else {
    if (J.num_vars() != variety.polytope.facets().size()) {
      throw Error(ErrorKind::InvalidInput, "cox ideal must use one variable per facet");
    }
    charts_ = vertex_charts(variety);
    for (const auto& c : charts_) {
      std::vector<MonomialIdeal> local;
      for (const auto& I : J.chain()) local.push_back(I.restrict_to(c.facets));
      pieces_.push_back(std::make_unique<GradedPieces>(std::move(local), c.facets.size()));
    }
  }
}

void TDegree::prepare(int k) const {
  for (const auto& p : pieces_) p->prepare(k);
}

Int TDegree::at_chart_point(int k, std::span<const Int> x) const {
  if (trivial_) return 0;
  if (mode_ != IdealMode::chart) throw Error(ErrorKind::UnsupportedMode, "chart evaluation in cox mode");
  return pieces_[0]->least_level(k, x);
}

Int TDegree::operator()(int k, const IVec& u) const {
  if (trivial_) return 0;
  const Int scale = static_cast<Int>(k) * r_;
  if (mode_ == IdealMode::chart) {
    IVec x = chart_coords(*variety_, u, scale);
    return pieces_[0]->least_level(k, x);
  }
  if (!variety_->polytope.contains(u, scale)) {
    throw Error(ErrorKind::PointOutsidePolytope, "point lies outside the scaled polytope");
  }
  IVec cox = variety_->polytope.slacks(u, scale);
  Int g = 0;
  for (std::size_t c = 0; c < charts_.size(); ++c) {
    IVec local;
    for (auto f : charts_[c].facets) local.push_back(cox[f]);
    g = std::max(g, pieces_[c]->least_level(k, local));
  }
  return g;
}

Int t_degree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r, int k, const IVec& u) {
  return TDegree(variety, J, r)(k, u);
}

FlagIdeal preset_normal_cone(const MonomialIdeal& I, IdealMode mode) {
  if (I.is_zero() || I.is_unit()) {
    throw Error(ErrorKind::InvalidInput, "deformation to the normal cone needs a proper nonzero ideal");
  }
  RawFlagIdeal raw{1, mode, I.num_vars(), {I.generators()}};
  return validate_flag_ideal(raw);
}

}  // namespace dflab
