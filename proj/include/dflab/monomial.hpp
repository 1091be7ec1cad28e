#pragma once

// Monomial ideals and flag ideals J = I_0 + I_1 t + ... + I_{N-1} t^{N-1} + (t^N).
// Ideals are kept as antichains of exponent vectors; membership is
// componentwise domination, so no Gröbner machinery is needed.

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "dflab/lattice.hpp"
#include "dflab/rational.hpp"

namespace dflab {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in `num_vars` variables.
  explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}

  static MonomialIdeal unit(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  /// Minimal generators, sorted lexicographically.
  const std::vector<IVec>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(std::span<const Int> exponent) const;
  /// other ⊆ *this
  bool contains(const MonomialIdeal& other) const;

  /// Contains a pure power of every variable (cosupport is the origin).
  bool has_pure_powers() const;

  /// Largest total degree among the minimal generators.
  Int max_degree() const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal operator*(const MonomialIdeal& other) const;

  /// Dehomogenization: keep only the listed coordinates (others set to 1).
  MonomialIdeal restrict_to(const std::vector<std::size_t>& coords) const;

  /// Embeds into a larger ring, coordinate i going to position coords[i].
  MonomialIdeal embed(std::size_t num_vars, const std::vector<std::size_t>& coords) const;

  bool operator==(const MonomialIdeal&) const = default;
  auto operator<=>(const MonomialIdeal&) const = default;

  std::string to_string() const;

  friend MonomialIdeal minimalize(std::size_t num_vars, std::vector<IVec> gens);

 private:
  std::size_t num_vars_ = 0;
  std::vector<IVec> gens_;
};

/// Antichain of minimal generators of the ideal generated by `gens`.
MonomialIdeal minimalize(std::size_t num_vars, std::vector<IVec> gens);

enum class IdealMode { chart, cox };
enum class SupportClass { point_supported, general };

std::string to_string(IdealMode mode);
std::string to_string(SupportClass support);

/// Unvalidated chain as read from input.
struct RawFlagIdeal {
  int N = 1;
  IdealMode mode = IdealMode::chart;
  std::size_t num_vars = 0;
  std::vector<std::vector<IVec>> ideals;
};

class FlagIdeal {
 public:
  /// Length N after normalization; 0 for the trivial configuration.
  int length() const { return static_cast<int>(chain_.size()); }
  const std::vector<MonomialIdeal>& chain() const { return chain_; }
  /// I_j, the unit ideal for j >= N.
  MonomialIdeal ideal(int j) const;
  IdealMode mode() const { return mode_; }
  SupportClass support() const { return support_; }
  std::size_t num_vars() const { return num_vars_; }
  /// J was given as t^c·J'; c is reported here (0 when stripping was disabled).
  int stripped_t_power() const { return stripped_; }
  /// All-unit after normalization: the product configuration with DF = 0.
  bool trivial() const { return chain_.empty(); }

  /// Same chain with one more leading zero ideal (J -> t·J), unstripped.
  FlagIdeal times_t() const;

  RawFlagIdeal raw() const;
  /// Canonical text: mode, N, and the sorted generators of every I_j.
  std::string canonical_key() const;

  bool operator==(const FlagIdeal&) const = default;

  friend FlagIdeal validate_flag_ideal(const RawFlagIdeal& raw, bool strip_t_powers);

 private:
  std::vector<MonomialIdeal> chain_;
  IdealMode mode_ = IdealMode::chart;
  SupportClass support_ = SupportClass::general;
  std::size_t num_vars_ = 0;
  int stripped_ = 0;
};

/// Checks I_0 ⊆ ... ⊆ I_{N-1} (ChainViolation otherwise), strips leading
/// zero ideals (J = t^c·J') when requested, drops trailing unit ideals, and
/// classifies the support.
FlagIdeal validate_flag_ideal(const RawFlagIdeal& raw, bool strip_t_powers = true);

/// M_{k,j}: the coefficient ideal of t^j in J^k for one chain, memoized by k.
/// Rows are built on demand under a lock; returned references stay valid.
class GradedPieces {
 public:
  GradedPieces(std::vector<MonomialIdeal> chain, std::size_t num_vars);

  const MonomialIdeal& piece(int k, int j) const;

  /// min { j : exponent ∈ M_{k,j} } (at most k·N).
  Int least_level(int k, std::span<const Int> exponent) const;

  /// Builds rows up to k so later reads never take the lock's slow path.
  void prepare(int k) const;

  int length() const { return static_cast<int>(chain_.size()); }

 private:
  const std::vector<MonomialIdeal>& row(int k) const;

  std::vector<MonomialIdeal> chain_;
  std::size_t num_vars_;
  MonomialIdeal unit_;
  mutable std::mutex mutex_;
  mutable std::deque<std::vector<MonomialIdeal>> rows_;
};

MonomialIdeal graded_piece(const FlagIdeal& J, int k, int j);

/// Evaluates g_k(u) = min { j : x^u t^j ∈ J^k } for sections u ∈ (k·r·P).
/// Chart mode needs a point-supported ideal; homogeneous (cox) mode checks
/// membership in every vertex chart, which is sheaf-level membership.
class TDegree {
 public:
  TDegree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r);

  Int operator()(int k, const IVec& u) const;

  /// Same as operator() on a chart exponent directly (chart mode only).
  Int at_chart_point(int k, std::span<const Int> x) const;

  void prepare(int k) const;

 private:
  const PolarizedToricVariety* variety_;
  Int r_;
  bool trivial_;
  IdealMode mode_;
  std::vector<VertexChart> charts_;
  std::vector<std::unique_ptr<GradedPieces>> pieces_;
};

Int t_degree(const PolarizedToricVariety& variety, const FlagIdeal& J, Int r, int k, const IVec& u);

/// The deformation to the normal cone I + (t).
FlagIdeal preset_normal_cone(const MonomialIdeal& I, IdealMode mode = IdealMode::chart);

}  // namespace dflab
