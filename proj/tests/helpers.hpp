#pragma once

#include <string>
#include <vector>

#include "dflab/error.hpp"
#include "dflab/lattice.hpp"
#include "dflab/monomial.hpp"

namespace testing {

using dflab::FlagIdeal;
using dflab::IVec;

/// Chart-mode flag ideal with I_j generated by gens[j].
inline FlagIdeal chart_flag(std::size_t n, const std::vector<std::vector<IVec>>& gens) {
  dflab::RawFlagIdeal raw{static_cast<int>(gens.size()), dflab::IdealMode::chart, n, gens};
  return dflab::validate_flag_ideal(raw);
}

inline FlagIdeal cox_flag(std::size_t m, const std::vector<std::vector<IVec>>& gens) {
  dflab::RawFlagIdeal raw{static_cast<int>(gens.size()), dflab::IdealMode::cox, m, gens};
  return dflab::validate_flag_ideal(raw);
}

/// I + (t).
inline FlagIdeal normal_cone(std::size_t n, const std::vector<IVec>& gens) { return chart_flag(n, {gens}); }

inline dflab::PolarizedToricVariety f1() { return dflab::make_variety({{0, 0}, {3, 0}, {1, 2}, {0, 2}}, {0, 0}); }

inline dflab::PolarizedToricVariety p1xp1(dflab::Int a, dflab::Int b) {
  return dflab::make_variety({{0, 0}, {a, 0}, {0, b}, {a, b}}, {0, 0});
}

template <class Fn>
dflab::ErrorKind error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const dflab::Error& e) {
    return e.kind();
  }
  return dflab::ErrorKind::CrossCheckFailure;  // sentinel: nothing was thrown
}

}  // namespace testing
