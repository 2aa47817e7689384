#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gtt/fragment.hpp"
#include "gtt/saturate.hpp"

namespace gtt {

struct IterateInfo {
  std::int64_t size = 0;   // members after this round
  std::int64_t added = 0;  // growth over the previous round
  bool consistent = true;
};

// Trace of the outer iteration U0 = closure(empty), U(k+1) = closure(Uk),
// stopped at the first repeat.  Every round is checked for consistency and
// for containment of the previous round; either failure is an internal
// error and throws ConsistencyViolation.
struct FixpointTrace {
  std::vector<IterateInfo> iterates;
  std::vector<std::uint8_t> ustar;  // the least fixed point, as flags
  SatResult final_sat;              // closure of ustar, with stages
  std::int32_t rounds = 0;
};

FixpointTrace outer_fixpoint(const Fragment& f);

// Cumulative closure from a seeded start: V0 = U0 plus the given extra
// members, V(k+1) = Vk union closure(Vk).  Unlike the plain iteration this
// never drops a seed, so an unsupported seed (one the closure cannot
// regenerate) persists and can surface a contradiction.
struct SeedOutcome {
  std::vector<std::uint8_t> closure;  // final V
  bool consistent = true;
  std::pair<std::int32_t, std::int32_t> witness{-1, -1};
  std::int32_t rounds = 0;
};

SeedOutcome cumulative_closure(const Fragment& f, const std::vector<std::int32_t>& extras);

// Randomized check that ustar is least: any consistent cumulative closure
// must contain it.  Samples draw 1..4 extra seeds outside ustar.
struct MinimalityReport {
  std::int32_t samples = 0;
  std::int32_t inconsistent = 0;  // seeded closures that blew up
  std::int32_t supersets = 0;     // consistent closures containing ustar
  std::int32_t violations = 0;    // consistent closures missing a member
};

MinimalityReport check_minimality(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                                  std::int32_t samples, std::uint64_t seed);

// Randomized check that the closure operator is monotone: V inside U
// implies closure(V) inside closure(U).  U is drawn random but consistent.
struct MonotonicityReport {
  std::int32_t samples = 0;
  std::int32_t violations = 0;
};

MonotonicityReport check_monotonicity(const Fragment& f, std::int32_t samples, std::uint64_t seed);

}  // namespace gtt
