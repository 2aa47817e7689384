#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gtt/fragment.hpp"

namespace gtt {

// Result of one saturation pass: the closure set L(U) over the fragment,
// together with the wave index at which each member entered.
struct SatResult {
  std::vector<std::uint8_t> in_l;   // membership flags, one per sentence
  std::vector<std::int32_t> stage;  // wave a member entered at, -1 outside
  std::int32_t waves = 0;           // number of committed waves
  std::int64_t l_size = 0;          // members of the closure
  // first detected (sentence, negation) pair present together, or (-1,-1)
  std::pair<std::int32_t, std::int32_t> conflict{-1, -1};

  bool consistent() const { return conflict.first < 0; }
};

// Computes the closure L(U).  `u` holds code-set membership flags indexed
// like f.sent; it may be empty, which denotes the empty code set.  Seeds:
//   - every true pure sentence, always;
// and when `u` is nonempty additionally:
//   - truth attributions to members of u and denials for negated members,
//   - the fixed quantified truth/denial sentences,
//   - quantified attributions to predicate families, with their negative
//     completions for the false cases.
// Waves commit breadth-first, so `stage` reports the exact closure layer.
SatResult saturate(const Fragment& f, const std::vector<std::uint8_t>& u);

}  // namespace gtt
