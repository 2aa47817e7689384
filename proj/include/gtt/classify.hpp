#pragma once

#include <cstdint>
#include <vector>

#include "gtt/fragment.hpp"

namespace gtt {

enum class Cls : std::uint8_t { grounded_true, grounded_false, ungrounded };

const char* cls_name(Cls c);

struct Classification {
  std::vector<Cls> cls;  // one label per sentence
  std::int64_t grounded_true = 0;
  std::int64_t grounded_false = 0;
  std::int64_t ungrounded = 0;
};

// Labels every sentence against the least fixed point: true if its code is
// a member, false if its negation's code is, ungrounded otherwise.  A
// sentence whose code and negated code are both members is a contradiction
// and throws ConsistencyViolation.
Classification classify_all(const Fragment& f, const std::vector<std::uint8_t>& ustar);

}  // namespace gtt
