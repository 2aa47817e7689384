#include "gtt/classify.hpp"

#include "gtt/errors.hpp"
#include "gtt/print.hpp"

namespace gtt {

const char* cls_name(Cls c) {
  switch (c) {
    case Cls::grounded_true: return "GroundedTrue";
    case Cls::grounded_false: return "GroundedFalse";
    case Cls::ungrounded: return "Ungrounded";
  }
  return "?";
}

Classification classify_all(const Fragment& f, const std::vector<std::uint8_t>& ustar) {
  Classification out;
  out.cls.assign(f.sent.size(), Cls::ungrounded);
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    bool t = ustar[i] != 0;
    std::int32_t neg = f.sent[i].neg_idx;
    bool fl = neg >= 0 && ustar[static_cast<std::size_t>(neg)] != 0;
    if (t && fl)
      throw ConsistencyViolation("sentence classified both ways: " +
                                 print_sentence(*f.store, f.sent[i].node));
    if (t) {
      out.cls[i] = Cls::grounded_true;
      ++out.grounded_true;
    } else if (fl) {
      out.cls[i] = Cls::grounded_false;
      ++out.grounded_false;
    } else {
      ++out.ungrounded;
    }
  }
  return out;
}

}  // namespace gtt
