#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtt/classify.hpp"
#include "gtt/fragment.hpp"

namespace gtt {

// A spot where a claimed truth table disagrees with the derived value.
// Reported, never counted as a violation: the derivation is the authority.
struct Discrepancy {
  std::string where;
  std::string claimed;
  std::string derived;
};

struct SuiteReport {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;
  std::vector<std::string> failures;  // first few violation details
  std::vector<std::string> notes;
  std::vector<Discrepancy> discrepancies;
};

// Suites:
//   t-rule            truth attributions agree with their subjects, and the
//                     reflection biconditionals classify accordingly
//   rules             the closure rules hold as equivalences at the fixed
//                     point: double negation, all four connectives and their
//                     negations, the fixed quantified truth sentences against
//                     their instance sets, and prefixed attributions against
//                     their ground instances
//   equivalences      every generated chain is classified uniformly and its
//                     links match
//   ut                per-instance truth schema over object atoms
//   quantifier-table  the two-table quantifier example: derivable member
//                     agreements, link coherence, and claimed-versus-derived
//                     truth values
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                      const Classification& cls, const std::string& name);

std::vector<SuiteReport> run_suites(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                                    const Classification& cls,
                                    const std::vector<std::string>& names);

}  // namespace gtt
