// Acceptance gate: one line per criterion, PASS or FAIL, details on stderr.
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtt/classify.hpp"
#include "gtt/fixpoint.hpp"
#include "gtt/fragment.hpp"
#include "gtt/model.hpp"
#include "gtt/parse.hpp"
#include "gtt/print.hpp"
#include "gtt/saturate.hpp"
#include "gtt/suites.hpp"
#include "support/naive_closure.hpp"
#include "support/reference_eval.hpp"

using namespace gtt;

namespace {

struct Fail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EXPECT(cond, msg)                                  \
  do {                                                     \
    if (!(cond)) {                                         \
      std::ostringstream os_;                              \
      os_ << msg;                                          \
      throw Fail(os_.str());                               \
    }                                                      \
  } while (0)

int g_failed = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS criterion " << n << ": " << what << std::endl;
  } catch (const std::exception& e) {
    ++g_failed;
    std::cout << "FAIL criterion " << n << ": " << what << std::endl;
    std::cerr << "  criterion " << n << ": " << e.what() << std::endl;
  }
}

struct Config {
  const char* model;
  int depth;
  int reflect;
  bool liar = false;
  bool tt = false;
  std::optional<int> bound;
};

std::string config_name(const Config& c) {
  std::ostringstream os;
  os << c.model << " d" << c.depth << " r" << c.reflect;
  if (c.liar) os << " liar";
  if (c.tt) os << " tt";
  if (c.bound) os << " bound " << *c.bound;
  return os.str();
}

Fragment build(const Config& c) {
  FragmentParams p;
  p.depth = c.depth;
  p.reflect = c.reflect;
  p.with_liar = c.liar;
  p.with_truthteller = c.tt;
  auto m = FiniteModel::load_file(std::string(GTT_MODELS_DIR) + "/" + c.model, c.bound);
  return build_fragment(std::make_shared<Store>(), std::move(m), p);
}

struct Run {
  Fragment f;
  FixpointTrace t;
  Classification c;
};

Run run_config(const Config& c) {
  Run r{build(c), {}, {}};
  r.t = outer_fixpoint(r.f);
  r.c = classify_all(r.f, r.t.ustar);
  return r;
}

std::int32_t find_text(const Fragment& f, const std::string& txt) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (print_sentence(*f.store, f.sent[i].node) == txt) return static_cast<std::int32_t>(i);
  return -1;
}

// The parameter grid the engine must cover end to end.
const std::vector<Config> kGrid = {
    {"unit.json", 1, 1}, {"unit.json", 1, 2}, {"unit.json", 2, 1}, {"unit.json", 2, 2},
    {"unit.json", 3, 1}, {"unit.json", 3, 2},
    {"pair.json", 1, 1}, {"pair.json", 1, 2}, {"pair.json", 2, 1}, {"pair.json", 2, 2},
    {"pair.json", 3, 1}, {"pair.json", 3, 2},
    {"triple.json", 1, 1}, {"triple.json", 1, 2}, {"triple.json", 2, 1}, {"triple.json", 2, 2},
    {"double.json", 1, 1, false, false, 2}, {"double.json", 2, 1, false, false, 2},
};

// Moderate-size configurations for the heavier per-sentence verifications.
const std::vector<Config> kSpot = {
    {"unit.json", 2, 2, true, true},
    {"pair.json", 2, 1},
    {"pair.json", 2, 2, true, true},
    {"triple.json", 1, 2},
    {"double.json", 1, 1, false, false, 2},
};

void c1_fixpoints() {
  for (const Config& cfg : kGrid) {
    Run r = run_config(cfg);
    const std::string name = config_name(cfg);
    EXPECT(!r.t.iterates.empty(), name << ": no iterates");
    std::int64_t prev = 0;
    for (const IterateInfo& it : r.t.iterates) {
      EXPECT(it.consistent, name << ": inconsistent iterate");
      EXPECT(it.size >= prev, name << ": shrinking iterate");
      prev = it.size;
    }
    SatResult again = saturate(r.f, r.t.ustar);
    EXPECT(again.consistent(), name << ": closure of the fixed point is inconsistent");
    EXPECT(again.in_l == r.t.ustar, name << ": fixed point does not reproduce itself");
  }
}

void c2_exhaustive_and_minimality() {
  // exhaustive equivalence of the engine and the naive closure on a
  // thirteen-sentence universe, every input subset
  auto st = std::make_shared<Store>();
  std::vector<std::string> texts = {
      "P(e0)", "~P(e0)", "P(e0) | ~P(e0)", "~(P(e0) | ~P(e0))", "P(e0) & ~P(e0)",
      "~(P(e0) & ~P(e0))", "T(@P(e0))", "~T(@P(e0))", "T(@~P(e0))", "~T(@~P(e0))",
      "~~P(e0)", "P(e0) <-> ~P(e0)", "~(P(e0) <-> ~P(e0))",
  };
  std::vector<NodeId> nodes;
  for (const auto& t : texts) nodes.push_back(parse_sentence(*st, t));
  auto m = FiniteModel::load_file(std::string(GTT_MODELS_DIR) + "/unit.json", std::nullopt);
  Fragment micro = fragment_from_sentences(st, std::move(m), FragmentParams{}, nodes);
  EXPECT(micro.size() == 13, "micro universe has " << micro.size() << " sentences");
  const int n = static_cast<int>(micro.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<std::uint8_t> u(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    SatResult fast = saturate(micro, u);
    SatResult slow = testsupport::naive_closure(micro, u);
    EXPECT(fast.in_l == slow.in_l, "closure mismatch at subset " << mask);
    EXPECT(fast.stage == slow.stage, "stage mismatch at subset " << mask);
    EXPECT(fast.consistent() == slow.consistent(), "consistency mismatch at subset " << mask);
  }

  // minimality: consistent seeded closures strictly contain the fixed point
  Run r = run_config({"pair.json", 2, 1});
  MinimalityReport rep = check_minimality(r.f, r.t.ustar, 1000, 0x5eed);
  EXPECT(rep.samples == 1000, "ran " << rep.samples << " samples");
  EXPECT(rep.violations == 0, rep.violations << " minimality violations");
  EXPECT(rep.inconsistent + rep.supersets == rep.samples, "sample accounting is off");
}

void c3_monotonicity() {
  Run r = run_config({"pair.json", 2, 1});
  MonotonicityReport rep = check_monotonicity(r.f, 1000, 0xfeed);
  EXPECT(rep.samples == 1000, "ran " << rep.samples << " samples");
  EXPECT(rep.violations == 0, rep.violations << " monotonicity violations");
}

void c4_bivalence() {
  for (const Config& cfg : kSpot) {
    Run r = run_config(cfg);
    const std::string name = config_name(cfg);
    for (std::size_t i = 0; i < r.f.size(); ++i) {
      const SentenceInfo& si = r.f.sent[i];
      if (!si.pure) continue;
      bool truth = eval_object(*r.f.store, r.f.model, si.node);
      Cls cl = r.c.cls[i];
      if (truth) {
        EXPECT(cl == Cls::grounded_true,
               name << ": true pure sentence not grounded true: "
                    << print_sentence(*r.f.store, si.node));
      } else if (si.neg_idx >= 0) {
        EXPECT(cl == Cls::grounded_false,
               name << ": false pure sentence with negation present not grounded false: "
                    << print_sentence(*r.f.store, si.node));
      }
      // never both: classify_all throws on contradictions, so reaching
      // here already certifies consistency of the labeling
    }
  }
}

void c5_trule() {
  for (const Config& cfg : kSpot) {
    Run r = run_config(cfg);
    SuiteReport rep = run_suite(r.f, r.t.ustar, r.c, "t-rule");
    EXPECT(rep.violations == 0, config_name(cfg) << ": " << rep.violations << " violations"
                                                 << (rep.failures.empty() ? "" : "; first: " + rep.failures[0]));
    EXPECT(rep.checked > 0, config_name(cfg) << ": nothing checked");
  }
}

void c6_rules() {
  for (const Config& cfg : kSpot) {
    Run r = run_config(cfg);
    SuiteReport rep = run_suite(r.f, r.t.ustar, r.c, "rules");
    EXPECT(rep.violations == 0, config_name(cfg) << ": " << rep.violations << " violations"
                                                 << (rep.failures.empty() ? "" : "; first: " + rep.failures[0]));
    EXPECT(rep.checked > 0, config_name(cfg) << ": nothing checked");
  }
}

void c7_equivalences_ut() {
  Run r = run_config({"pair.json", 3, 2, true, true});
  for (const char* name : {"equivalences", "ut"}) {
    SuiteReport rep = run_suite(r.f, r.t.ustar, r.c, name);
    EXPECT(rep.violations == 0, name << ": " << rep.violations << " violations"
                                     << (rep.failures.empty() ? "" : "; first: " + rep.failures[0]));
    EXPECT(rep.skipped == 0, name << ": " << rep.skipped << " skipped at full depth");
    EXPECT(rep.checked > 0, name << ": nothing checked");
  }
}

void c8_designated() {
  // the self-denier cannot be consistently adopted
  Run liar = run_config({"unit.json", 1, 1, true, false});
  std::int32_t li = find_text(liar.f, "~T(#1)");
  EXPECT(li >= 0, "self-denier missing from the universe");
  EXPECT(liar.c.cls[static_cast<std::size_t>(li)] == Cls::ungrounded, "self-denier is grounded");
  SeedOutcome bad = cumulative_closure(liar.f, {li});
  EXPECT(!bad.consistent, "adopting the self-denier stayed consistent");
  EXPECT(bad.witness.first >= 0, "no witness for the contradiction");

  // the self-affirmer can be adopted, strictly above the fixed point
  Run tt = run_config({"unit.json", 1, 1, false, true});
  std::int32_t ti = find_text(tt.f, "T(#1)");
  EXPECT(ti >= 0, "self-affirmer missing from the universe");
  EXPECT(tt.c.cls[static_cast<std::size_t>(ti)] == Cls::ungrounded, "self-affirmer is grounded");
  SeedOutcome good = cumulative_closure(tt.f, {ti});
  EXPECT(good.consistent, "adopting the self-affirmer went inconsistent");
  EXPECT(good.closure[static_cast<std::size_t>(ti)], "the adopted sentence fell out");
  for (std::size_t i = 0; i < tt.f.size(); ++i)
    EXPECT(!tt.t.ustar[i] || good.closure[i], "seeded closure lost a fixed-point member");
}

void c9_reference_agreement() {
  for (const Config& cfg : kSpot) {
    Run r = run_config(cfg);
    auto ref = testsupport::reference_classify(r.f);
    EXPECT(ref.cls.size() == r.f.size(), config_name(cfg) << ": size mismatch");
    for (std::size_t i = 0; i < r.f.size(); ++i)
      EXPECT(r.c.cls[i] == ref.cls[i],
             config_name(cfg) << ": class mismatch on " << print_sentence(*r.f.store, r.f.sent[i].node)
                              << ": engine " << cls_name(r.c.cls[i]) << ", reference "
                              << cls_name(ref.cls[i]));
  }
}

void c10_quantifier_tables() {
  // derived rows are stable across the surrogate bound
  const std::map<std::string, Cls> want1 = {{"AA", Cls::grounded_false},
                                            {"AE", Cls::grounded_false},
                                            {"EA", Cls::grounded_false},
                                            {"EE", Cls::grounded_true}};
  const std::map<std::string, Cls> want2 = {{"AA", Cls::grounded_false},
                                            {"AE", Cls::grounded_true},
                                            {"EA", Cls::grounded_true},
                                            {"EE", Cls::grounded_true}};
  for (int bound : {2, 4, 8}) {
    Run r = run_config({"double.json", 1, 1, false, false, bound});
    for (const QtblEntry& e : r.f.qtbl) {
      const auto& want = e.table == 1 ? want1 : want2;
      Cls derived = r.c.cls[static_cast<std::size_t>(e.m3)];
      EXPECT(derived == want.at(e.prefix), "bound " << bound << " table " << e.table << " prefix "
                                                    << e.prefix << ": derived " << cls_name(derived));
      // the attribution row always tracks the object row
      EXPECT(r.c.cls[static_cast<std::size_t>(e.m1)] == derived,
             "bound " << bound << " table " << e.table << " prefix " << e.prefix
                      << ": attribution row diverges");
    }
    SuiteReport rep = run_suite(r.f, r.t.ustar, r.c, "quantifier-table");
    EXPECT(rep.violations == 0, "bound " << bound << ": " << rep.violations << " violations"
                                         << (rep.failures.empty() ? "" : "; first: " + rep.failures[0]));
    // claimed-versus-derived spots, stable across bounds
    std::set<std::string> got;
    for (const Discrepancy& d : rep.discrepancies) {
      auto p = d.where.find(',');
      p = d.where.find(',', p + 1);
      got.insert(d.where.substr(0, p) + " " + d.claimed + "/" + d.derived);
    }
    std::set<std::string> expect = {
        "table 1, prefix AE GroundedTrue/GroundedFalse",
        "table 2, prefix AA GroundedTrue/GroundedFalse",
        "table 2, prefix EA GroundedFalse/GroundedTrue",
        "table 2, prefix EE GroundedFalse/GroundedTrue",
    };
    EXPECT(got == expect, "bound " << bound << ": unexpected discrepancy set ("
                                   << got.size() << " spots)");
  }
}

}  // namespace

int main() {
  criterion(1, "least fixed points over the whole parameter grid, consistent and self-reproducing",
            c1_fixpoints);
  criterion(2, "engine closure equals the naive closure on all 8192 micro subsets; 1000 seeded "
               "closures certify minimality",
            c2_exhaustive_and_minimality);
  criterion(3, "1000 random subset pairs certify closure monotonicity", c3_monotonicity);
  criterion(4, "pure sentences classify bivalently against classical evaluation", c4_bivalence);
  criterion(5, "truth attributions track their subjects (t-rule suite clean)", c5_trule);
  criterion(6, "closure rules hold as equivalences at the fixed point (rules suite clean)",
            c6_rules);
  criterion(7, "equivalence chains and the per-instance schema verify with nothing skipped",
            c7_equivalences_ut);
  criterion(8, "the self-denier breaks seeded closures; the self-affirmer extends them",
            c8_designated);
  criterion(9, "an independent valuation reproduces every classification", c9_reference_agreement);
  criterion(10, "quantifier tables derive the pinned rows and expose the four claimed divergences",
            c10_quantifier_tables);
  if (g_failed > 0) {
    std::cerr << g_failed << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
