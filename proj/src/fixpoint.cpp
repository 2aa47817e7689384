#include "gtt/fixpoint.hpp"

#include <random>
#include <sstream>

#include "gtt/errors.hpp"
#include "gtt/log.hpp"
#include "gtt/print.hpp"

namespace gtt {

namespace {

[[noreturn]] void throw_conflict(const Fragment& f, std::pair<std::int32_t, std::int32_t> w,
                                 const char* where) {
  std::ostringstream os;
  os << where << ": derived both a sentence and its negation: "
     << print_sentence(*f.store, f.sent[static_cast<std::size_t>(w.first)].node) << "  and  "
     << print_sentence(*f.store, f.sent[static_cast<std::size_t>(w.second)].node);
  throw ConsistencyViolation(os.str());
}

// Scans V for a member whose negation is also a member.
std::pair<std::int32_t, std::int32_t> find_conflict(const Fragment& f,
                                                    const std::vector<std::uint8_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    std::int32_t neg = f.sent[i].neg_idx;
    if (neg >= 0 && v[static_cast<std::size_t>(neg)])
      return {static_cast<std::int32_t>(i), neg};
  }
  return {-1, -1};
}

}  // namespace

FixpointTrace outer_fixpoint(const Fragment& f) {
  FixpointTrace tr;
  std::vector<std::uint8_t> u;  // empty set
  std::int64_t prev_size = 0;
  for (;;) {
    SatResult sat = saturate(f, u);
    ++tr.rounds;
    tr.iterates.push_back({sat.l_size, sat.l_size - prev_size, sat.consistent()});
    if (!sat.consistent()) throw_conflict(f, sat.conflict, "fixpoint iteration");
    // the operator is monotone, so each round must contain the last
    for (std::size_t i = 0; i < sat.in_l.size(); ++i)
      if (!u.empty() && u[i] && !sat.in_l[i])
        throw ConsistencyViolation("fixpoint iteration lost a member: " +
                                   print_sentence(*f.store, f.sent[i].node));
    if (!u.empty() && sat.l_size == prev_size) {
      tr.ustar = u;
      tr.final_sat = std::move(sat);
      break;
    }
    prev_size = sat.l_size;
    u = std::move(sat.in_l);
  }
  log::info("fixpoint reached after " + std::to_string(tr.rounds) + " rounds, " +
            std::to_string(prev_size) + " members");
  return tr;
}

SeedOutcome cumulative_closure(const Fragment& f, const std::vector<std::int32_t>& extras) {
  SeedOutcome out;
  std::vector<std::uint8_t> v = saturate(f, {}).in_l;  // U0, always kept
  for (std::int32_t e : extras) {
    if (e < 0 || static_cast<std::size_t>(e) >= v.size())
      throw InputError("seed index out of range");
    v[static_cast<std::size_t>(e)] = 1;
  }
  for (;;) {
    SatResult sat = saturate(f, v);
    ++out.rounds;
    bool grew = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sat.in_l[i] && !v[i]) {
        v[i] = 1;
        grew = true;
      }
    auto w = find_conflict(f, v);
    if (w.first >= 0) {
      out.consistent = false;
      out.witness = w;
      break;
    }
    if (!grew) break;
  }
  out.closure = std::move(v);
  return out;
}

MinimalityReport check_minimality(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                                  std::int32_t samples, std::uint64_t seed) {
  MinimalityReport rep;
  std::vector<std::int32_t> outside;
  for (std::size_t i = 0; i < ustar.size(); ++i)
    if (!ustar[i]) outside.push_back(static_cast<std::int32_t>(i));
  if (outside.empty()) return rep;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
  std::uniform_int_distribution<int> how_many(1, 4);
  for (std::int32_t s = 0; s < samples; ++s) {
    std::vector<std::int32_t> extras;
    int k = how_many(rng);
    for (int j = 0; j < k; ++j) extras.push_back(outside[pick(rng)]);
    SeedOutcome oc = cumulative_closure(f, extras);
    ++rep.samples;
    if (!oc.consistent) {
      ++rep.inconsistent;
      continue;
    }
    bool superset = true;
    for (std::size_t i = 0; i < ustar.size(); ++i)
      if (ustar[i] && !oc.closure[i]) {
        superset = false;
        break;
      }
    if (superset)
      ++rep.supersets;
    else
      ++rep.violations;
  }
  return rep;
}

MonotonicityReport check_monotonicity(const Fragment& f, std::int32_t samples,
                                      std::uint64_t seed) {
  MonotonicityReport rep;
  const std::size_t n = f.sent.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int32_t s = 0; s < samples; ++s) {
    double density = 0.02 + 0.28 * unit(rng);
    std::vector<std::uint8_t> u(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (unit(rng) < density) u[i] = 1;
    // drop the later member of each contradictory pair, keeping u consistent
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      std::int32_t pos = f.sent[i].pos_idx;
      if (pos >= 0 && u[static_cast<std::size_t>(pos)]) u[i] = 0;
    }
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] && unit(rng) < 0.5) v[i] = 1;

    SatResult lu = saturate(f, u);
    SatResult lv = saturate(f, v);
    ++rep.samples;
    for (std::size_t i = 0; i < n; ++i)
      if (lv.in_l[i] && !lu.in_l[i]) {
        ++rep.violations;
        log::warn("monotonicity violation at: " + print_sentence(*f.store, f.sent[i].node));
        break;
      }
  }
  return rep;
}

}  // namespace gtt
