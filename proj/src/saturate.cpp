#include "gtt/saturate.hpp"

#include <cassert>

namespace gtt {

namespace {

// Tests a compiled rule against committed membership flags.  `L(x)` is
// "x is a universe index and already in the closure".
bool fires(const CompiledRule& r, const std::vector<std::uint8_t>& in_l) {
  auto L = [&](std::int32_t x) { return x >= 0 && in_l[static_cast<std::size_t>(x)] != 0; };
  switch (r.kind) {
    case 0:  // ~~A from A
      return L(r.a);
    case 1:  // A|B from both truth rows except (false,false)
      return (L(r.a) && L(r.b)) || (L(r.a) && L(r.nb)) || (L(r.na) && L(r.b));
    case 2:  // A&B from A, B
      return L(r.a) && L(r.b);
    case 3:  // A->B from rows with false antecedent or true consequent
      return (L(r.na) && L(r.b)) || (L(r.na) && L(r.nb)) || (L(r.a) && L(r.b));
    case 4:  // A<->B from agreeing rows
      return (L(r.a) && L(r.b)) || (L(r.na) && L(r.nb));
    case 5:  // ~(A|B) from ~A, ~B
      return L(r.na) && L(r.nb);
    case 6:  // ~(A&B) from rows with a false side
      return (L(r.na) && L(r.b)) || (L(r.na) && L(r.nb)) || (L(r.a) && L(r.nb));
    case 7:  // ~(A->B) from A, ~B
      return L(r.a) && L(r.nb);
    case 8:  // ~(A<->B) from disagreeing rows
      return (L(r.a) && L(r.nb)) || (L(r.na) && L(r.b));
    default:
      assert(false);
      return false;
  }
}

}  // namespace

SatResult saturate(const Fragment& f, const std::vector<std::uint8_t>& u) {
  const std::size_t n = f.sent.size();
  assert(u.empty() || u.size() == n);

  SatResult res;
  res.in_l.assign(n, 0);
  res.stage.assign(n, -1);

  bool u_nonempty = false;
  for (std::uint8_t b : u)
    if (b) {
      u_nonempty = true;
      break;
    }

  // Wave 0: the seed set.  True pure sentences always; the code-set
  // dependent and fixed quantified seeds only for nonempty input.
  std::vector<std::int32_t> wave;
  std::vector<std::uint8_t> queued(n, 0);
  auto seed = [&](std::int32_t i) {
    if (i < 0 || queued[static_cast<std::size_t>(i)]) return;
    queued[static_cast<std::size_t>(i)] = 1;
    wave.push_back(i);
  };

  for (std::size_t i = 0; i < n; ++i)
    if (f.sent[i].in_z) seed(static_cast<std::int32_t>(i));
  if (u_nonempty) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      // attribution: A coded in u yields the truth claim about A
      seed(f.sent[i].twrap_idx);
      // denial: ~A coded in u yields the denied truth claim about A
      std::int32_t pos = f.sent[i].pos_idx;
      if (pos >= 0) {
        std::int32_t tw = f.sent[static_cast<std::size_t>(pos)].twrap_idx;
        if (tw >= 0) seed(f.sent[static_cast<std::size_t>(tw)].neg_idx);
      }
    }
    for (std::int32_t i : f.z1_fixed) seed(i);
    for (std::int32_t i : f.z2_fixed) seed(i);
    for (std::int32_t i : f.z3) seed(i);
    for (std::int32_t i : f.z4) seed(i);
    for (std::int32_t i : f.z34_neg) seed(i);
  }

  // Breadth-first closure.  A whole wave commits before its consequences
  // are tested, so stage[i] is the exact layer index of the iteration.
  std::vector<std::int32_t> next;
  while (!wave.empty()) {
    for (std::int32_t s : wave) {
      std::size_t si = static_cast<std::size_t>(s);
      res.in_l[si] = 1;
      res.stage[si] = res.waves;
      ++res.l_size;
      if (res.conflict.first < 0) {
        std::int32_t neg = f.sent[si].neg_idx;
        std::int32_t pos = f.sent[si].pos_idx;
        if (neg >= 0 && res.in_l[static_cast<std::size_t>(neg)])
          res.conflict = {s, neg};
        else if (pos >= 0 && res.in_l[static_cast<std::size_t>(pos)])
          res.conflict = {pos, s};
      }
    }
    for (std::int32_t s : wave) {
      std::int64_t lo = f.watch_off[static_cast<std::size_t>(s)];
      std::int64_t hi = f.watch_off[static_cast<std::size_t>(s) + 1];
      for (std::int64_t w = lo; w < hi; ++w) {
        const CompiledRule& r = f.rules[static_cast<std::size_t>(f.watch_dat[static_cast<std::size_t>(w)])];
        std::size_t ci = static_cast<std::size_t>(r.compound);
        if (res.in_l[ci] || queued[ci]) continue;
        if (fires(r, res.in_l)) {
          queued[ci] = 1;
          next.push_back(r.compound);
        }
      }
    }
    ++res.waves;
    wave.swap(next);
    next.clear();
  }
  return res;
}

}  // namespace gtt
