#include "gtt/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gtt/errors.hpp"
#include "gtt/print.hpp"

namespace gtt {

namespace {

constexpr std::size_t kFailureCap = 25;

struct Ctx {
  const Fragment& f;
  const std::vector<std::uint8_t>& L;
  const Classification& c;
  SuiteReport rep;

  Store& st() const { return *f.store; }
  bool inl(std::int32_t i) const { return i >= 0 && L[static_cast<std::size_t>(i)] != 0; }
  Cls cl(std::int32_t i) const { return c.cls[static_cast<std::size_t>(i)]; }
  bool dec(std::int32_t i) const { return cl(i) != Cls::ungrounded; }
  std::int32_t neg(std::int32_t i) const {
    return i < 0 ? -1 : f.sent[static_cast<std::size_t>(i)].neg_idx;
  }
  std::int32_t twrap(std::int32_t i) const {
    return i < 0 ? -1 : f.sent[static_cast<std::size_t>(i)].twrap_idx;
  }
  std::string txt(std::int32_t i) const {
    return print_sentence(st(), f.sent[static_cast<std::size_t>(i)].node);
  }

  void check(bool ok, const std::string& what) {
    ++rep.checked;
    if (ok) return;
    ++rep.violations;
    if (rep.failures.size() < kFailureCap) rep.failures.push_back(what);
  }
  void skip(const std::string& why) {
    ++rep.skipped;
    if (std::find(rep.notes.begin(), rep.notes.end(), why) == rep.notes.end())
      rep.notes.push_back(why);
  }
};

Cls flip_cls(Cls c) {
  if (c == Cls::grounded_true) return Cls::grounded_false;
  if (c == Cls::grounded_false) return Cls::grounded_true;
  return Cls::ungrounded;
}

// Expected class of A <-> B given the classes of its sides.
Cls link_cls(Cls a, Cls b) {
  if (a == Cls::ungrounded || b == Cls::ungrounded) return Cls::ungrounded;
  return a == b ? Cls::grounded_true : Cls::grounded_false;
}

// ---------- t-rule ----------

SuiteReport suite_trule(const Fragment& f, const std::vector<std::uint8_t>& L,
                        const Classification& c) {
  Ctx x{f, L, c, {}};
  x.rep.name = "t-rule";
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    std::int32_t q = f.sent[i].quote_idx;
    if (q < 0) continue;
    std::int32_t si = static_cast<std::int32_t>(i);
    x.check(x.cl(si) == x.cl(q), "truth claim " + x.txt(si) + " is " + cls_name(x.cl(si)) +
                                     " but its subject " + x.txt(q) + " is " + cls_name(x.cl(q)));
  }
  // reflection biconditionals, where the fragment contains them
  Store& st = x.st();
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    std::int32_t a = static_cast<std::int32_t>(i);
    std::int32_t tw = x.twrap(a);
    if (tw < 0) continue;
    NodeId an = f.sent[i].node;
    std::int32_t pos_link = f.idx(st.mk_bin(BinOp::iff, f.sent[static_cast<std::size_t>(tw)].node, an));
    if (pos_link >= 0) {
      Cls want = x.dec(a) ? Cls::grounded_true : Cls::ungrounded;
      x.check(x.cl(pos_link) == want, "reflection " + x.txt(pos_link) + " is " +
                                          cls_name(x.cl(pos_link)) + ", expected " + cls_name(want));
    }
    std::int32_t ntw = x.neg(tw);
    if (ntw >= 0) {
      std::int32_t neg_link = f.idx(st.mk_bin(BinOp::iff, f.sent[static_cast<std::size_t>(ntw)].node, an));
      if (neg_link >= 0) {
        Cls want = x.dec(a) ? Cls::grounded_false : Cls::ungrounded;
        x.check(x.cl(neg_link) == want, "denied reflection " + x.txt(neg_link) + " is " +
                                            cls_name(x.cl(neg_link)) + ", expected " + cls_name(want));
      }
    }
  }
  return x.rep;
}

// ---------- rules ----------

bool classical(BinOp op, bool a, bool b) {
  switch (op) {
    case BinOp::or_op: return a || b;
    case BinOp::and_op: return a && b;
    case BinOp::impl: return !a || b;
    case BinOp::iff: return a == b;
  }
  return false;
}

SuiteReport suite_rules(const Fragment& f, const std::vector<std::uint8_t>& L,
                        const Classification& c) {
  Ctx x{f, L, c, {}};
  x.rep.name = "rules";
  Store& st = x.st();

  // double negation: ~~A enters the closure exactly when A does
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    const Node& nd = st.node(f.sent[i].node);
    if (nd.kind != NodeKind::neg) continue;
    const Node& in = st.node(nd.a);
    if (in.kind != NodeKind::neg) continue;
    std::int32_t a = f.idx(in.a);
    if (a < 0) {
      x.skip("double negation with the base sentence outside the universe");
      continue;
    }
    std::int32_t si = static_cast<std::int32_t>(i);
    x.check(x.inl(si) == x.inl(a),
            "double negation " + x.txt(si) + " disagrees with " + x.txt(a));
  }

  // connectives: decided exactly when both sides are, with classical value
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    const Node& nd = st.node(f.sent[i].node);
    if (nd.kind != NodeKind::bin) continue;
    std::int32_t a = f.idx(nd.a), b = f.idx(nd.b);
    if (a < 0 || b < 0) {
      x.skip("connective with a constituent outside the universe");
      continue;
    }
    std::int32_t si = static_cast<std::int32_t>(i);
    bool both = x.dec(a) && x.dec(b);
    x.check(x.dec(si) == both, "compound " + x.txt(si) + " is " + cls_name(x.cl(si)) +
                                   " with sides " + cls_name(x.cl(a)) + ", " + cls_name(x.cl(b)));
    if (x.dec(si) && both) {
      bool want = classical(static_cast<BinOp>(nd.op), x.cl(a) == Cls::grounded_true,
                            x.cl(b) == Cls::grounded_true);
      x.check((x.cl(si) == Cls::grounded_true) == want,
              "compound " + x.txt(si) + " has a nonclassical value");
    }
  }

  // fixed quantified truth sentences against their instance sets
  for (std::int32_t k : f.tq_members) {
    const Node& qn = st.node(f.sent[static_cast<std::size_t>(k)].node);
    bool inner_neg = st.node(qn.b).kind == NodeKind::neg;
    bool is_all = static_cast<Quant>(qn.op) == Quant::forall;
    std::vector<std::int32_t> insts;
    for (std::size_t i = 0; i < f.sent.size(); ++i) {
      std::int32_t tw = f.sent[i].twrap_idx;
      if (tw < 0) continue;
      std::int32_t inst = inner_neg ? x.neg(tw) : tw;
      if (inst >= 0) insts.push_back(inst);
    }
    if (insts.empty()) {
      x.skip("quantified truth sentence with no instances in the universe");
      continue;
    }
    bool l_verdict = is_all;
    bool f_verdict = !is_all;
    for (std::int32_t inst : insts) {
      if (is_all) {
        l_verdict = l_verdict && x.inl(inst);
        f_verdict = f_verdict || x.inl(x.neg(inst));
      } else {
        l_verdict = l_verdict || x.inl(inst);
        f_verdict = f_verdict && x.inl(x.neg(inst));
      }
    }
    x.check(x.inl(k) == l_verdict,
            "quantified truth sentence " + x.txt(k) + " disagrees with its instances");
    std::int32_t nk = x.neg(k);
    if (nk >= 0)
      x.check(x.inl(nk) == f_verdict,
              "negated quantified truth sentence " + x.txt(nk) + " disagrees with its instances");
  }

  // quantified truth-about-truth sentences against doubly wrapped instances
  for (std::int32_t k : f.ttq_members) {
    const Node& qn = st.node(f.sent[static_cast<std::size_t>(k)].node);
    bool is_all = static_cast<Quant>(qn.op) == Quant::forall;
    const Node& body = st.node(qn.b);
    bool outer_neg = body.kind == NodeKind::neg;
    const Node& tnode = st.node(outer_neg ? body.a : qn.b);
    // the quoted template is T(x) or ~T(x)
    bool inner_neg = st.node(tnode.a).kind == NodeKind::neg;
    std::vector<std::int32_t> insts;
    for (std::size_t i = 0; i < f.sent.size(); ++i) {
      std::int32_t tw = f.sent[i].twrap_idx;
      if (tw < 0) continue;
      std::int32_t s2 = inner_neg ? x.neg(tw) : tw;
      std::int32_t w2 = x.twrap(s2);
      std::int32_t inst = outer_neg ? x.neg(w2) : w2;
      if (inst >= 0) insts.push_back(inst);
    }
    if (insts.empty()) {
      x.skip("truth-about-truth sentence with no doubly wrapped instances; needs --reflect 2");
      continue;
    }
    bool l_verdict = is_all;
    bool f_verdict = !is_all;
    for (std::int32_t inst : insts) {
      if (is_all) {
        l_verdict = l_verdict && x.inl(inst);
        f_verdict = f_verdict || x.inl(x.neg(inst));
      } else {
        l_verdict = l_verdict || x.inl(inst);
        f_verdict = f_verdict && x.inl(x.neg(inst));
      }
    }
    x.check(x.inl(k) == l_verdict,
            "truth-about-truth sentence " + x.txt(k) + " disagrees with its instances");
    std::int32_t nk = x.neg(k);
    if (nk >= 0)
      x.check(x.inl(nk) == f_verdict, "negated truth-about-truth sentence " + x.txt(nk) +
                                          " disagrees with its instances");
  }

  // prefixed attributions against their ground instances
  for (const TpqInfo& t : f.tpq) {
    const PredDef& pd = f.model.preds[static_cast<std::size_t>(t.pred)];
    std::vector<int> tuple(static_cast<std::size_t>(pd.arity), 0);
    // leaf: the (possibly negated) attribution to one ground atom
    auto leaf = [&](bool negated) -> std::int32_t {
      std::vector<TermId> args;
      for (int v : tuple) args.push_back(st.term_elem(st.sym(f.model.elements[static_cast<std::size_t>(v)])));
      NodeId atom = st.mk_pred(st.sym(pd.name), args);
      NodeId base = t.negated_pred ? st.mk_neg(atom) : atom;
      std::int32_t bi = f.idx(base);
      std::int32_t tw = x.twrap(bi);
      std::int32_t inst = t.negated_truth ? x.neg(tw) : tw;
      return negated ? x.neg(inst) : inst;
    };
    // quantifier pattern over the per-argument domains
    std::function<bool(std::size_t, bool)> patt = [&](std::size_t k, bool f_side) -> bool {
      if (k == t.prefix.size()) return x.inl(leaf(f_side));
      bool is_all = t.prefix[k] == Quant::forall;
      if (f_side) is_all = !is_all;  // negation swaps the prefix
      for (int v : pd.domains[k]) {
        tuple[k] = v;
        bool r = patt(k + 1, f_side);
        if (is_all && !r) return false;
        if (!is_all && r) return true;
      }
      return is_all;
    };
    x.check(x.inl(t.idx) == patt(0, false),
            "prefixed attribution " + x.txt(t.idx) + " disagrees with its ground instances");
    std::int32_t nk = x.neg(t.idx);
    if (nk >= 0)
      x.check(x.inl(nk) == patt(0, true), "negated prefixed attribution " + x.txt(nk) +
                                              " disagrees with its ground instances");
  }
  return x.rep;
}

// ---------- equivalences ----------

SuiteReport suite_equivalences(const Fragment& f, const std::vector<std::uint8_t>& L,
                               const Classification& c) {
  Ctx x{f, L, c, {}};
  x.rep.name = "equivalences";
  for (const Chain& ch : f.chains) {
    std::size_t ndec = 0;
    for (std::int32_t m : ch.members)
      if (x.dec(m)) ++ndec;
    if (ndec == 0) {
      for (std::int32_t l : ch.links)
        x.check(x.cl(l) == Cls::ungrounded, "chain " + ch.label +
                                                ": link decided among undecided members: " + x.txt(l));
      continue;
    }
    if (ndec != ch.members.size()) {
      std::ostringstream os;
      os << "chain " << ch.label << ": mixed decidedness:";
      for (std::int32_t m : ch.members) os << "  [" << cls_name(x.cl(m)) << "] " << x.txt(m);
      x.check(false, os.str());
      continue;
    }
    Cls v = x.cl(ch.members.front());
    bool uniform = true;
    for (std::int32_t m : ch.members)
      if (x.cl(m) != v) uniform = false;
    if (!uniform) {
      std::ostringstream os;
      os << "chain " << ch.label << ": members disagree:";
      for (std::int32_t m : ch.members) os << "  [" << cls_name(x.cl(m)) << "] " << x.txt(m);
      x.check(false, os.str());
      continue;
    }
    x.check(true, "");
    for (std::int32_t l : ch.links)
      x.check(x.cl(l) == Cls::grounded_true,
              "chain " + ch.label + ": link not true: " + x.txt(l));
  }
  return x.rep;
}

// ---------- ut ----------

SuiteReport suite_ut(const Fragment& f, const std::vector<std::uint8_t>& L,
                     const Classification& c) {
  Ctx x{f, L, c, {}};
  x.rep.name = "ut";
  Store& st = x.st();
  for (std::int32_t a : f.obj_members) {
    x.check(x.dec(a), "object sentence undecided: " + x.txt(a));
    std::int32_t tw = x.twrap(a);
    if (tw < 0) {
      x.skip("object sentence without a truth attribution in the universe");
      continue;
    }
    x.check(x.cl(tw) == x.cl(a), "attribution " + x.txt(tw) + " is " + cls_name(x.cl(tw)) +
                                     " but " + x.txt(a) + " is " + cls_name(x.cl(a)));
    std::int32_t link =
        f.idx(st.mk_bin(BinOp::iff, f.sent[static_cast<std::size_t>(tw)].node, f.sent[static_cast<std::size_t>(a)].node));
    if (link < 0) {
      x.skip("truth schema instance outside the depth gate");
      continue;
    }
    x.check(x.cl(link) == Cls::grounded_true, "truth schema instance not true: " + x.txt(link));
  }
  return x.rep;
}

// ---------- quantifier-table ----------

// Claimed truth values for the two prefix tables of the doubling relation.
// Keyed by prefix; 'A' quantifies universally, 'E' existentially. The
// derived values take precedence; disagreements are reported as
// discrepancies.
const std::set<std::string> kClaimedTrue1 = {"AE", "EE"};
const std::set<std::string> kClaimedTrue2 = {"AA", "AE"};

SuiteReport suite_qtbl(const Fragment& f, const std::vector<std::uint8_t>& L,
                       const Classification& c) {
  Ctx x{f, L, c, {}};
  x.rep.name = "quantifier-table";
  // pair the two tables per predicate and prefix
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> groups;
  for (std::size_t i = 0; i < f.qtbl.size(); ++i) {
    const QtblEntry& e = f.qtbl[i];
    auto& g = groups[{e.pred, e.prefix}];
    (e.table == 1 ? g.first : g.second) = static_cast<int>(i) + 1;  // 1-based, 0 = absent
  }
  for (const auto& [key, g] : groups) {
    if (g.first == 0 || g.second == 0) {
      x.skip("quantifier table with a missing half");
      continue;
    }
    const QtblEntry& e1 = f.qtbl[static_cast<std::size_t>(g.first - 1)];
    const QtblEntry& e2 = f.qtbl[static_cast<std::size_t>(g.second - 1)];
    std::string at = " [" + key.first + ", prefix " + key.second + "]";

    // derivable agreements
    x.check(x.cl(e1.m1) == x.cl(e1.m3),
            "attribution row disagrees with object row" + at + ": " + x.txt(e1.m1) + " vs " + x.txt(e1.m3));
    x.check(x.cl(e1.m2) == x.cl(e1.m3),
            "quoted row disagrees with object row" + at + ": " + x.txt(e1.m2) + " vs " + x.txt(e1.m3));
    x.check(x.cl(e2.m1) == x.cl(e2.m3),
            "denied attribution row disagrees with negated object row" + at + ": " + x.txt(e2.m1) +
                " vs " + x.txt(e2.m3));
    x.check(x.cl(e2.m2) == flip_cls(x.cl(e1.m3)),
            "denied quoted row does not negate the plain object row" + at);
    // the middle member of the second table is a plain denial of the whole
    // quoted sentence; for mixed prefixes it can differ from the negated
    // object row. Recorded, not a violation.
    if (x.cl(e2.m2) != x.cl(e2.m3)) {
      std::string note = "second-table middle member disagrees with its object row" + at + ": " +
                         x.txt(e2.m2) + " is " + cls_name(x.cl(e2.m2)) + ", " + x.txt(e2.m3) +
                         " is " + cls_name(x.cl(e2.m3));
      if (std::find(x.rep.notes.begin(), x.rep.notes.end(), note) == x.rep.notes.end())
        x.rep.notes.push_back(note);
    }

    // links classify from their member values
    for (const QtblEntry* e : {&e1, &e2}) {
      x.check(x.cl(e->l12) == link_cls(x.cl(e->m1), x.cl(e->m2)),
              "first link misclassified" + at + ": " + x.txt(e->l12));
      x.check(x.cl(e->l23) == link_cls(x.cl(e->m2), x.cl(e->m3)),
              "second link misclassified" + at + ": " + x.txt(e->l23));
    }

    // claimed truth values apply to the doubling relation only
    if (f.model.family == "x_eq_2y" && key.first == "R" && key.second.size() == 2) {
      for (const QtblEntry* e : {&e1, &e2}) {
        const std::set<std::string>& tru = e->table == 1 ? kClaimedTrue1 : kClaimedTrue2;
        Cls claimed = tru.count(e->prefix) ? Cls::grounded_true : Cls::grounded_false;
        Cls derived = x.cl(e->m3);
        if (claimed != derived)
          x.rep.discrepancies.push_back({"table " + std::to_string(e->table) + ", prefix " +
                                             e->prefix + ", " + x.txt(e->m3),
                                         cls_name(claimed), cls_name(derived)});
      }
    }
  }
  return x.rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"t-rule", "rules", "equivalences", "ut",
                                                 "quantifier-table"};
  return names;
}

SuiteReport run_suite(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                      const Classification& cls, const std::string& name) {
  if (name == "t-rule") return suite_trule(f, ustar, cls);
  if (name == "rules") return suite_rules(f, ustar, cls);
  if (name == "equivalences") return suite_equivalences(f, ustar, cls);
  if (name == "ut") return suite_ut(f, ustar, cls);
  if (name == "quantifier-table") return suite_qtbl(f, ustar, cls);
  throw InputError("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const Fragment& f, const std::vector<std::uint8_t>& ustar,
                                    const Classification& cls,
                                    const std::vector<std::string>& names) {
  std::vector<SuiteReport> out;
  for (const std::string& n : names) out.push_back(run_suite(f, ustar, cls, n));
  return out;
}

}  // namespace gtt
