#include "reference_eval.hpp"

#include <cassert>

#include "gtt/model.hpp"

namespace gtt::testsupport {

namespace {

// Three-valued: -1 false, 0 undefined, +1 true.
using TV = int;

struct Shape {
  enum Kind { none, bare_truth, truth_about_truth, attribution } kind = none;
  bool exists_prefix = false;      // single-quantifier shapes
  bool truth_negated = false;      // pattern uses ~T
  bool template_negated = false;   // quoted template is ~P(...)
  int pred = -1;
  std::vector<Quant> prefix;
  std::vector<SymId> vars;
  std::vector<int> arg_of;  // prefix position per template argument
};

// Recognizes the impure quantified shapes the generator emits. Anything
// else stays undefined.
Shape analyze_quant(const Store& st, const FiniteModel& m, NodeId n) {
  Shape s;
  NodeId cur = n;
  while (st.node(cur).kind == NodeKind::quant) {
    const Node& q = st.node(cur);
    s.prefix.push_back(static_cast<Quant>(q.op));
    s.vars.push_back(q.a);
    cur = q.b;
  }
  if (st.node(cur).kind == NodeKind::neg) {
    s.truth_negated = true;
    cur = st.node(cur).a;
  }
  const Node& t = st.node(cur);
  if (t.kind != NodeKind::truth) return s;
  if (static_cast<TruthArg>(t.op) == TruthArg::term) {
    const Term& tm = st.term(t.a);
    if (tm.kind == TermKind::var && s.prefix.size() == 1 && tm.sym == s.vars[0]) {
      s.kind = Shape::bare_truth;
      s.exists_prefix = s.prefix[0] == Quant::exists;
    }
    return s;
  }
  if (static_cast<TruthArg>(t.op) != TruthArg::quote) return s;
  NodeId tpl = t.a;
  if (st.node(tpl).kind == NodeKind::neg) {
    s.template_negated = true;
    tpl = st.node(tpl).a;
  }
  const Node& tn = st.node(tpl);
  if (tn.kind == NodeKind::truth) {
    // quoted bare-truth template over the quantified variable
    if (s.prefix.size() != 1) return s;
    NodeId inner = tpl;
    if (static_cast<TruthArg>(tn.op) != TruthArg::term) return s;
    const Term& tm = st.term(st.node(inner).a);
    if (tm.kind != TermKind::var || tm.sym != s.vars[0]) return s;
    s.kind = Shape::truth_about_truth;
    s.exists_prefix = s.prefix[0] == Quant::exists;
    return s;
  }
  if (tn.kind != NodeKind::pred) return s;
  s.pred = m.pred_index(st.sym_name(tn.a));
  if (s.pred < 0) return s;
  const std::vector<TermId>& args = st.args(tn.b);
  if (args.size() != s.prefix.size()) return s;
  for (TermId a : args) {
    const Term& tm = st.term(a);
    if (tm.kind != TermKind::var) return s;
    int pos = -1;
    for (std::size_t k = 0; k < s.vars.size(); ++k)
      if (s.vars[k] == tm.sym) pos = static_cast<int>(k);
    if (pos < 0) return s;
    s.arg_of.push_back(pos);
  }
  s.kind = Shape::attribution;
  return s;
}

// Classical value of the prefixed attribution pattern over ground atoms.
bool attribution_value(const FiniteModel& m, const Shape& s, std::vector<int>& tuple,
                       std::size_t k) {
  const PredDef& pd = m.preds[static_cast<std::size_t>(s.pred)];
  if (k == s.prefix.size()) {
    std::vector<int> args(s.arg_of.size());
    for (std::size_t i = 0; i < s.arg_of.size(); ++i)
      args[i] = tuple[static_cast<std::size_t>(s.arg_of[i])];
    bool object_true = m.holds(s.pred, args);
    if (s.template_negated) object_true = !object_true;
    // the truth claim about that object sentence, possibly denied
    return s.truth_negated ? !object_true : object_true;
  }
  bool is_all = s.prefix[k] == Quant::forall;
  for (int v : pd.domains[k]) {
    tuple[k] = v;
    bool r = attribution_value(m, s, tuple, k + 1);
    if (is_all && !r) return false;
    if (!is_all && r) return true;
  }
  return is_all;
}

}  // namespace

RefResult reference_classify(const Fragment& f) {
  Store& st = *f.store;
  const std::size_t n = f.sent.size();
  RefResult out;

  std::vector<TV> val(n, 0);
  std::vector<TV> classical(n, 0);
  std::vector<Shape> shapes(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.sent[i].pure)
      classical[i] = eval_object(st, f.model, f.sent[i].node) ? 1 : -1;
    else if (st.node(f.sent[i].node).kind == NodeKind::quant)
      shapes[i] = analyze_quant(st, f.model, f.sent[i].node);
  }

  for (;;) {
    ++out.rounds;
    std::vector<TV> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (f.sent[i].pure) {
        next[i] = classical[i];
        continue;
      }
      const Node& nd = st.node(f.sent[i].node);
      switch (nd.kind) {
        case NodeKind::truth: {
          if (static_cast<TruthArg>(nd.op) != TruthArg::term) break;
          const Term& tm = st.term(nd.a);
          if (tm.kind != TermKind::numeral) break;
          NodeId q = st.decode(tm.value);
          std::int32_t j = q == no_node ? -1 : f.idx(q);
          if (j >= 0) next[i] = val[static_cast<std::size_t>(j)];
          break;
        }
        case NodeKind::neg: {
          std::int32_t j = f.idx(nd.a);
          assert(j >= 0);
          next[i] = -val[static_cast<std::size_t>(j)];
          break;
        }
        case NodeKind::bin: {
          std::int32_t a = f.idx(nd.a), b = f.idx(nd.b);
          assert(a >= 0 && b >= 0);
          TV va = val[static_cast<std::size_t>(a)], vb = val[static_cast<std::size_t>(b)];
          if (va == 0 || vb == 0) break;  // undefined constituents stay undefined
          bool ta = va > 0, tb = vb > 0;
          bool r = false;
          switch (static_cast<BinOp>(nd.op)) {
            case BinOp::or_op: r = ta || tb; break;
            case BinOp::and_op: r = ta && tb; break;
            case BinOp::impl: r = !ta || tb; break;
            case BinOp::iff: r = ta == tb; break;
          }
          next[i] = r ? 1 : -1;
          break;
        }
        case NodeKind::quant: {
          const Shape& s = shapes[i];
          if (s.kind == Shape::bare_truth || s.kind == Shape::truth_about_truth) {
            // a true sentence and a non-true sentence always exist
            next[i] = s.exists_prefix ? 1 : -1;
          } else if (s.kind == Shape::attribution) {
            std::vector<int> tuple(s.prefix.size(), 0);
            next[i] = attribution_value(f.model, s, tuple, 0) ? 1 : -1;
          }
          break;
        }
        default:
          break;
      }
    }
    if (next == val) break;
    val.swap(next);
    assert(out.rounds < static_cast<int>(n) + 8);
  }

  out.cls.assign(n, Cls::ungrounded);
  for (std::size_t i = 0; i < n; ++i) {
    if (val[i] > 0)
      out.cls[i] = Cls::grounded_true;
    else if (val[i] < 0 && f.sent[i].neg_idx >= 0)
      out.cls[i] = Cls::grounded_false;
  }
  return out;
}

}  // namespace gtt::testsupport
