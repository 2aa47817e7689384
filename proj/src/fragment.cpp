#include "gtt/fragment.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "gtt/errors.hpp"
#include "gtt/log.hpp"

namespace gtt {

const char* family_name(Family f) {
  switch (f) {
    case Family::obj: return "obj";
    case Family::dsg: return "dsg";
    case Family::qobj: return "qobj";
    case Family::tq: return "tq";
    case Family::ttq: return "ttq";
    case Family::tpq: return "tpq";
    case Family::quote_base: return "quote_base";
    case Family::quote_tower: return "quote_tower";
    case Family::pairs: return "pairs";
    case Family::negchain: return "negchain";
    case Family::trf: return "trf";
    case Family::eqf: return "eqf";
    case Family::qtbl: return "qtbl";
    case Family::subform: return "subform";
    case Family::negpass: return "negpass";
  }
  return "?";
}

namespace {

const char* canonical_var(int i) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (i < 4) return names[i];
  static thread_local std::string buf;
  buf = "v" + std::to_string(i + 1);
  return buf.c_str();
}

struct Builder {
  Store& st;
  Fragment& f;
  const FragmentParams& p;
  const FiniteModel& m;

  std::vector<std::int32_t> b0;               // quote base
  std::vector<std::int32_t> wrapped_subjects; // sentences whose T(@X) exists

  std::int32_t add(NodeId n, Family fam) {
    auto it = f.index_of.find(n);
    if (it != f.index_of.end()) return it->second;
    const Node& nd = st.node(n);
    if (nd.varset != 0) throw InputError("universe members must be closed sentences");
    if (nd.has_hole) throw InputError("universe members must not contain placeholders");
    if (static_cast<std::int64_t>(f.sent.size()) >= p.cap)
      throw CapExceeded("sentence cap " + std::to_string(p.cap) +
                        " exceeded while generating family " + family_name(fam));
    std::int32_t i = static_cast<std::int32_t>(f.sent.size());
    SentenceInfo si;
    si.node = n;
    si.family = fam;
    si.pure = nd.pure;
    f.sent.push_back(si);
    f.index_of.emplace(n, i);
    return i;
  }

  // Flips an atom-or-negated-atom; two flips cancel.
  NodeId flip(NodeId a) {
    const Node& nd = st.node(a);
    if (nd.kind == NodeKind::neg) return nd.a;
    return st.mk_neg(a);
  }

  NodeId quantify(const std::vector<Quant>& prefix, const std::vector<SymId>& vars, NodeId body) {
    NodeId acc = body;
    for (std::size_t i = prefix.size(); i-- > 0;) acc = st.mk_quant(prefix[i], vars[i], acc);
    return acc;
  }

  void each_prefix(int arity, const std::function<void(const std::vector<Quant>&)>& fn) {
    std::vector<Quant> prefix(arity);
    for (int mask = 0; mask < (1 << arity); ++mask) {
      for (int i = 0; i < arity; ++i)
        prefix[i] = (mask >> i) & 1 ? Quant::exists : Quant::forall;
      fn(prefix);
    }
  }

  void each_tuple(const PredDef& d, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple(d.arity);
    std::vector<std::size_t> pos(d.arity, 0);
    for (;;) {
      for (int i = 0; i < d.arity; ++i) tuple[i] = d.domains[i][pos[i]];
      fn(tuple);
      int i = d.arity - 1;
      while (i >= 0 && ++pos[i] == d.domains[i].size()) pos[i--] = 0;
      if (i < 0) break;
    }
  }

  NodeId obj_atom(int pred, const std::vector<int>& tuple) {
    std::vector<TermId> args;
    for (int e : tuple) args.push_back(st.term_elem(st.sym(m.elements[e])));
    return st.mk_pred(st.sym(m.preds[pred].name), args);
  }

  NodeId pred_template(int pred, bool negated, std::vector<SymId>& vars_out) {
    const PredDef& d = m.preds[pred];
    std::vector<TermId> args;
    vars_out.clear();
    for (int i = 0; i < d.arity; ++i) {
      SymId v = st.sym(canonical_var(i));
      vars_out.push_back(v);
      args.push_back(st.term_var(v));
    }
    NodeId a = st.mk_pred(st.sym(d.name), args);
    return negated ? st.mk_neg(a) : a;
  }

  std::string prefix_label(const std::vector<Quant>& prefix) {
    std::string s;
    for (Quant q : prefix) s += (q == Quant::forall ? 'A' : 'E');
    return s;
  }

  // ---------- generation families ----------

  void gen_obj() {
    for (std::size_t pi = 0; pi < m.preds.size(); ++pi) {
      each_tuple(m.preds[pi], [&](const std::vector<int>& t) {
        NodeId a = obj_atom(static_cast<int>(pi), t);
        f.obj_members.push_back(add(a, Family::obj));
        f.obj_members.push_back(add(st.mk_neg(a), Family::obj));
      });
    }
  }

  void gen_dsg() {
    if (p.with_liar) {
      const Designated& d = st.register_designated(st.mk_neg(st.mk_truth_hole()), "liar");
      f.dsg_members.push_back(add(d.node, Family::dsg));
    }
    if (p.with_truthteller) {
      const Designated& d = st.register_designated(st.mk_truth_hole(), "truthteller");
      f.dsg_members.push_back(add(d.node, Family::dsg));
    }
  }

  void gen_qobj() {
    for (std::size_t pi = 0; pi < m.preds.size(); ++pi) {
      for (bool negated : {false, true}) {
        std::vector<SymId> vars;
        NodeId body = pred_template(static_cast<int>(pi), negated, vars);
        each_prefix(m.preds[pi].arity, [&](const std::vector<Quant>& prefix) {
          NodeId s = quantify(prefix, vars, body);
          std::int32_t i = add(s, Family::qobj);
          std::int32_t ni = add(st.mk_neg(s), Family::qobj);
          b0.push_back(i);
          b0.push_back(ni);
        });
      }
    }
  }

  void gen_tq() {
    SymId x = st.sym("x");
    NodeId tx = st.mk_truth_term(st.term_var(x));
    for (bool neg_t : {false, true}) {
      NodeId body = neg_t ? st.mk_neg(tx) : tx;
      for (Quant q : {Quant::forall, Quant::exists}) {
        NodeId s = st.mk_quant(q, x, body);
        std::int32_t i = add(s, Family::tq);
        std::int32_t ni = add(st.mk_neg(s), Family::tq);
        f.tq_members.push_back(i);
        b0.push_back(i);
        b0.push_back(ni);
        // seeded set: negations of the universal forms, the existential forms
        f.z1_fixed.push_back(q == Quant::forall ? ni : i);
      }
    }
  }

  void gen_ttq() {
    SymId x = st.sym("x");
    for (bool inner_neg : {false, true}) {
      NodeId inner = st.mk_truth_term(st.term_var(x));
      if (inner_neg) inner = st.mk_neg(inner);
      NodeId quoted = st.mk_truth_quote(inner);  // open template, stays a quote
      for (bool outer_neg : {false, true}) {
        NodeId body = outer_neg ? st.mk_neg(quoted) : quoted;
        for (Quant q : {Quant::forall, Quant::exists}) {
          NodeId s = st.mk_quant(q, x, body);
          std::int32_t i = add(s, Family::ttq);
          std::int32_t ni = add(st.mk_neg(s), Family::ttq);
          f.ttq_members.push_back(i);
          b0.push_back(i);
          b0.push_back(ni);
          f.z2_fixed.push_back(q == Quant::forall ? ni : i);
        }
      }
    }
  }

  void gen_tpq() {
    for (std::size_t pi = 0; pi < m.preds.size(); ++pi) {
      for (bool negated_pred : {false, true}) {
        std::vector<SymId> vars;
        NodeId body = pred_template(static_cast<int>(pi), negated_pred, vars);
        NodeId quoted = st.mk_truth_quote(body);
        for (bool negated_truth : {false, true}) {
          NodeId attr = negated_truth ? st.mk_neg(quoted) : quoted;
          each_prefix(m.preds[pi].arity, [&](const std::vector<Quant>& prefix) {
            NodeId s = quantify(prefix, vars, attr);
            std::int32_t i = add(s, Family::tpq);
            std::int32_t ni = add(st.mk_neg(s), Family::tpq);
            // matching object sentence: same polarity for T, flipped for ~T
            NodeId obj_body = negated_truth ? flip(body) : body;
            NodeId obj = quantify(prefix, vars, obj_body);
            TpqInfo info;
            info.idx = i;
            info.pred = static_cast<int>(pi);
            info.negated_pred = negated_pred;
            info.negated_truth = negated_truth;
            info.prefix = prefix;
            info.object_node = obj;
            info.object_true = eval_object(st, m, obj);
            f.tpq.push_back(info);
            if (info.object_true) {
              (negated_truth ? f.z4 : f.z3).push_back(i);
            } else {
              f.z34_neg.push_back(ni);
            }
          });
        }
      }
    }
  }

  void gen_quote_base() {
    if (p.depth < 2) return;
    std::vector<std::int32_t> eqbase = f.obj_members;
    eqbase.insert(eqbase.end(), f.dsg_members.begin(), f.dsg_members.end());
    for (std::int32_t ai : eqbase) {
      for (std::int32_t bi : eqbase) {
        for (BinOp op : {BinOp::or_op, BinOp::and_op, BinOp::impl, BinOp::iff}) {
          NodeId c = st.mk_bin(op, f.sent[ai].node, f.sent[bi].node);
          if (st.node(c).depth <= p.depth) b0.push_back(add(c, Family::quote_base));
        }
      }
    }
  }

  void gen_tower() {
    // b0 front: obj and dsg members are quote subjects too
    std::vector<std::int32_t> base = f.obj_members;
    base.insert(base.end(), f.dsg_members.begin(), f.dsg_members.end());
    base.insert(base.end(), b0.begin(), b0.end());
    std::vector<std::int32_t> layer = base;
    for (int k = 1; k <= p.reflect; ++k) {
      wrapped_subjects.insert(wrapped_subjects.end(), layer.begin(), layer.end());
      std::vector<std::int32_t> next;
      for (std::int32_t xi : layer) {
        NodeId tw = st.mk_truth_quote(f.sent[xi].node);
        std::int32_t ti = add(tw, Family::quote_tower);
        std::int32_t ni = add(st.mk_neg(tw), Family::quote_tower);
        next.push_back(ti);
        next.push_back(ni);
      }
      layer = std::move(next);
    }
  }

  void gen_pairs() {
    std::vector<NodeId> pops;
    std::vector<std::int32_t> atoms = f.obj_members;
    atoms.insert(atoms.end(), f.dsg_members.begin(), f.dsg_members.end());
    for (std::int32_t xi : atoms) pops.push_back(f.sent[xi].node);
    for (std::int32_t xi : atoms) {
      NodeId tw = st.mk_truth_quote(f.sent[xi].node);
      pops.push_back(tw);
      pops.push_back(st.mk_neg(tw));
    }
    for (NodeId a : pops) {
      for (NodeId b : pops) {
        for (BinOp op : {BinOp::or_op, BinOp::and_op, BinOp::impl, BinOp::iff}) {
          NodeId c = st.mk_bin(op, a, b);
          if (st.node(c).depth <= p.depth) add(c, Family::pairs);
        }
      }
    }
  }

  void gen_negchain() {
    std::vector<std::int32_t> bases = f.obj_members;
    bases.insert(bases.end(), f.dsg_members.begin(), f.dsg_members.end());
    for (std::int32_t i : f.tq_members) bases.push_back(i);
    for (std::int32_t i : f.ttq_members) bases.push_back(i);
    for (const TpqInfo& t : f.tpq) bases.push_back(t.idx);
    for (std::int32_t xi : b0) bases.push_back(xi);
    for (std::int32_t xi : bases) {
      NodeId cur = f.sent[xi].node;
      for (;;) {
        cur = st.mk_neg(cur);
        if (st.node(cur).depth > p.depth) break;
        add(cur, Family::negchain);
      }
    }
  }

  void gen_trf() {
    for (std::int32_t xi : wrapped_subjects) {
      NodeId x = f.sent[xi].node;
      NodeId tw = st.mk_truth_quote(x);
      NodeId pos_link = st.mk_bin(BinOp::iff, tw, x);
      if (st.node(pos_link).depth <= p.depth) add(pos_link, Family::trf);
      NodeId neg_link = st.mk_bin(BinOp::iff, st.mk_neg(tw), x);
      if (st.node(neg_link).depth <= p.depth) add(neg_link, Family::trf);
    }
  }

  void add_chain(const std::string& label, const std::vector<NodeId>& members) {
    std::vector<NodeId> links;
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      links.push_back(st.mk_bin(BinOp::iff, members[i], members[i + 1]));
    for (NodeId n : members)
      if (st.node(n).depth > p.depth) return;
    for (NodeId n : links)
      if (st.node(n).depth > p.depth) return;
    Chain c;
    c.label = label;
    for (NodeId n : members) c.members.push_back(add(n, Family::eqf));
    for (NodeId n : links) c.links.push_back(add(n, Family::eqf));
    f.chains.push_back(std::move(c));
  }

  NodeId tw(NodeId x) { return st.mk_truth_quote(x); }
  NodeId ntw(NodeId x) { return st.mk_neg(st.mk_truth_quote(x)); }

  void gen_eqf() {
    if (p.depth < 2) return;
    std::vector<std::int32_t> eqbase = f.obj_members;
    eqbase.insert(eqbase.end(), f.dsg_members.begin(), f.dsg_members.end());
    int counter = 0;
    for (std::int32_t ai : eqbase) {
      NodeId a = f.sent[ai].node;
      std::string sa = "#" + std::to_string(counter++);
      if (p.reflect >= 2) add_chain("wrap-twice" + sa, {tw(tw(a)), tw(a), a});
      add_chain("wrap-neg" + sa, {ntw(a), tw(st.mk_neg(a)), st.mk_neg(a)});
    }
    int pair_counter = 0;
    for (std::int32_t ai : eqbase) {
      for (std::int32_t bi : eqbase) {
        NodeId a = f.sent[ai].node;
        NodeId b = f.sent[bi].node;
        std::string sp = "#" + std::to_string(pair_counter++);
        add_chain("wrap-or" + sp, {st.mk_bin(BinOp::or_op, tw(a), tw(b)),
                              tw(st.mk_bin(BinOp::or_op, a, b)), st.mk_bin(BinOp::or_op, a, b)});
        add_chain("wrap-and" + sp, {st.mk_bin(BinOp::and_op, tw(a), tw(b)),
                              tw(st.mk_bin(BinOp::and_op, a, b)), st.mk_bin(BinOp::and_op, a, b)});
        add_chain("wrap-impl" + sp, {st.mk_bin(BinOp::impl, tw(a), tw(b)),
                              tw(st.mk_bin(BinOp::impl, a, b)), st.mk_bin(BinOp::impl, a, b)});
        add_chain("wrap-iff" + sp, {st.mk_bin(BinOp::iff, tw(a), tw(b)),
                              tw(st.mk_bin(BinOp::iff, a, b)), st.mk_bin(BinOp::iff, a, b)});
        add_chain("wrap-neg-or" + sp,
                  {ntw(st.mk_bin(BinOp::or_op, a, b)), st.mk_neg(st.mk_bin(BinOp::or_op, a, b)),
                   st.mk_bin(BinOp::and_op, st.mk_neg(a), st.mk_neg(b)),
                   st.mk_bin(BinOp::and_op, tw(st.mk_neg(a)), tw(st.mk_neg(b))),
                   st.mk_bin(BinOp::and_op, ntw(a), ntw(b))});
        add_chain("wrap-neg-and" + sp,
                  {ntw(st.mk_bin(BinOp::and_op, a, b)), st.mk_neg(st.mk_bin(BinOp::and_op, a, b)),
                   st.mk_bin(BinOp::or_op, st.mk_neg(a), st.mk_neg(b)),
                   st.mk_bin(BinOp::or_op, tw(st.mk_neg(a)), tw(st.mk_neg(b))),
                   st.mk_bin(BinOp::or_op, ntw(a), ntw(b))});
      }
    }
    // unary predicate instances of the quantified chains, both polarities
    SymId x = st.sym("x");
    auto quant_chains = [&](const std::string& tag, NodeId qx) {
      NodeId nqx = flip(qx);
      NodeId all_q = st.mk_quant(Quant::forall, x, qx);
      NodeId some_q = st.mk_quant(Quant::exists, x, qx);
      NodeId all_nq = st.mk_quant(Quant::forall, x, nqx);
      NodeId some_nq = st.mk_quant(Quant::exists, x, nqx);
      NodeId all_tq = st.mk_quant(Quant::forall, x, tw(qx));
      NodeId some_tq = st.mk_quant(Quant::exists, x, tw(qx));
      NodeId all_ntq = st.mk_quant(Quant::forall, x, ntw(qx));
      NodeId some_ntq = st.mk_quant(Quant::exists, x, ntw(qx));
      add_chain("wrap-forall" + tag, {all_tq, tw(all_q), all_q, st.mk_neg(some_nq),
                             tw(st.mk_neg(some_nq)), st.mk_neg(some_ntq)});
      add_chain("wrap-exists" + tag, {some_tq, tw(some_q), some_q, st.mk_neg(all_nq),
                             tw(st.mk_neg(all_nq)), st.mk_neg(all_ntq)});
      add_chain("wrap-neg-forall" + tag, {ntw(all_q), tw(st.mk_neg(all_q)), st.mk_neg(all_q), some_nq,
                              tw(some_nq)});
      add_chain("wrap-neg-exists" + tag, {ntw(some_q), tw(st.mk_neg(some_q)), st.mk_neg(some_q), all_nq,
                              tw(all_nq)});
    };
    for (std::size_t pi = 0; pi < m.preds.size(); ++pi) {
      if (m.preds[pi].arity != 1) continue;
      for (bool negated : {false, true}) {
        std::vector<SymId> vars;
        NodeId body = pred_template(static_cast<int>(pi), negated, vars);
        quant_chains("[" + std::string(negated ? "~" : "") + m.preds[pi].name + "]", body);
      }
    }
    for (bool inner_neg : {false, true}) {
      NodeId body = st.mk_truth_term(st.term_var(x));
      if (inner_neg) body = st.mk_neg(body);
      quant_chains(inner_neg ? "[~T]" : "[T]", body);
    }
  }

  void gen_qtbl() {
    for (std::size_t pi = 0; pi < m.preds.size(); ++pi) {
      if (m.preds[pi].arity < 2) continue;
      std::vector<SymId> vars;
      NodeId body = pred_template(static_cast<int>(pi), false, vars);
      NodeId nbody = st.mk_neg(body);
      each_prefix(m.preds[pi].arity, [&](const std::vector<Quant>& prefix) {
        NodeId m3 = quantify(prefix, vars, body);
        NodeId m2 = tw(m3);
        NodeId m1 = quantify(prefix, vars, tw(body));
        QtblEntry e1;
        e1.pred = m.preds[pi].name;
        e1.table = 1;
        e1.prefix = prefix_label(prefix);
        e1.m1 = add(m1, Family::tpq);
        e1.m2 = add(m2, Family::quote_tower);
        e1.m3 = add(m3, Family::qobj);
        e1.l12 = add(st.mk_bin(BinOp::iff, m1, m2), Family::qtbl);
        e1.l23 = add(st.mk_bin(BinOp::iff, m2, m3), Family::qtbl);
        f.qtbl.push_back(e1);
        NodeId n3 = quantify(prefix, vars, nbody);
        NodeId n2 = st.mk_neg(m2);
        NodeId n1 = quantify(prefix, vars, ntw(body));
        QtblEntry e2;
        e2.pred = m.preds[pi].name;
        e2.table = 2;
        e2.prefix = prefix_label(prefix);
        e2.m1 = add(n1, Family::tpq);
        e2.m2 = add(n2, Family::quote_tower);
        e2.m3 = add(n3, Family::qobj);
        e2.l12 = add(st.mk_bin(BinOp::iff, n1, n2), Family::qtbl);
        e2.l23 = add(st.mk_bin(BinOp::iff, n2, n3), Family::qtbl);
        f.qtbl.push_back(e2);
      });
    }
  }

  void subformula_closure() {
    for (std::size_t i = 0; i < f.sent.size(); ++i) {
      const Node& nd = st.node(f.sent[i].node);
      switch (nd.kind) {
        case NodeKind::neg:
          add(nd.a, Family::subform);
          break;
        case NodeKind::bin:
          add(nd.a, Family::subform);
          add(nd.b, Family::subform);
          break;
        case NodeKind::truth:
          if (static_cast<TruthArg>(nd.op) == TruthArg::term) {
            const Term& tm = st.term(nd.a);
            if (tm.kind == TermKind::numeral) {
              NodeId q = st.decode(tm.value);
              if (q != no_node) add(q, Family::subform);
            }
          }
          break;
        default:
          break;  // quantified bodies are open formulas, not sentences
      }
    }
  }

  void negation_pass() {
    std::size_t snapshot = f.sent.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      NodeId n = st.mk_neg(f.sent[i].node);
      if (f.index_of.find(n) == f.index_of.end()) add(n, Family::negpass);
    }
  }
};

void finalize_fragment(Fragment& f) {
  Store& st = *f.store;
  // negation, quote and wrap links
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    const Node& nd = st.node(f.sent[i].node);
    if (nd.kind == NodeKind::neg) {
      std::int32_t ci = f.idx(nd.a);
      if (ci >= 0) {
        f.sent[i].pos_idx = ci;
        f.sent[ci].neg_idx = static_cast<std::int32_t>(i);
      }
    } else if (nd.kind == NodeKind::truth &&
               static_cast<TruthArg>(nd.op) == TruthArg::term) {
      const Term& tm = st.term(nd.a);
      if (tm.kind == TermKind::numeral) {
        NodeId q = st.decode(tm.value);
        std::int32_t qi = q == no_node ? -1 : f.idx(q);
        if (qi >= 0) {
          f.sent[i].quote_idx = qi;
          f.sent[qi].twrap_idx = static_cast<std::int32_t>(i);
        }
      }
    }
  }
  // base seed: true pure sentences
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    if (f.sent[i].pure) f.sent[i].in_z = eval_object(st, f.model, f.sent[i].node);
  }
  // premise-compiled closure rules
  f.rules.clear();
  for (std::size_t i = 0; i < f.sent.size(); ++i) {
    const Node& nd = st.node(f.sent[i].node);
    CompiledRule r;
    r.compound = static_cast<std::int32_t>(i);
    if (nd.kind == NodeKind::bin) {
      std::int32_t a = f.idx(nd.a), b = f.idx(nd.b);
      if (a < 0 || b < 0) continue;  // constituents outside the universe: inert
      r.kind = static_cast<std::uint8_t>(1 + nd.op);
      r.a = a;
      r.na = f.sent[a].neg_idx;
      r.b = b;
      r.nb = f.sent[b].neg_idx;
      f.rules.push_back(r);
    } else if (nd.kind == NodeKind::neg) {
      const Node& in = st.node(nd.a);
      if (in.kind == NodeKind::neg) {
        std::int32_t a = f.idx(in.a);
        if (a < 0) continue;
        r.kind = 0;
        r.a = a;
        r.na = r.b = r.nb = -1;
        f.rules.push_back(r);
      } else if (in.kind == NodeKind::bin) {
        std::int32_t a = f.idx(in.a), b = f.idx(in.b);
        if (a < 0 || b < 0) continue;
        r.kind = static_cast<std::uint8_t>(5 + in.op);
        r.a = a;
        r.na = f.sent[a].neg_idx;
        r.b = b;
        r.nb = f.sent[b].neg_idx;
        f.rules.push_back(r);
      }
    }
  }
  // CSR watch lists, premise set per rule kind
  std::vector<std::int32_t> degree(f.sent.size(), 0);
  auto premises_of = [](const CompiledRule& r, std::int32_t out[4]) {
    int n = 0;
    auto push = [&](std::int32_t x) {
      if (x < 0) return;
      for (int i = 0; i < n; ++i)
        if (out[i] == x) return;
      out[n++] = x;
    };
    switch (r.kind) {
      case 0: push(r.a); break;
      case 2: push(r.a); push(r.b); break;
      case 5: push(r.na); push(r.nb); break;
      case 7: push(r.a); push(r.nb); break;
      default: push(r.a); push(r.na); push(r.b); push(r.nb); break;
    }
    return n;
  };
  std::int32_t prem[4];
  for (const CompiledRule& r : f.rules) {
    int n = premises_of(r, prem);
    for (int k = 0; k < n; ++k) ++degree[prem[k]];
  }
  f.watch_off.assign(f.sent.size() + 1, 0);
  for (std::size_t i = 0; i < f.sent.size(); ++i)
    f.watch_off[i + 1] = f.watch_off[i] + degree[i];
  f.watch_dat.assign(static_cast<std::size_t>(f.watch_off.back()), 0);
  std::vector<std::int64_t> cursor(f.watch_off.begin(), f.watch_off.end() - 1);
  for (std::size_t ri = 0; ri < f.rules.size(); ++ri) {
    int n = premises_of(f.rules[ri], prem);
    for (int k = 0; k < n; ++k)
      f.watch_dat[static_cast<std::size_t>(cursor[prem[k]]++)] = static_cast<std::int32_t>(ri);
  }
}

}  // namespace

Fragment build_fragment(std::shared_ptr<Store> store, FiniteModel model, FragmentParams params) {
  if (params.depth < 1 || params.depth > 6) throw InputError("depth must be in [1,6]");
  if (params.reflect < 1 || params.reflect > 4) throw InputError("reflection height must be in [1,4]");
  if (params.cap < 16) throw InputError("cap too small");
  Fragment f;
  f.store = store;
  f.model = std::move(model);
  f.params = params;
  Builder b{*store, f, f.params, f.model, {}, {}};
  b.gen_obj();
  b.gen_dsg();
  b.gen_qobj();
  b.gen_tq();
  b.gen_ttq();
  b.gen_tpq();
  b.gen_quote_base();
  b.gen_tower();
  b.gen_pairs();
  b.gen_negchain();
  b.gen_trf();
  b.gen_eqf();
  b.gen_qtbl();
  b.subformula_closure();
  b.negation_pass();
  finalize_fragment(f);
  log::info("fragment: " + std::to_string(f.size()) + " sentences, " +
            std::to_string(f.rules.size()) + " compiled rules");
  return f;
}

Fragment fragment_from_sentences(std::shared_ptr<Store> store, FiniteModel model,
                                 FragmentParams params, const std::vector<NodeId>& sentences) {
  Fragment f;
  f.store = store;
  f.model = std::move(model);
  f.params = params;
  Builder b{*store, f, f.params, f.model, {}, {}};
  for (NodeId n : sentences) {
    const Node& nd = store->node(n);
    Family fam = Family::subform;
    if (nd.kind == NodeKind::pred) fam = Family::obj;
    std::int32_t i = b.add(n, fam);
    if (fam == Family::obj) f.obj_members.push_back(i);
  }
  finalize_fragment(f);
  return f;
}

}  // namespace gtt
