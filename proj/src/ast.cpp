#include "gtt/ast.hpp"

#include <algorithm>
#include <cassert>

namespace gtt {

Store::Store() {
  varsets_.push_back({});  // id 0 = empty set
  varset_index_[""] = 0;
}

SymId Store::sym(const std::string& name) {
  auto it = sym_index_.find(name);
  if (it != sym_index_.end()) return it->second;
  SymId id = static_cast<SymId>(symbols_.size());
  symbols_.push_back(name);
  sym_index_[name] = id;
  return id;
}

TermId Store::term_elem(SymId name) {
  std::string key = "e:" + std::to_string(name);
  auto it = term_index_.find(key);
  if (it != term_index_.end()) return it->second;
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(Term{TermKind::elem, name, Nat(0)});
  term_index_[key] = id;
  return id;
}

TermId Store::term_var(SymId name) {
  std::string key = "v:" + std::to_string(name);
  auto it = term_index_.find(key);
  if (it != term_index_.end()) return it->second;
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(Term{TermKind::var, name, Nat(0)});
  term_index_[key] = id;
  return id;
}

TermId Store::term_numeral(const Nat& value) {
  std::string key = "n:" + value.str();
  auto it = term_index_.find(key);
  if (it != term_index_.end()) return it->second;
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(Term{TermKind::numeral, -1, value});
  term_index_[key] = id;
  return id;
}

std::int32_t Store::intern_varset(std::vector<SymId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::string key;
  for (SymId s : v) {
    key += std::to_string(s);
    key += ',';
  }
  auto it = varset_index_.find(key);
  if (it != varset_index_.end()) return it->second;
  std::int32_t id = static_cast<std::int32_t>(varsets_.size());
  varsets_.push_back(std::move(v));
  varset_index_[key] = id;
  return id;
}

std::int32_t Store::merge_varsets(std::int32_t x, std::int32_t y) {
  if (x == y || y == 0) return x;
  if (x == 0) return y;
  std::vector<SymId> v = varsets_[x];
  const auto& w = varsets_[y];
  v.insert(v.end(), w.begin(), w.end());
  return intern_varset(std::move(v));
}

std::int32_t Store::intern_arglist(const std::vector<TermId>& v) {
  std::string key;
  for (TermId t : v) {
    key += std::to_string(t);
    key += ',';
  }
  auto it = arglist_index_.find(key);
  if (it != arglist_index_.end()) return it->second;
  std::int32_t id = static_cast<std::int32_t>(arglists_.size());
  arglists_.push_back(v);
  arglist_index_[key] = id;
  return id;
}

static std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

NodeId Store::intern(Node n) {
  std::uint64_t h = mix((static_cast<std::uint64_t>(static_cast<std::uint8_t>(n.kind)) << 8) |
                        n.op);
  h = mix(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.a)));
  h = mix(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.b)) << 17));
  auto& bucket = node_index_[h];
  for (NodeId id : bucket) {
    const Node& m = nodes_[id];
    if (m.kind == n.kind && m.op == n.op && m.a == n.a && m.b == n.b) return id;
  }
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(n);
  codes_.emplace_back(0);
  bucket.push_back(id);
  return id;
}

NodeId Store::mk_pred(SymId pred, const std::vector<TermId>& args) {
  Node n;
  n.kind = NodeKind::pred;
  n.a = pred;
  n.b = intern_arglist(args);
  std::vector<SymId> vars;
  for (TermId t : args)
    if (terms_[t].kind == TermKind::var) vars.push_back(terms_[t].sym);
  n.varset = vars.empty() ? 0 : intern_varset(std::move(vars));
  return intern(n);
}

NodeId Store::mk_truth_term(TermId arg) {
  Node n;
  n.kind = NodeKind::truth;
  n.op = static_cast<std::uint8_t>(TruthArg::term);
  n.a = arg;
  n.pure = false;
  if (terms_[arg].kind == TermKind::var) n.varset = intern_varset({terms_[arg].sym});
  return intern(n);
}

NodeId Store::mk_truth_hole() {
  Node n;
  n.kind = NodeKind::truth;
  n.op = static_cast<std::uint8_t>(TruthArg::hole);
  n.pure = false;
  n.has_hole = true;
  return intern(n);
}

NodeId Store::mk_truth_quote(NodeId body) {
  const Node& bn = nodes_[body];
  if (bn.varset == 0 && !bn.has_hole) {
    // Closed quote: the sentence T(@A) IS T(#code A).
    return mk_truth_term(term_numeral(code_of(body)));
  }
  Node n;
  n.kind = NodeKind::truth;
  n.op = static_cast<std::uint8_t>(TruthArg::quote);
  n.a = body;
  n.pure = false;
  n.varset = bn.varset;
  n.has_hole = bn.has_hole;
  return intern(n);
}

NodeId Store::mk_neg(NodeId a) {
  const Node& an = nodes_[a];
  Node n;
  n.kind = NodeKind::neg;
  n.a = a;
  n.varset = an.varset;
  n.depth = static_cast<std::int16_t>(an.depth + 1);
  n.pure = an.pure;
  n.has_hole = an.has_hole;
  return intern(n);
}

NodeId Store::mk_bin(BinOp op, NodeId a, NodeId b) {
  const Node& an = nodes_[a];
  const Node& bn = nodes_[b];
  Node n;
  n.kind = NodeKind::bin;
  n.op = static_cast<std::uint8_t>(op);
  n.a = a;
  n.b = b;
  n.varset = merge_varsets(an.varset, bn.varset);
  n.depth = static_cast<std::int16_t>(std::max(an.depth, bn.depth) + 1);
  n.pure = an.pure && bn.pure;
  n.has_hole = an.has_hole || bn.has_hole;
  return intern(n);
}

NodeId Store::mk_quant(Quant q, SymId var, NodeId body) {
  const Node& bn = nodes_[body];
  Node n;
  n.kind = NodeKind::quant;
  n.op = static_cast<std::uint8_t>(q);
  n.a = var;
  n.b = body;
  if (bn.varset != 0) {
    std::vector<SymId> vars;
    for (SymId s : varsets_[bn.varset])
      if (s != var) vars.push_back(s);
    n.varset = vars.empty() ? 0 : intern_varset(std::move(vars));
  }
  n.depth = 0;  // quantified sentences sit at the atom layer of the depth gate
  n.pure = bn.pure;
  n.has_hole = bn.has_hole;
  return intern(n);
}

NodeId Store::subst(NodeId n, SymId var, TermId value) {
  assert(terms_[value].kind != TermKind::var);
  std::unordered_map<NodeId, NodeId> memo;
  return subst_rec(n, var, value, memo);
}

NodeId Store::subst_rec(NodeId n, SymId var, TermId value,
                        std::unordered_map<NodeId, NodeId>& memo) {
  const Node nd = nodes_[n];
  bool free = false;
  if (nd.varset != 0)
    for (SymId s : varsets_[nd.varset]) free |= (s == var);
  if (!free) return n;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  NodeId out = n;
  switch (nd.kind) {
    case NodeKind::pred: {
      std::vector<TermId> args = arglists_[nd.b];
      for (TermId& t : args)
        if (terms_[t].kind == TermKind::var && terms_[t].sym == var) t = value;
      out = mk_pred(nd.a, args);
      break;
    }
    case NodeKind::truth: {
      if (static_cast<TruthArg>(nd.op) == TruthArg::term) {
        out = mk_truth_term(value);
      } else if (static_cast<TruthArg>(nd.op) == TruthArg::quote) {
        out = mk_truth_quote(subst_rec(nd.a, var, value, memo));
      }
      break;
    }
    case NodeKind::neg:
      out = mk_neg(subst_rec(nd.a, var, value, memo));
      break;
    case NodeKind::bin:
      out = mk_bin(static_cast<BinOp>(nd.op), subst_rec(nd.a, var, value, memo),
                   subst_rec(nd.b, var, value, memo));
      break;
    case NodeKind::quant:
      if (nd.a == var) {
        out = n;  // shadowed
      } else {
        out = mk_quant(static_cast<Quant>(nd.op), nd.a, subst_rec(nd.b, var, value, memo));
      }
      break;
  }
  memo[n] = out;
  return out;
}

}  // namespace gtt
