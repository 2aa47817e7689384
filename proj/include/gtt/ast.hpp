#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtt/nat.hpp"

namespace gtt {

using NodeId = std::int32_t;
using TermId = std::int32_t;
using SymId = std::int32_t;
constexpr NodeId no_node = -1;

enum class TermKind : std::uint8_t { elem, numeral, var };
enum class NodeKind : std::uint8_t { pred, truth, neg, bin, quant };
enum class BinOp : std::uint8_t { or_op, and_op, impl, iff };
enum class Quant : std::uint8_t { forall, exists };

// Argument slot of the truth predicate.
enum class TruthArg : std::uint8_t { term, quote, hole };

struct Term {
  TermKind kind;
  SymId sym = -1;  // elem / var: symbol id
  Nat value;       // numeral
};

struct Node {
  NodeKind kind;
  std::uint8_t op = 0;  // bin: BinOp, quant: Quant, truth: TruthArg
  std::int32_t a = -1;  // pred: sym, truth: term/quote, neg: child, bin: lhs, quant: var sym
  std::int32_t b = -1;  // pred: arglist, bin: rhs, quant: body
  std::int32_t varset = 0;
  std::int16_t depth = 0;
  bool pure = true;      // no truth predicate anywhere in the tree
  bool has_hole = false; // contains a designated-registration placeholder
};

struct Designated {
  NodeId node;
  Nat code;
  std::string kind;  // "liar" | "truthteller" | caller-chosen
};

// Hash-consed sentence store. Structurally equal trees share one id, so
// node identity is sentence identity. Codes are cached per node; designated
// (self-referential) sentences carry odd codes assigned at registration,
// everything else gets an even structural code derived from its serialization.
class Store {
 public:
  Store();

  SymId sym(const std::string& name);
  const std::string& sym_name(SymId s) const { return symbols_[s]; }

  TermId term_elem(SymId name);
  TermId term_var(SymId name);
  TermId term_numeral(const Nat& value);
  const Term& term(TermId t) const { return terms_[t]; }

  NodeId mk_pred(SymId pred, const std::vector<TermId>& args);
  NodeId mk_truth_term(TermId arg);                 // T(x) / T(#n)
  NodeId mk_truth_hole();                           // T(#_), registration template only
  NodeId mk_truth_quote(NodeId body);               // T(@A); collapses to T(#code A) when A is closed
  NodeId mk_neg(NodeId a);
  NodeId mk_bin(BinOp op, NodeId a, NodeId b);
  NodeId mk_quant(Quant q, SymId var, NodeId body);

  const Node& node(NodeId n) const { return nodes_[n]; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<TermId>& args(std::int32_t arglist) const { return arglists_[arglist]; }
  const std::vector<SymId>& varset(std::int32_t vs) const { return varsets_[vs]; }
  bool closed(NodeId n) const { return nodes_[n].varset == 0; }

  // Substitutes a closed term for every free occurrence of var, collapsing
  // quotes that become closed. Substituends must be closed, so no capture.
  NodeId subst(NodeId n, SymId var, TermId value);

  // Coding. code_of serializes closed sentences; registered designated codes
  // take precedence over the structural route.
  Nat code_of(NodeId n);
  std::vector<std::uint8_t> serialize(NodeId n) const;
  NodeId deserialize(const std::vector<std::uint8_t>& bytes);
  NodeId decode(const Nat& code) const;  // no_node when the code names nothing known

  // Replaces every hole in the template with the next odd code and interns
  // the result, making the sentence refer to its own code.
  const Designated& register_designated(NodeId tmpl, const std::string& kind);
  const std::vector<Designated>& designated() const { return designated_; }
  bool is_designated_code(const Nat& code) const;

 private:
  NodeId intern(Node n);
  std::int32_t intern_varset(std::vector<SymId> v);
  std::int32_t intern_arglist(const std::vector<TermId>& v);
  std::int32_t merge_varsets(std::int32_t x, std::int32_t y);
  NodeId subst_rec(NodeId n, SymId var, TermId value,
                   std::unordered_map<NodeId, NodeId>& memo);

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymId> sym_index_;
  std::vector<Term> terms_;
  std::unordered_map<std::string, TermId> term_index_;
  std::vector<std::vector<TermId>> arglists_;
  std::unordered_map<std::string, std::int32_t> arglist_index_;
  std::vector<std::vector<SymId>> varsets_;
  std::unordered_map<std::string, std::int32_t> varset_index_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::vector<NodeId>> node_index_;
  std::vector<Nat> codes_;  // 0 = not computed yet
  std::map<Nat, NodeId> code_index_;
  std::vector<Designated> designated_;
  Nat next_odd_ = 1;
};

}  // namespace gtt
