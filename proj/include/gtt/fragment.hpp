#pragma once
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtt/ast.hpp"
#include "gtt/model.hpp"

namespace gtt {

struct FragmentParams {
  int depth = 2;    // connective-depth gate for generated compounds
  int reflect = 1;  // quote tower height
  bool with_liar = false;
  bool with_truthteller = false;
  std::int64_t cap = 4000000;
  std::uint64_t seed = 0;  // recorded in reports; drives sampling commands
};

enum class Family : std::uint8_t {
  obj,          // object atoms and their negations
  dsg,          // designated self-referential sentences
  qobj,         // quantified object sentences, both polarities
  tq,           // quantified bare-truth sentences
  ttq,          // quantified truth-about-truth sentences
  tpq,          // quantified truth attributions to object predicates
  quote_base,   // object-level compounds generated as quote subjects
  quote_tower,  // T(@X) layers over the quote base
  pairs,        // binary-connective grid over atoms and their truth attributions
  negchain,     // iterated negations
  trf,          // truth-reflection biconditionals T(@X) <-> X
  eqf,          // equivalence-chain members and links
  qtbl,         // quantifier-table chain links
  subform,      // added by sentence-subformula closure
  negpass,      // added by the final negation pass
};
const char* family_name(Family f);

struct SentenceInfo {
  NodeId node = no_node;
  Family family = Family::obj;
  std::int32_t neg_idx = -1;    // index of ~A when present
  std::int32_t pos_idx = -1;    // index of A when this sentence is ~A
  std::int32_t quote_idx = -1;  // index of the quoted sentence when this is T(#code)
  std::int32_t twrap_idx = -1;  // index of T(@this) when present
  bool pure = false;
  bool in_z = false;  // true pure sentence; member of the base seed set
};

// Equivalence chain: members are pairwise equivalent, links are the
// consecutive <-> sentences.
struct Chain {
  std::string label;
  std::vector<std::int32_t> members;
  std::vector<std::int32_t> links;
};

// One row of the two-table quantifier example for one prefix of one predicate.
struct QtblEntry {
  std::string pred;
  int table = 1;       // 1: plain truth attributions, 2: negated attributions
  std::string prefix;  // 'A' = forall, 'E' = exists, one char per position
  std::int32_t m1 = -1, m2 = -1, m3 = -1;
  std::int32_t l12 = -1, l23 = -1;
};

// Quantified truth-attribution pattern and its matching object sentence.
struct TpqInfo {
  std::int32_t idx = -1;
  int pred = -1;
  bool negated_pred = false;   // attribution quotes ~P instead of P
  bool negated_truth = false;  // prefixed pattern uses ~T instead of T
  std::vector<Quant> prefix;
  NodeId object_node = no_node;  // q-prefixed object sentence of matching polarity
  bool object_true = false;
};

// Premise-compiled closure rule. kind: 0 double negation, 1..4 the four
// connectives, 5..8 their negated forms. a/b are the immediate constituents,
// na/nb the indexes of their negations (-1 when absent from the universe).
struct CompiledRule {
  std::int32_t compound;
  std::uint8_t kind;
  std::int32_t a, na, b, nb;
};

struct Fragment {
  std::shared_ptr<Store> store;
  FiniteModel model;
  FragmentParams params;

  std::vector<SentenceInfo> sent;  // generation order
  std::unordered_map<NodeId, std::int32_t> index_of;

  // Seed index lists. z1_fixed/z2_fixed enter L0(U) for every nonempty U;
  // z3/z4 hold the quantified attributions whose object sentence is true;
  // z34_neg holds negations of attributions whose object sentence is false.
  std::vector<std::int32_t> z1_fixed, z2_fixed, z3, z4, z34_neg;

  std::vector<std::int32_t> obj_members, dsg_members, tq_members, ttq_members;
  std::vector<TpqInfo> tpq;
  std::vector<Chain> chains;
  std::vector<QtblEntry> qtbl;

  std::vector<CompiledRule> rules;
  // CSR watch lists: rules to re-test when a sentence enters the closure.
  std::vector<std::int64_t> watch_off;  // size()+1 offsets into watch_dat
  std::vector<std::int32_t> watch_dat;  // rule ids

  std::int32_t idx(NodeId n) const {
    auto it = index_of.find(n);
    return it == index_of.end() ? -1 : it->second;
  }
  std::size_t size() const { return sent.size(); }
  bool decided(std::int32_t i, const std::vector<std::uint8_t>& in_l) const {
    return in_l[i] || (sent[i].neg_idx >= 0 && in_l[sent[i].neg_idx]);
  }
};

Fragment build_fragment(std::shared_ptr<Store> store, FiniteModel model, FragmentParams params);

// Finalizes an explicit sentence list (indexes, negation and quote links,
// seed sets, compiled rules) without generating any family. Lets tests build
// exact miniature universes.
Fragment fragment_from_sentences(std::shared_ptr<Store> store, FiniteModel model,
                                 FragmentParams params, const std::vector<NodeId>& sentences);

}  // namespace gtt
