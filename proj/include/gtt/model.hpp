#pragma once
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtt/ast.hpp"

namespace gtt {

struct PredDef {
  std::string name;
  int arity = 1;
  std::vector<std::vector<int>> domains;  // element indexes per argument slot
  std::set<std::vector<int>> extension;   // tuples of element indexes
};

// A finite classical interpretation of the object vocabulary.
struct FiniteModel {
  std::string name;
  std::string family;  // nonempty for synthesized families, e.g. "x_eq_2y"
  std::vector<std::string> elements;
  std::vector<PredDef> preds;
  std::unordered_map<std::string, int> elem_index;

  static FiniteModel load_file(const std::string& path, std::optional<int> surrogate_bound);
  static FiniteModel from_json_text(const std::string& text, std::optional<int> surrogate_bound);

  bool holds(int pred, const std::vector<int>& tuple) const {
    return preds[pred].extension.count(tuple) > 0;
  }
  int pred_index(const std::string& pname) const {
    for (std::size_t i = 0; i < preds.size(); ++i)
      if (preds[i].name == pname) return static_cast<int>(i);
    return -1;
  }
};

// Classical evaluation of a pure object sentence. Quantified variables range
// over the intersection of the per-argument domains of their occurrences
// (all elements when unconstrained). Throws InputError on vocabulary
// mismatches, on constants outside an argument domain, and on any sentence
// that mentions the truth predicate.
bool eval_object(const Store& st, const FiniteModel& m, NodeId n);

// The quantified-variable domain rule, exposed for instance enumeration.
std::vector<int> var_domain(const Store& st, const FiniteModel& m, NodeId body, SymId var);

}  // namespace gtt
