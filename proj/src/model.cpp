#include "gtt/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtt/errors.hpp"

namespace gtt {

using nlohmann::json;

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

FiniteModel synthesize_x_eq_2y(int bound) {
  if (bound < 1) throw InputError("surrogate bound must be at least 1");
  FiniteModel m;
  m.name = "x_eq_2y[" + std::to_string(bound) + "]";
  m.family = "x_eq_2y";
  for (int i = 0; i <= bound; ++i) m.elements.push_back("n" + std::to_string(i));
  PredDef r;
  r.name = "R";
  r.arity = 2;
  std::vector<int> all(m.elements.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  r.domains = {all, all};
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y)
      if (x == 2 * y) r.extension.insert({x, y});
  m.preds.push_back(std::move(r));
  for (std::size_t i = 0; i < m.elements.size(); ++i)
    m.elem_index[m.elements[i]] = static_cast<int>(i);
  return m;
}

}  // namespace

FiniteModel FiniteModel::from_json_text(const std::string& text,
                                        std::optional<int> surrogate_bound) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("model JSON must be an object");

  if (j.contains("family")) {
    std::string fam = j["family"].get<std::string>();
    if (fam != "x_eq_2y") throw InputError("unknown surrogate family: " + fam);
    if (!surrogate_bound) throw InputError("model declares a surrogate family; pass --surrogate-bound");
    FiniteModel m = synthesize_x_eq_2y(*surrogate_bound);
    if (j.contains("name")) m.name = j["name"].get<std::string>() + "[" + std::to_string(*surrogate_bound) + "]";
    return m;
  }
  if (surrogate_bound) throw InputError("--surrogate-bound given but the model declares no surrogate family");

  FiniteModel m;
  m.name = j.value("name", "model");
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
    throw InputError("model needs a nonempty 'elements' array");
  for (const auto& e : j["elements"]) {
    std::string name = e.get<std::string>();
    if (!valid_ident(name)) throw InputError("bad element name: " + name);
    if (m.elem_index.count(name)) throw InputError("duplicate element: " + name);
    m.elem_index[name] = static_cast<int>(m.elements.size());
    m.elements.push_back(name);
  }
  if (!j.contains("predicates") || !j["predicates"].is_array() || j["predicates"].empty())
    throw InputError("model needs a nonempty 'predicates' array");
  for (const auto& p : j["predicates"]) {
    PredDef d;
    d.name = p.at("name").get<std::string>();
    if (!valid_ident(d.name)) throw InputError("bad predicate name: " + d.name);
    if (d.name == "T" || d.name == "forall" || d.name == "exists")
      throw InputError("predicate name is reserved: " + d.name);
    if (m.pred_index(d.name) != -1) throw InputError("duplicate predicate: " + d.name);
    d.arity = p.at("arity").get<int>();
    if (d.arity < 1 || d.arity > 4) throw InputError("predicate arity out of range [1,4]: " + d.name);
    std::vector<int> all(m.elements.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (p.contains("domains")) {
      if (!p["domains"].is_array() || static_cast<int>(p["domains"].size()) != d.arity)
        throw InputError("domains must list one element set per argument: " + d.name);
      for (const auto& dom : p["domains"]) {
        std::vector<int> slot;
        for (const auto& e : dom) {
          auto it = m.elem_index.find(e.get<std::string>());
          if (it == m.elem_index.end()) throw InputError("domain element not in model: " + e.get<std::string>());
          slot.push_back(it->second);
        }
        std::sort(slot.begin(), slot.end());
        slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
        if (slot.empty()) throw InputError("empty argument domain on predicate " + d.name);
        d.domains.push_back(std::move(slot));
      }
    } else {
      d.domains.assign(d.arity, all);
    }
    for (const auto& tup : p.value("extension", json::array())) {
      if (!tup.is_array() || static_cast<int>(tup.size()) != d.arity)
        throw InputError("extension tuple arity mismatch on predicate " + d.name);
      std::vector<int> t;
      for (int i = 0; i < d.arity; ++i) {
        auto it = m.elem_index.find(tup[i].get<std::string>());
        if (it == m.elem_index.end())
          throw InputError("extension element not in model: " + tup[i].get<std::string>());
        if (!std::binary_search(d.domains[i].begin(), d.domains[i].end(), it->second))
          throw InputError("extension tuple outside argument domain on predicate " + d.name);
        t.push_back(it->second);
      }
      d.extension.insert(std::move(t));
    }
    m.preds.push_back(std::move(d));
  }
  return m;
}

FiniteModel FiniteModel::load_file(const std::string& path, std::optional<int> surrogate_bound) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open model file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_json_text(ss.str(), surrogate_bound);
}

namespace {

void collect_domain(const Store& st, const FiniteModel& m, NodeId n, SymId var,
                    bool& constrained, std::vector<int>& acc) {
  const Node& nd = st.node(n);
  bool free = false;
  if (nd.varset != 0)
    for (SymId s : st.varset(nd.varset)) free |= (s == var);
  if (!free) return;
  switch (nd.kind) {
    case NodeKind::pred: {
      int p = m.pred_index(st.sym_name(nd.a));
      if (p == -1) throw InputError("unknown predicate: " + st.sym_name(nd.a));
      const auto& args = st.args(nd.b);
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Term& tm = st.term(args[i]);
        if (tm.kind == TermKind::var && tm.sym == var) {
          const auto& dom = m.preds[p].domains[i];
          if (!constrained) {
            acc = dom;
            constrained = true;
          } else {
            std::vector<int> merged;
            std::set_intersection(acc.begin(), acc.end(), dom.begin(), dom.end(),
                                  std::back_inserter(merged));
            acc = std::move(merged);
          }
        }
      }
      break;
    }
    case NodeKind::truth:
      if (static_cast<TruthArg>(nd.op) == TruthArg::quote)
        collect_domain(st, m, nd.a, var, constrained, acc);
      break;  // a bare T(x) occurrence puts no object-domain constraint on x
    case NodeKind::neg:
      collect_domain(st, m, nd.a, var, constrained, acc);
      break;
    case NodeKind::bin:
      collect_domain(st, m, nd.a, var, constrained, acc);
      collect_domain(st, m, nd.b, var, constrained, acc);
      break;
    case NodeKind::quant:
      if (nd.a != var) collect_domain(st, m, nd.b, var, constrained, acc);
      break;
  }
}

struct Env {
  std::unordered_map<SymId, int> vals;
};

bool eval_rec(const Store& st, const FiniteModel& m, NodeId n, Env& env) {
  const Node& nd = st.node(n);
  switch (nd.kind) {
    case NodeKind::pred: {
      int p = m.pred_index(st.sym_name(nd.a));
      if (p == -1) throw InputError("unknown predicate: " + st.sym_name(nd.a));
      const PredDef& d = m.preds[p];
      const auto& args = st.args(nd.b);
      if (static_cast<int>(args.size()) != d.arity)
        throw InputError("arity mismatch on predicate " + d.name);
      std::vector<int> tuple;
      for (std::size_t i = 0; i < args.size(); ++i) {
        const Term& tm = st.term(args[i]);
        int e;
        if (tm.kind == TermKind::elem) {
          auto it = m.elem_index.find(st.sym_name(tm.sym));
          if (it == m.elem_index.end())
            throw InputError("unknown element: " + st.sym_name(tm.sym));
          e = it->second;
        } else if (tm.kind == TermKind::var) {
          auto it = env.vals.find(tm.sym);
          if (it == env.vals.end())
            throw InputError("free variable in object sentence: " + st.sym_name(tm.sym));
          e = it->second;
        } else {
          throw InputError("numeral argument on object predicate " + d.name);
        }
        if (!std::binary_search(d.domains[i].begin(), d.domains[i].end(), e))
          throw InputError("argument outside domain of predicate " + d.name);
        tuple.push_back(e);
      }
      return d.extension.count(tuple) > 0;
    }
    case NodeKind::truth:
      throw InputError("not an object sentence: mentions the truth predicate");
    case NodeKind::neg:
      return !eval_rec(st, m, nd.a, env);
    case NodeKind::bin: {
      bool a = eval_rec(st, m, nd.a, env);
      bool b = eval_rec(st, m, nd.b, env);
      switch (static_cast<BinOp>(nd.op)) {
        case BinOp::or_op: return a || b;
        case BinOp::and_op: return a && b;
        case BinOp::impl: return !a || b;
        case BinOp::iff: return a == b;
      }
      return false;
    }
    case NodeKind::quant: {
      std::vector<int> dom = var_domain(st, m, nd.b, nd.a);
      bool is_forall = static_cast<Quant>(nd.op) == Quant::forall;
      for (int e : dom) {
        env.vals[nd.a] = e;
        bool v = eval_rec(st, m, nd.b, env);
        env.vals.erase(nd.a);
        if (is_forall && !v) return false;
        if (!is_forall && v) return true;
      }
      return is_forall;
    }
  }
  return false;
}

}  // namespace

std::vector<int> var_domain(const Store& st, const FiniteModel& m, NodeId body, SymId var) {
  bool constrained = false;
  std::vector<int> acc;
  collect_domain(st, m, body, var, constrained, acc);
  if (!constrained) {
    acc.resize(m.elements.size());
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<int>(i);
  }
  return acc;
}

bool eval_object(const Store& st, const FiniteModel& m, NodeId n) {
  if (!st.node(n).pure) throw InputError("not an object sentence: mentions the truth predicate");
  Env env;
  return eval_rec(st, m, n, env);
}

}  // namespace gtt
