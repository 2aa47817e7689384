#include "gtt/report.hpp"

#include <map>
#include <sstream>

#include "gtt/print.hpp"

namespace gtt {

namespace {

// Sentence listings are capped; queries cover anything beyond the cap.
constexpr std::size_t kListingCap = 1000;

Json params_json(const Fragment& f) {
  Json p;
  p["model"] = f.model.name;
  p["depth"] = f.params.depth;
  p["reflect"] = f.params.reflect;
  p["with_liar"] = f.params.with_liar;
  p["with_truthteller"] = f.params.with_truthteller;
  p["cap"] = f.params.cap;
  p["seed"] = f.params.seed;
  return p;
}

}  // namespace

Json fragment_report(const Fragment& f) {
  Store& st = *f.store;
  Json r;
  r["kind"] = "fragment";
  r["params"] = params_json(f);
  r["sentences_total"] = f.sent.size();

  std::map<std::string, std::int64_t> fam;
  for (const SentenceInfo& s : f.sent) ++fam[family_name(s.family)];
  Json jf;
  for (const auto& [k, v] : fam) jf[k] = v;
  r["families"] = jf;

  Json seeds;
  std::int64_t base = 0;
  for (const SentenceInfo& s : f.sent) base += s.in_z;
  seeds["true_pure"] = base;
  seeds["fixed_quantified"] = f.z1_fixed.size();
  seeds["fixed_truth_about_truth"] = f.z2_fixed.size();
  seeds["attributions_true"] = f.z3.size();
  seeds["denials_true"] = f.z4.size();
  seeds["attribution_negations"] = f.z34_neg.size();
  r["seeds"] = seeds;

  Json jd = Json::array();
  for (const Designated& d : st.designated()) {
    Json e;
    e["kind"] = d.kind;
    e["code"] = nat_to_string(d.code);
    e["text"] = print_sentence(st, d.node);
    jd.push_back(e);
  }
  r["designated"] = jd;

  r["chains"] = f.chains.size();
  r["rules"] = f.rules.size();

  Json listing = Json::array();
  std::size_t n = std::min(f.sent.size(), kListingCap);
  for (std::size_t i = 0; i < n; ++i) {
    const SentenceInfo& s = f.sent[i];
    Json e;
    e["index"] = i;
    e["text"] = print_sentence(st, s.node);
    e["family"] = family_name(s.family);
    e["depth"] = st.node(s.node).depth;
    e["pure"] = s.pure;
    e["code"] = nat_to_string(st.code_of(s.node));
    listing.push_back(e);
  }
  r["listed"] = n;
  r["sentences"] = listing;
  return r;
}

Json fixpoint_report(const Fragment& f, const FixpointTrace& tr, const Classification& cls) {
  Json r;
  r["kind"] = "fixpoint";
  r["params"] = params_json(f);
  r["universe"] = f.sent.size();
  r["rounds"] = tr.rounds;
  Json ji = Json::array();
  for (const IterateInfo& it : tr.iterates) {
    Json e;
    e["size"] = it.size;
    e["added"] = it.added;
    e["consistent"] = it.consistent;
    ji.push_back(e);
  }
  r["iterates"] = ji;
  Json jc;
  jc["grounded_true"] = cls.grounded_true;
  jc["grounded_false"] = cls.grounded_false;
  jc["ungrounded"] = cls.ungrounded;
  r["classes"] = jc;
  std::map<std::int32_t, std::int64_t> hist;
  for (std::int32_t s : tr.final_sat.stage)
    if (s >= 0) ++hist[s];
  Json jh;
  for (const auto& [k, v] : hist) jh[std::to_string(k)] = v;
  r["stages"] = jh;
  return r;
}

Json suites_report(const std::vector<SuiteReport>& reports) {
  Json r;
  r["kind"] = "suites";
  std::int64_t checked = 0, violations = 0, skipped = 0;
  Json js = Json::array();
  for (const SuiteReport& s : reports) {
    checked += s.checked;
    violations += s.violations;
    skipped += s.skipped;
    Json e;
    e["name"] = s.name;
    e["checked"] = s.checked;
    e["violations"] = s.violations;
    e["skipped"] = s.skipped;
    e["failures"] = s.failures;
    e["notes"] = s.notes;
    Json jd = Json::array();
    for (const Discrepancy& d : s.discrepancies) {
      Json de;
      de["where"] = d.where;
      de["claimed"] = d.claimed;
      de["derived"] = d.derived;
      jd.push_back(de);
    }
    e["discrepancies"] = jd;
    js.push_back(e);
  }
  r["suites"] = js;
  r["checked"] = checked;
  r["violations"] = violations;
  r["skipped"] = skipped;
  return r;
}

Json query_report(const Fragment& f, const FixpointTrace& tr, const Classification& cls,
                  const std::string& query, std::int32_t idx) {
  Store& st = *f.store;
  Json r;
  r["kind"] = "query";
  r["query"] = query;
  r["found"] = idx >= 0;
  if (idx < 0) return r;
  std::size_t i = static_cast<std::size_t>(idx);
  r["normalized"] = print_sentence(st, f.sent[i].node);
  r["code"] = nat_to_string(st.code_of(f.sent[i].node));
  r["family"] = family_name(f.sent[i].family);
  r["class"] = cls_name(cls.cls[i]);
  r["in_l"] = tr.ustar[i] != 0;
  std::int32_t neg = f.sent[i].neg_idx;
  r["in_f"] = neg >= 0 && tr.ustar[static_cast<std::size_t>(neg)] != 0;
  r["stage"] = tr.final_sat.stage[i];
  return r;
}

namespace {

std::string render_fragment(const Json& r) {
  std::ostringstream os;
  const Json& p = r.at("params");
  os << "fragment over model " << p.at("model").get<std::string>() << "\n";
  os << "  depth " << p.at("depth") << ", reflect " << p.at("reflect") << ", liar "
     << p.at("with_liar") << ", truthteller " << p.at("with_truthteller") << "\n";
  os << "  sentences: " << r.at("sentences_total") << "\n";
  os << "  families:\n";
  for (const auto& [k, v] : r.at("families").items()) os << "    " << k << ": " << v << "\n";
  os << "  seeds:\n";
  for (const auto& [k, v] : r.at("seeds").items()) os << "    " << k << ": " << v << "\n";
  for (const Json& d : r.at("designated"))
    os << "  designated " << d.at("kind").get<std::string>() << " (code "
       << d.at("code").get<std::string>() << "): " << d.at("text").get<std::string>() << "\n";
  os << "  chains: " << r.at("chains") << ", rules: " << r.at("rules") << "\n";
  os << "  listing (first " << r.at("listed") << "):\n";
  for (const Json& e : r.at("sentences"))
    os << "    [" << e.at("family").get<std::string>() << "] " << e.at("text").get<std::string>()
       << "\n";
  return os.str();
}

std::string render_fixpoint(const Json& r) {
  std::ostringstream os;
  os << "fixpoint over model " << r.at("params").at("model").get<std::string>() << ", universe "
     << r.at("universe") << "\n";
  int round = 0;
  for (const Json& e : r.at("iterates"))
    os << "  round " << round++ << ": " << e.at("size") << " members (+" << e.at("added")
       << (e.at("consistent").get<bool>() ? ", consistent" : ", INCONSISTENT") << ")\n";
  const Json& c = r.at("classes");
  os << "  classes: true " << c.at("grounded_true") << ", false " << c.at("grounded_false")
     << ", ungrounded " << c.at("ungrounded") << "\n";
  os << "  stages:";
  for (const auto& [k, v] : r.at("stages").items()) os << " " << k << ":" << v;
  os << "\n";
  return os.str();
}

std::string render_suites(const Json& r) {
  std::ostringstream os;
  for (const Json& s : r.at("suites")) {
    os << s.at("name").get<std::string>() << ": " << s.at("checked") << " checks, "
       << s.at("violations") << " violations, " << s.at("skipped") << " skipped\n";
    for (const Json& fl : s.at("failures"))
      os << "  violation: " << fl.get<std::string>() << "\n";
    for (const Json& n : s.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
    for (const Json& d : s.at("discrepancies"))
      os << "  discrepancy at " << d.at("where").get<std::string>() << ": claimed "
         << d.at("claimed").get<std::string>() << ", derived " << d.at("derived").get<std::string>()
         << "\n";
  }
  os << "total: " << r.at("checked") << " checks, " << r.at("violations") << " violations, "
     << r.at("skipped") << " skipped\n";
  return os.str();
}

std::string render_query(const Json& r) {
  std::ostringstream os;
  if (!r.at("found").get<bool>()) {
    os << "not in the universe: " << r.at("query").get<std::string>() << "\n";
    return os.str();
  }
  os << r.at("normalized").get<std::string>() << "\n";
  os << "  class: " << r.at("class").get<std::string>() << "\n";
  os << "  in closure: " << (r.at("in_l").get<bool>() ? "yes" : "no") << ", negation in closure: "
     << (r.at("in_f").get<bool>() ? "yes" : "no") << "\n";
  if (r.at("stage").get<int>() >= 0) os << "  stage: " << r.at("stage").get<int>() << "\n";
  os << "  family: " << r.at("family").get<std::string>() << "\n";
  os << "  code: " << r.at("code").get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::string render_text(const Json& report) {
  const std::string kind = report.at("kind").get<std::string>();
  if (kind == "fragment") return render_fragment(report);
  if (kind == "fixpoint") return render_fixpoint(report);
  if (kind == "suites") return render_suites(report);
  if (kind == "query") return render_query(report);
  return report.dump(2) + "\n";
}

}  // namespace gtt
