#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtt/classify.hpp"
#include "gtt/errors.hpp"
#include "gtt/fixpoint.hpp"
#include "gtt/fragment.hpp"
#include "gtt/log.hpp"
#include "gtt/model.hpp"
#include "gtt/parse.hpp"
#include "gtt/print.hpp"
#include "gtt/report.hpp"
#include "gtt/suites.hpp"

namespace {

struct Options {
  std::string model_path;
  int depth = 2;
  int reflect = 1;
  std::optional<int> surrogate_bound;
  bool with_liar = false;
  bool with_truthteller = false;
  std::int64_t cap = 4000000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
  std::string suites = "all";
  std::string query;
};

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model_path, "model JSON file")->required();
  cmd->add_option("--depth", o.depth, "connective depth gate (1..6)");
  cmd->add_option("--reflect", o.reflect, "quote tower height (1..4)");
  cmd->add_option("--surrogate-bound", o.surrogate_bound,
                  "bound for models that declare a surrogate family");
  cmd->add_flag("--with-liar", o.with_liar, "register the self-denying sentence");
  cmd->add_flag("--with-truthteller", o.with_truthteller, "register the self-affirming sentence");
  cmd->add_option("--cap", o.cap, "universe size cap");
  cmd->add_option("--seed", o.seed, "seed for sampling commands, recorded in reports");
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

gtt::Fragment make_fragment(const Options& o) {
  auto store = std::make_shared<gtt::Store>();
  gtt::FiniteModel model = gtt::FiniteModel::load_file(o.model_path, o.surrogate_bound);
  gtt::FragmentParams p;
  p.depth = o.depth;
  p.reflect = o.reflect;
  p.with_liar = o.with_liar;
  p.with_truthteller = o.with_truthteller;
  p.cap = o.cap;
  p.seed = o.seed;
  return gtt::build_fragment(store, std::move(model), p);
}

void emit(const gtt::Json& report, const Options& o) {
  std::string text = o.format == "json" ? report.dump(2) + "\n" : gtt::render_text(report);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(o.out, std::ios::binary);
  if (!os) throw gtt::InputError("cannot write: " + o.out);
  os << text;
}

int run_build(const Options& o) {
  gtt::Fragment f = make_fragment(o);
  emit(gtt::fragment_report(f), o);
  return gtt::exit_ok;
}

int run_fixpoint(const Options& o) {
  gtt::Fragment f = make_fragment(o);
  gtt::FixpointTrace tr = gtt::outer_fixpoint(f);
  gtt::Classification cls = gtt::classify_all(f, tr.ustar);
  emit(gtt::fixpoint_report(f, tr, cls), o);
  return gtt::exit_ok;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

int run_query(const Options& o) {
  gtt::Fragment f = make_fragment(o);
  gtt::NodeId n = gtt::parse_sentence(*f.store, o.query);
  std::int32_t idx = f.idx(n);
  gtt::FixpointTrace tr = gtt::outer_fixpoint(f);
  gtt::Classification cls = gtt::classify_all(f, tr.ustar);
  std::string normalized = gtt::print_sentence(*f.store, n);
  emit(gtt::query_report(f, tr, cls, normalized, idx), o);
  if (idx >= 0) return gtt::exit_ok;

  // nearest misses, by edit distance over the printed forms
  std::vector<std::pair<std::size_t, std::int32_t>> best;
  std::size_t scan = std::min<std::size_t>(f.sent.size(), 20000);
  for (std::size_t i = 0; i < scan; ++i) {
    std::size_t d = edit_distance(normalized, gtt::print_sentence(*f.store, f.sent[i].node));
    best.push_back({d, static_cast<std::int32_t>(i)});
  }
  std::sort(best.begin(), best.end());
  std::cerr << "not in the universe: " << normalized << "\n";
  for (std::size_t k = 0; k < best.size() && k < 3; ++k)
    std::cerr << "  near: " << gtt::print_sentence(*f.store, f.sent[static_cast<std::size_t>(best[k].second)].node)
              << "\n";
  return gtt::exit_query_miss;
}

int run_verify(const Options& o) {
  gtt::Fragment f = make_fragment(o);
  gtt::FixpointTrace tr = gtt::outer_fixpoint(f);
  gtt::Classification cls = gtt::classify_all(f, tr.ustar);
  std::vector<std::string> names;
  if (o.suites == "all") {
    names = gtt::suite_names();
  } else {
    std::stringstream ss(o.suites);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (std::find(gtt::suite_names().begin(), gtt::suite_names().end(), tok) ==
          gtt::suite_names().end())
        throw gtt::InputError("unknown suite: " + tok);
      names.push_back(tok);
    }
    if (names.empty()) throw gtt::InputError("no suites named");
  }
  std::vector<gtt::SuiteReport> reports = gtt::run_suites(f, tr.ustar, cls, names);
  emit(gtt::suites_report(reports), o);
  std::int64_t violations = 0;
  for (const gtt::SuiteReport& r : reports) violations += r.violations;
  return violations > 0 ? gtt::exit_suite : gtt::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grounded truth over finite fragments"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build", "construct the fragment and report it");
  add_shared(build, o);
  CLI::App* fix = app.add_subcommand("fixpoint", "iterate to the least fixed point");
  add_shared(fix, o);
  CLI::App* query = app.add_subcommand("query", "classify one sentence");
  add_shared(query, o);
  query->add_option("sentence", o.query, "sentence in the surface syntax")->required();
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_shared(verify, o);
  verify->add_option("--suite", o.suites, "comma-separated suite names, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? gtt::exit_ok : gtt::exit_input;
  }

  try {
    if (build->parsed()) return run_build(o);
    if (fix->parsed()) return run_fixpoint(o);
    if (query->parsed()) return run_query(o);
    return run_verify(o);
  } catch (const gtt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gtt::exit_input;
  }
}
