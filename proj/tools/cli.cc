#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atm/analysis.h"
#include "atm/audit.h"
#include "atm/checker.h"
#include "atm/construction.h"
#include "atm/corpus.h"
#include "atm/ipc.h"
#include "atm/lift.h"
#include "atm/script.h"
#include "atm/text.h"
#include "atm/universe.h"

namespace atm::cli {

namespace {

using json = nlohmann::json;

// Input that cannot be used at all: bad syntax, missing files.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string table_path;
  std::uint32_t cap = kDefaultLevelCap;
  std::string format = "human";

  bool machine() const { return format == "machine"; }
};

ConstantTable load_table(const Options& o) {
  if (o.table_path.empty()) return ConstantTable::Default();
  try {
    return load_constant_table(o.table_path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Sentence sentence_arg(const std::string& text) {
  try {
    return parse_sentence(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse '" + text + "': " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json nesting_json(Nesting n) {
  return n.is_omega() ? json("omega") : json(n.value());
}

json point_json(const std::optional<Point>& p) {
  return p ? json(to_string(*p)) : json(nullptr);
}

// --- parse, ground, measure -------------------------------------------------

int cmd_parse(const Options& o, const std::vector<std::string>& inputs,
              bool as_term, std::ostream& out) {
  json items = json::array();
  for (const std::string& text : inputs) {
    std::string canonical;
    try {
      canonical = as_term ? to_string(parse_term(text))
                          : to_string(parse_sentence(text));
    } catch (const ParseError& e) {
      throw UsageError("cannot parse '" + text + "': " + e.what());
    }
    if (o.machine()) {
      items.push_back({{"input", text},
                       {"kind", as_term ? "term" : "sentence"},
                       {"canonical", canonical}});
    } else {
      out << canonical << '\n';
    }
  }
  if (o.machine()) out << items.dump(2) << '\n';
  return kExitPass;
}

int cmd_measure(const Options& o, const std::vector<std::string>& inputs,
                bool with_measures, std::ostream& out) {
  ConstantTable table = load_table(o);
  Analyzer analyzer(table);
  json items = json::array();
  for (const std::string& text : inputs) {
    Sentence phi = sentence_arg(text);
    Measures m = analyzer.measures(phi);
    const bool grounded = !m.nesting.is_omega();
    if (o.machine()) {
      json item{{"sentence", to_string(phi)}, {"grounded", grounded}};
      if (with_measures) {
        item["nesting"] = nesting_json(m.nesting);
        item["impl_complexity"] = m.impl_complexity;
      }
      items.push_back(std::move(item));
    } else {
      out << to_string(phi) << ": " << (grounded ? "grounded" : "ungrounded");
      if (with_measures) {
        out << ", n=" << to_string(m.nesting) << ", i=" << m.impl_complexity;
      }
      out << '\n';
    }
  }
  if (o.machine()) out << items.dump(2) << '\n';
  return kExitPass;
}

// --- check ------------------------------------------------------------------

json report_json(const CheckReport& r, bool steps) {
  json j{{"name", r.name},
         {"status", r.ok ? "pass" : "fail"},
         {"conclusion", r.conclusion ? json(to_string(*r.conclusion)) : json()},
         {"grounded", r.conclusion_grounded},
         {"failed_step", r.failed_step ? json(*r.failed_step) : json()},
         {"error", r.error},
         {"diagnostics", r.diagnostics}};
  if (steps) {
    json items = json::array();
    for (const StepResult& s : r.steps) {
      items.push_back(
          {{"step", s.number},
           {"sentence", s.sentence ? json(to_string(*s.sentence)) : json()},
           {"grounded", s.grounded},
           {"error", s.error}});
    }
    j["steps"] = std::move(items);
  }
  return j;
}

void print_report(const CheckReport& r, std::ostream& out) {
  out << (r.name.empty() ? "script" : r.name) << ": "
      << (r.ok ? "pass" : "FAIL") << '\n';
  if (r.conclusion) {
    out << "  conclusion: " << *r.conclusion << '\n'
        << "  grounded: " << (r.conclusion_grounded ? "yes" : "no") << '\n';
  }
  out << "  steps checked: " << r.steps.size() << '\n';
  if (!r.ok) out << "  error: " << r.error << '\n';
}

int cmd_check(const Options& o, const std::vector<std::string>& paths,
              bool steps, std::ostream& out) {
  ConstantTable table = load_table(o);
  json reports = json::array();
  bool all_ok = true;
  for (const std::string& path : paths) {
    ProofScript script;
    try {
      script = parse_script(read_file(path));
    } catch (const ScriptSyntaxError& e) {
      throw UsageError(path + ": " + e.what());
    }
    if (script.name.empty()) script.name = path;
    CheckReport r = check(script, table);
    all_ok = all_ok && r.ok;
    if (o.machine()) {
      reports.push_back(report_json(r, steps));
    } else {
      print_report(r, out);
    }
  }
  if (o.machine()) out << reports.dump(2) << '\n';
  return all_ok ? kExitPass : kExitFail;
}

// --- lift -------------------------------------------------------------------

int cmd_lift(const Options& o, const std::string& path,
             const std::vector<std::string>& term_texts,
             const std::string& output, const std::string& name,
             std::ostream& out) {
  ConstantTable table = load_table(o);
  IpcProof proof;
  try {
    proof = parse_ipc_proof(read_file(path));
  } catch (const IpcError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::vector<Term> terms;
  for (const std::string& text : term_texts) {
    try {
      terms.push_back(parse_term(text));
    } catch (const ParseError& e) {
      throw UsageError("cannot parse term '" + text + "': " + e.what());
    }
  }
  ProofScript script;
  try {
    script = subjunctive_lift(proof, terms, table, name);
  } catch (const LiftError& e) {
    throw UsageError(e.what());
  }
  CheckReport r = check(script, table);
  const std::string text = to_text(script);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write '" + output + "'");
    file << text;
  }
  if (o.machine()) {
    json j{{"steps", script.steps.size()},
           {"conclusion", to_string(*script.claim)},
           {"check", report_json(r, false)}};
    if (output.empty()) j["script"] = text;
    out << j.dump(2) << '\n';
  } else if (output.empty()) {
    out << text;
  } else {
    out << output << ": " << script.steps.size() << " steps, conclusion "
        << *script.claim << ", check " << (r.ok ? "pass" : "FAIL") << '\n';
  }
  return r.ok ? kExitPass : kExitFail;
}

// --- model ------------------------------------------------------------------

int cmd_model(const Options& o, const std::vector<std::string>& seed_texts,
              const std::vector<std::string>& query_texts, bool trace,
              std::ostream& out) {
  ConstantTable table = load_table(o);
  std::vector<Sentence> seeds, queries;
  for (const auto& s : seed_texts) seeds.push_back(sentence_arg(s));
  for (const auto& q : query_texts) queries.push_back(sentence_arg(q));
  if (queries.empty()) queries = seeds;
  // Queries join the universe so that they can always be answered.
  std::vector<Sentence> all = seeds;
  all.insert(all.end(), queries.begin(), queries.end());
  ConstructionState state = simulate(relevant_closure(all, table), table, o.cap);
  if (o.machine()) {
    json items = json::array();
    for (const Sentence& q : queries) {
      items.push_back({{"sentence", to_string(q)},
                       {"first_added", point_json(state.first_added(q))}});
    }
    json j{{"cap", o.cap},
           {"universe_size", state.universe().size()},
           {"queries", std::move(items)}};
    if (trace) {
      json lines = json::array();
      for (const TraceEntry& e : state.trace()) {
        for (auto id : e.added) {
          lines.push_back({{"point", to_string(e.point)},
                           {"sentence", to_string(state.universe().sentence(id))}});
        }
      }
      j["trace"] = std::move(lines);
    }
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  for (const Sentence& q : queries) {
    auto p = state.first_added(q);
    out << q << " : "
        << (p ? to_string(*p)
              : "not added within cap " + std::to_string(o.cap))
        << '\n';
  }
  if (trace) out << state.dump();
  return kExitPass;
}

// --- audit ------------------------------------------------------------------

struct AuditOptions {
  std::string axioms;
  bool rules = false;
  bool observations = false;
  std::size_t samples = 500;
  std::size_t per_family = AxiomSampleSpec{}.per_family;
  std::uint64_t seed = 20240101;
  std::vector<std::string> extra_seeds;
  bool verbose = false;
};

int cmd_audit(const Options& o, const AuditOptions& a, std::ostream& out) {
  ConstantTable table = load_table(o);
  const bool all = a.axioms.empty() && !a.rules && !a.observations;
  std::vector<AuditReport> reports;
  if (all || !a.axioms.empty()) {
    if (!a.axioms.empty() && a.axioms != "default") {
      throw UsageError("unknown axiom sample '" + a.axioms +
                       "'; only 'default' is available");
    }
    AxiomSampleSpec spec;
    spec.per_family = a.per_family;
    spec.seed = a.seed;
    reports.push_back(audit_axioms(spec, table, o.cap));
  }
  if (all || a.rules || a.observations) {
    std::vector<Sentence> seeds = default_audit_seeds(table);
    for (const auto& s : a.extra_seeds) seeds.push_back(sentence_arg(s));
    ConstructionState state =
        simulate(relevant_closure(seeds, table), table, o.cap);
    if (all || a.rules) reports.push_back(audit_rules(state, a.samples, a.seed));
    if (all || a.observations) reports.push_back(audit_observations(state));
  }
  bool ok = true;
  if (o.machine()) {
    json suites = json::array();
    for (const AuditReport& r : reports) {
      suites.push_back(json::parse(to_json(r, a.verbose)));
      ok = ok && r.ok();
    }
    out << json{{"cap", o.cap}, {"pass", ok}, {"suites", suites}}.dump(2)
        << '\n';
  } else {
    for (const AuditReport& r : reports) {
      out << to_human(r, a.verbose);
      ok = ok && r.ok();
    }
    out << (ok ? "audit: pass" : "audit: FAIL") << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

// --- corpus -----------------------------------------------------------------

int cmd_corpus(const Options& o, const std::string& dir, std::ostream& out) {
  ConstantTable table = load_table(o);
  std::vector<CorpusEntry> entries;
  try {
    entries = load_corpus(dir.empty() ? default_corpus_dir() : dir);
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
  CorpusReport report = run_corpus(entries, table, o.cap);
  if (o.machine()) {
    json items = json::array();
    for (const CorpusResult& r : report.results) {
      json j = report_json(r.report, false);
      j["id"] = r.id;
      j["conclusion_matches"] = r.conclusion_matches;
      j["in_countermodel"] = point_json(r.in_countermodel);
      j["pass"] = r.pass;
      items.push_back(std::move(j));
    }
    out << json{{"passed", report.passed()},
                {"total", report.results.size()},
                {"entries", items}}
               .dump(2)
        << '\n';
  } else {
    for (const CorpusResult& r : report.results) {
      out << (r.pass ? "pass " : "FAIL ") << r.id << ": "
          << (r.report.conclusion ? to_string(*r.report.conclusion) : "-")
          << " [" << r.report.steps.size() << " steps, "
          << (r.report.conclusion_grounded ? "grounded" : "ungrounded")
          << ", "
          << (r.in_countermodel ? "in F at " + to_string(*r.in_countermodel)
                                : "outside F")
          << "]";
      if (!r.report.ok) out << " " << r.report.error;
      out << '\n';
    }
    out << report.passed() << "/" << report.results.size() << " pass\n";
  }
  return report.ok() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Proof checker and countermodel simulator for ATM", "atm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML file with option values");

  Options o;
  app.add_option("--table", o.table_path, "Constant table file");
  app.add_option("--cap", o.cap, "Level cap of the countermodel")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::vector<std::string> texts;
  bool as_term = false;
  auto* parse = app.add_subcommand("parse", "Print sentences canonically");
  parse->add_option("text", texts, "Sentences (or terms)")->required();
  parse->add_flag("--term", as_term, "Parse terms instead of sentences");

  auto* ground = app.add_subcommand("ground", "Decide groundedness");
  ground->add_option("sentence", texts, "Sentences")->required();

  auto* measure = app.add_subcommand("measure", "Groundedness, n and i");
  measure->add_option("sentence", texts, "Sentences")->required();

  bool steps = false;
  auto* check_cmd = app.add_subcommand("check", "Check proof scripts");
  check_cmd->add_option("script", texts, "Script files")->required();
  check_cmd->add_flag("--steps", steps, "Per-step results in machine output");

  std::string proof_path, output, name;
  std::vector<std::string> terms;
  auto* lift = app.add_subcommand("lift", "Lift an IPC proof to an ATM script");
  lift->add_option("proof", proof_path, "IPC proof file")->required();
  lift->add_option("--terms", terms, "Term for each variable, in order");
  lift->add_option("-o,--output", output, "Write the script here");
  lift->add_option("--name", name, "Script name");

  std::vector<std::string> seeds, queries;
  bool trace = false;
  auto* model = app.add_subcommand("model", "Simulate the construction of F");
  model->add_option("--seed", seeds, "Seed sentence")->required();
  model->add_option("--query", queries, "Sentence to look up");
  model->add_flag("--trace", trace, "Print every addition");

  AuditOptions a;
  auto* audit = app.add_subcommand("audit", "Countermodel audits");
  audit->add_option("--axioms", a.axioms, "Axiom sample ('default')");
  audit->add_flag("--rules", a.rules, "Rule stability audit");
  audit->add_flag("--observations", a.observations, "Observation audit");
  audit->add_option("--samples", a.samples, "Implications sampled for MP");
  audit->add_option("--per-family", a.per_family, "Axiom instances per family");
  audit->add_option("--sample-seed", a.seed, "Random seed");
  audit->add_option("--with", a.extra_seeds, "Extra universe seed sentence");
  audit->add_flag("--verbose", a.verbose, "Include passing records");

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "Check the bundled corpus");
  corpus->add_option("--dir", dir, "Corpus directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(o, texts, as_term, out);
    if (*ground) return cmd_measure(o, texts, false, out);
    if (*measure) return cmd_measure(o, texts, true, out);
    if (*check_cmd) return cmd_check(o, texts, steps, out);
    if (*lift) return cmd_lift(o, proof_path, terms, output, name, out);
    if (*model) return cmd_model(o, seeds, queries, trace, out);
    if (*audit) return cmd_audit(o, a, out);
    if (*corpus) return cmd_corpus(o, dir, out);
  } catch (const UsageError& e) {
    err << "atm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "atm: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace atm::cli
