#include <benchmark/benchmark.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "atm/analysis.h"
#include "atm/audit.h"
#include "atm/checker.h"
#include "atm/construction.h"
#include "atm/corpus.h"
#include "atm/lift.h"
#include "atm/script.h"
#include "atm/text.h"
#include "atm/universe.h"

namespace {

const atm::ConstantTable& table() {
  static const atm::ConstantTable t = atm::ConstantTable::Default();
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_ParseSentence(benchmark::State& state) {
  const std::string text =
      "((M['A[L2] -> bot'] & M[L2]) -> A[L2 <->. 'A[L2] -> bot']) -> "
      "~~A[L2] | T[T.[L1 /\\. bot.]]";
  for (auto _ : state) benchmark::DoNotOptimize(atm::parse_sentence(text));
}
BENCHMARK(BM_ParseSentence);

void BM_PrintSentence(benchmark::State& state) {
  auto phi = atm::parse_sentence("(M[L1] -> A['bot']) & ~~A[L2 ->. 'T[L1]']");
  for (auto _ : state) benchmark::DoNotOptimize(atm::to_string(phi));
}
BENCHMARK(BM_PrintSentence);

void BM_Nesting(benchmark::State& state) {
  auto phi = atm::parse_sentence(
      "T[T.[T.[L2]]] & (T[L1] | M[L1]) -> T[T.[bot.] /\\. L2]");
  for (auto _ : state) {
    atm::Analyzer a(table());  // fresh memo each time
    benchmark::DoNotOptimize(a.nesting(phi));
  }
}
BENCHMARK(BM_Nesting);

void BM_ParseScript(benchmark::State& state) {
  const std::string text = slurp(ATM_CORPUS_DIR "/thm1a.atm");
  for (auto _ : state) benchmark::DoNotOptimize(atm::parse_script(text));
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_ParseScript)->Unit(benchmark::kMillisecond);

void BM_CheckCorpus(benchmark::State& state) {
  auto entries = atm::load_corpus(ATM_CORPUS_DIR);
  std::size_t steps = 0;
  for (const auto& e : entries) steps += e.script.steps.size();
  for (auto _ : state) {
    for (const auto& e : entries) {
      benchmark::DoNotOptimize(atm::check(e.script, table()));
    }
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_CheckCorpus)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  auto seeds = atm::default_audit_seeds(table());
  auto universe =
      std::make_shared<atm::Universe>(atm::relevant_closure(seeds, table()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        atm::simulate(universe, table(), static_cast<std::uint32_t>(state.range(0))));
  }
  state.counters["universe"] = static_cast<double>(universe->size());
}
BENCHMARK(BM_Simulate)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Lift(benchmark::State& state) {
  atm::IpcProof proof = atm::parse_ipc_proof(
      slurp(ATM_CORPUS_DIR "/ipc/no-fixed-negation.ipc"));
  std::vector<atm::Term> terms = {atm::Term::Liar(1), atm::Term::Liar(2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(atm::subjunctive_lift(proof, terms, table()));
  }
}
BENCHMARK(BM_Lift)->Unit(benchmark::kMillisecond);

void BM_AuditAxioms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(atm::audit_axioms(atm::AxiomSampleSpec{}, table()));
  }
}
BENCHMARK(BM_AuditAxioms)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
