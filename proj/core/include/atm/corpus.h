#ifndef ATM_CORPUS_H_
#define ATM_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atm/checker.h"
#include "atm/construction.h"
#include "atm/script.h"
#include "atm/syntax.h"

namespace atm {

class CorpusError : public Error {
 public:
  using Error::Error;
};

struct CorpusEntry {
  std::string id;
  std::string description;
  ProofScript script;
  Sentence expected;
  std::string path;
};

struct RequiredEntry {
  std::string id;
  std::string description;
  Sentence conclusion;
};

// The entries every corpus must contain, in order.
const std::vector<RequiredEntry>& required_entries();

// The corpus directory of the source tree.
std::string default_corpus_dir();

// Reads <dir>/*.atm. Throws CorpusError when a file does not parse, when a
// required entry is missing, or when a script's claim differs from the
// expected conclusion.
std::vector<CorpusEntry> load_corpus(const std::string& dir = default_corpus_dir());

struct CorpusResult {
  std::string id;
  CheckReport report;
  bool conclusion_matches = false;
  // First point at which the conclusion enters F; expected to be absent.
  std::optional<Point> in_countermodel;
  bool pass = false;
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::size_t passed() const;
  bool ok() const { return passed() == results.size(); }
};

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const ConstantTable& table,
                        std::uint32_t level_cap = kDefaultLevelCap);

// Builds the scripts of the required entries from scratch, in the same order.
// The committed corpus files are the text of these scripts.
std::vector<ProofScript> build_corpus_scripts(const ConstantTable& table);

}  // namespace atm

#endif  // ATM_CORPUS_H_
