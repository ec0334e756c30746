// Writes the corpus scripts into a directory, one <id>.atm file each.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "atm/corpus.h"
#include "atm/script.h"

int main(int argc, char** argv) {
  const std::filesystem::path dir =
      argc > 1 ? argv[1] : atm::default_corpus_dir();
  std::filesystem::create_directories(dir);
  const atm::ConstantTable table = atm::ConstantTable::Default();
  for (const atm::ProofScript& script : atm::build_corpus_scripts(table)) {
    const auto path = dir / (script.name + ".atm");
    std::ofstream out(path);
    out << atm::to_text(script);
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return 1;
    }
    std::cout << path.string() << ": " << script.steps.size() << " steps\n";
  }
  return 0;
}
