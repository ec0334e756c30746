#include "atm/analysis.h"

#include <algorithm>
#include <ostream>

namespace atm {

std::string to_string(Nesting n) {
  return n.is_omega() ? "omega" : std::to_string(n.value());
}

std::ostream& operator<<(std::ostream& os, Nesting n) {
  return os << to_string(n);
}

Nesting Analyzer::nesting(const Sentence& phi) {
  switch (phi.kind()) {
    case SentenceKind::kFalsum:
    case SentenceKind::kA:
    case SentenceKind::kM:
      return Nesting::Finite(0);
    default:
      break;
  }

  auto [it, inserted] = memo_.try_emplace(phi, std::nullopt);
  if (!inserted) {
    // Reaching a sentence that is still on the stack closes a cycle.
    return it->second.value_or(Nesting::Omega());
  }

  Nesting result;
  if (phi.kind() == SentenceKind::kT) {
    result = nesting(eval(phi.arg(), *table_)).successor();
  } else {
    result = std::max(nesting(phi.left()), nesting(phi.right()));
  }
  // The recursive calls may have rehashed the table.
  memo_[phi] = result;
  return result;
}

Measures Analyzer::measures(const Sentence& phi) {
  return Measures{nesting(phi), impl_complexity(phi)};
}

bool grounded(const Sentence& phi, const ConstantTable& table) {
  return Analyzer(table).grounded(phi);
}

Nesting nesting(const Sentence& phi, const ConstantTable& table) {
  return Analyzer(table).nesting(phi);
}

std::uint32_t impl_complexity(const Sentence& phi) {
  if (!phi.is_binary()) return 0;
  std::uint32_t own = phi.kind() == SentenceKind::kImpl ? 1 : 0;
  return own + impl_complexity(phi.left()) + impl_complexity(phi.right());
}

}  // namespace atm
