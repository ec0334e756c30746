#include "atm/universe.h"

#include <algorithm>
#include <unordered_set>

namespace atm {

std::optional<Universe::Id> Universe::id(const Sentence& phi) const {
  if (auto it = ids_.find(phi); it != ids_.end()) return it->second;
  return std::nullopt;
}

namespace {

bool is_atom_with_arg(const Sentence& phi) {
  return phi.kind() == SentenceKind::kA || phi.kind() == SentenceKind::kT ||
         phi.kind() == SentenceKind::kM;
}

}  // namespace

Universe relevant_closure(std::span<const Sentence> seeds,
                          const ConstantTable& table) {
  std::unordered_set<Sentence> seen;
  std::vector<Sentence> work;
  auto visit = [&](const Sentence& phi) {
    if (seen.insert(phi).second) work.push_back(phi);
  };
  visit(Sentence::Falsum());
  for (const Sentence& s : seeds) visit(s);
  std::unordered_map<Sentence, Sentence> targets;
  while (!work.empty()) {
    Sentence phi = std::move(work.back());
    work.pop_back();
    if (phi.is_binary()) {
      visit(phi.left());
      visit(phi.right());
    } else if (is_atom_with_arg(phi)) {
      Sentence target = eval(phi.arg(), table);
      visit(target);
      targets.emplace(phi, std::move(target));
    }
  }

  Universe u;
  u.sentences_.assign(seen.begin(), seen.end());
  std::sort(u.sentences_.begin(), u.sentences_.end(),
            [](const Sentence& a, const Sentence& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return (a <=> b) == std::strong_ordering::less;
            });
  u.ids_.reserve(u.sentences_.size());
  for (std::size_t i = 0; i < u.sentences_.size(); ++i) {
    u.ids_.emplace(u.sentences_[i], static_cast<Universe::Id>(i));
  }
  u.parts_.resize(u.sentences_.size());
  for (std::size_t i = 0; i < u.sentences_.size(); ++i) {
    const Sentence& phi = u.sentences_[i];
    if (phi.is_binary()) {
      u.parts_[i] = {u.ids_.at(phi.left()), u.ids_.at(phi.right())};
    } else if (is_atom_with_arg(phi)) {
      Universe::Id t = u.ids_.at(targets.at(phi));
      u.parts_[i] = {t, t};
    }
  }
  return u;
}

}  // namespace atm
