#include "reference_model.h"

#include <algorithm>
#include <set>

#include "oracles.h"

namespace atm::testing {
namespace {

std::uint32_t arrows(const Sentence& phi) {
  if (!phi.is_binary()) return 0;
  return arrows(phi.left()) + arrows(phi.right()) +
         (phi.kind() == SentenceKind::kImpl ? 1 : 0);
}

}  // namespace

std::map<Sentence, Point> reference_construction(
    const std::vector<Sentence>& universe, const ConstantTable& table,
    std::uint32_t level_cap) {
  FixpointOracle oracle(table);
  for (const Sentence& phi : universe) oracle.add(phi);
  oracle.solve();
  auto n = [&](const Sentence& phi) {
    auto v = oracle.nesting(phi);
    return v ? Nesting::Finite(*v) : Nesting::Omega();
  };

  std::set<Nesting> stages = {Nesting::Omega()};
  std::uint32_t max_i = 0;
  for (const Sentence& phi : universe) {
    stages.insert(n(phi));
    max_i = std::max(max_i, arrows(phi));
  }

  std::map<Sentence, Point> f;
  auto in = [&](const Sentence& phi) { return f.count(phi) > 0; };
  auto close = [&](const Point& p) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Sentence& phi : universe) {
        if (in(phi)) continue;
        bool add = false;
        switch (phi.kind()) {
          case SentenceKind::kConj:
            add = in(phi.left()) || in(phi.right());
            break;
          case SentenceKind::kDisj:
            add = in(phi.left()) && in(phi.right());
            break;
          case SentenceKind::kT:
            add = in(eval(phi.arg(), table));
            break;
          default:
            break;
        }
        if (add) {
          f.emplace(phi, p);
          changed = true;
        }
      }
    }
  };

  for (std::uint32_t level = 0; level < level_cap; ++level) {
    const Point start{level, Nesting::Finite(0), 0};
    std::vector<Sentence> add;
    if (level == 0) add.push_back(Sentence::Falsum());
    for (const Sentence& phi : universe) {
      if (level == 0) break;
      if (phi.kind() != SentenceKind::kA && phi.kind() != SentenceKind::kM) {
        continue;
      }
      Sentence target = eval(phi.arg(), table);
      if (level == 1 && n(target).is_omega()) add.push_back(phi);
      if (phi.kind() == SentenceKind::kA && in(target)) add.push_back(phi);
    }
    for (const Sentence& phi : add) f.emplace(phi, start);
    close(start);

    for (Nesting stage : stages) {
      for (std::uint32_t i = 1; i <= max_i; ++i) {
        const Point p{level, stage, i};
        std::map<Sentence, Point> before = f;
        for (const Sentence& phi : universe) {
          if (phi.kind() != SentenceKind::kImpl || in(phi)) continue;
          if (n(phi) != stage || arrows(phi) != i) continue;
          if (!before.count(phi.left()) && before.count(phi.right())) {
            f.emplace(phi, p);
          }
        }
        close(p);
      }
    }
  }
  return f;
}

}  // namespace atm::testing
