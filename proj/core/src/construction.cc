#include "atm/construction.h"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "atm/text.h"

namespace atm {

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.level) + "," + to_string(p.stage) + "," +
         std::to_string(p.step) + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << to_string(p);
}

std::optional<Point> ConstructionState::first_added(const Sentence& phi) const {
  auto id = universe_->id(phi);
  if (!id) throw Error("sentence outside the universe: " + to_string(phi));
  return membership_[*id];
}

std::string ConstructionState::dump() const {
  std::ostringstream os;
  for (const TraceEntry& e : trace_) {
    const std::string point = to_string(e.point);
    for (Universe::Id id : e.added) {
      os << point << " : " << universe_->sentence(id) << '\n';
    }
  }
  return os.str();
}

namespace {

using Id = Universe::Id;

class Simulator {
 public:
  Simulator(ConstructionState& state, std::vector<std::optional<Point>>& member,
            std::vector<TraceEntry>& trace, const std::vector<Measures>& m)
      : u_(state.universe()), member_(member), trace_(trace), measures_(m) {
    users_.resize(u_.size());
    for (Id id = 0; id < u_.size(); ++id) {
      const Sentence& phi = u_.sentence(id);
      switch (phi.kind()) {
        case SentenceKind::kConj:
        case SentenceKind::kDisj:
          users_[u_.left(id)].push_back(id);
          if (u_.right(id) != u_.left(id)) users_[u_.right(id)].push_back(id);
          break;
        case SentenceKind::kT:
          users_[u_.target(id)].push_back(id);
          break;
        case SentenceKind::kImpl:
          buckets_[{m[id].nesting, m[id].impl_complexity}].push_back(id);
          break;
        case SentenceKind::kA:
        case SentenceKind::kM:
          atoms_.push_back(id);
          break;
        default:
          break;
      }
    }
  }

  void run(std::uint32_t level_cap) {
    for (std::uint32_t level = 0; level < level_cap; ++level) {
      Point p{level, Nesting::Finite(0), 0};
      begin(p);
      if (level == 0) {
        add(*u_.id(Sentence::Falsum()));
      } else {
        for (Id id : atoms_) {
          Id target = u_.target(id);
          const bool ungrounded = measures_[target].nesting.is_omega();
          const bool is_a = u_.sentence(id).kind() == SentenceKind::kA;
          if ((level == 1 && ungrounded) || (is_a && before(target, p))) {
            add(id);
          }
        }
      }
      finish();
      for (const auto& [key, implications] : buckets_) {
        if (key.second == 0) continue;
        p = Point{level, key.first, key.second};
        begin(p);
        for (Id id : implications) {
          if (!member_[id] && !before(u_.left(id), p) &&
              before(u_.right(id), p)) {
            add(id);
          }
        }
        finish();
      }
    }
  }

 private:
  bool before(Id id, const Point& p) const {
    return member_[id] && *member_[id] < p;
  }

  void begin(const Point& p) {
    point_ = p;
    added_.clear();
  }

  void add(Id id) {
    if (member_[id]) return;
    member_[id] = point_;
    added_.push_back(id);
    work_.push_back(id);
  }

  // Closes under the conjunction, disjunction and T rules.
  void finish() {
    while (!work_.empty()) {
      Id x = work_.back();
      work_.pop_back();
      for (Id parent : users_[x]) {
        if (member_[parent]) continue;
        if (u_.sentence(parent).kind() == SentenceKind::kDisj) {
          if (member_[u_.left(parent)] && member_[u_.right(parent)]) {
            add(parent);
          }
        } else {
          add(parent);
        }
      }
    }
    if (added_.empty()) return;
    std::sort(added_.begin(), added_.end());
    trace_.push_back(TraceEntry{point_, added_});
  }

  const Universe& u_;
  std::vector<std::optional<Point>>& member_;
  std::vector<TraceEntry>& trace_;
  const std::vector<Measures>& measures_;
  std::vector<std::vector<Id>> users_;
  std::vector<Id> atoms_;
  std::map<std::pair<Nesting, std::uint32_t>, std::vector<Id>> buckets_;
  Point point_;
  std::vector<Id> added_;
  std::vector<Id> work_;
};

}  // namespace

ConstructionState simulate(std::shared_ptr<const Universe> universe,
                           const ConstantTable& table,
                           std::uint32_t level_cap) {
  if (level_cap == 0) throw Error("level cap must be at least 1");
  ConstructionState state;
  state.universe_ = std::move(universe);
  state.level_cap_ = level_cap;
  const Universe& u = *state.universe_;
  Analyzer analyzer(table);
  state.measures_.reserve(u.size());
  for (const Sentence& phi : u.sentences()) {
    state.measures_.push_back(analyzer.measures(phi));
  }
  state.membership_.assign(u.size(), std::nullopt);
  Simulator sim(state, state.membership_, state.trace_, state.measures_);
  sim.run(level_cap);
  return state;
}

ConstructionState simulate(const Universe& universe, const ConstantTable& table,
                           std::uint32_t level_cap) {
  return simulate(std::make_shared<const Universe>(universe), table, level_cap);
}

}  // namespace atm
