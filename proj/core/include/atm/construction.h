#ifndef ATM_CONSTRUCTION_H_
#define ATM_CONSTRUCTION_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atm/analysis.h"
#include "atm/universe.h"

namespace atm {

inline constexpr std::uint32_t kDefaultLevelCap = 8;

// A point of the construction: level, stage (a nesting value) and step.
struct Point {
  std::uint32_t level = 0;
  Nesting stage;
  std::uint32_t step = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr std::strong_ordering operator<=>(const Point& a,
                                                    const Point& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    if (auto c = a.stage <=> b.stage; c != 0) return c;
    return a.step <=> b.step;
  }
};

// "(level,stage,step)", with omega spelled out.
std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

struct TraceEntry {
  Point point;
  std::vector<Universe::Id> added;  // ascending ids
};

// The set F restricted to a universe, as built up to a level cap.
class ConstructionState {
 public:
  const Universe& universe() const { return *universe_; }
  std::uint32_t level_cap() const { return level_cap_; }

  // Throws Error when phi is not in the universe.
  std::optional<Point> first_added(const Sentence& phi) const;
  const std::optional<Point>& first_added(Universe::Id id) const {
    return membership_[id];
  }
  // Member of F strictly before p (that is, of F- at p).
  bool before(Universe::Id id, const Point& p) const {
    return membership_[id] && *membership_[id] < p;
  }
  // Member of F at the end of the given level.
  bool by_end_of_level(Universe::Id id, std::uint32_t level) const {
    return membership_[id] && membership_[id]->level <= level;
  }

  const std::vector<TraceEntry>& trace() const { return trace_; }
  const Measures& measures(Universe::Id id) const { return measures_[id]; }
  bool grounded(Universe::Id id) const {
    return !measures_[id].nesting.is_omega();
  }

  // One "(level,stage,step) : sentence" line per addition, in order.
  std::string dump() const;

  friend ConstructionState simulate(std::shared_ptr<const Universe> universe,
                                    const ConstantTable& table,
                                    std::uint32_t level_cap);

 private:
  std::shared_ptr<const Universe> universe_;
  std::uint32_t level_cap_ = 0;
  std::vector<Measures> measures_;
  std::vector<std::optional<Point>> membership_;
  std::vector<TraceEntry> trace_;
};

// Runs levels 0 .. level_cap - 1. Throws Error when level_cap is 0.
ConstructionState simulate(std::shared_ptr<const Universe> universe,
                           const ConstantTable& table,
                           std::uint32_t level_cap = kDefaultLevelCap);
ConstructionState simulate(const Universe& universe, const ConstantTable& table,
                           std::uint32_t level_cap = kDefaultLevelCap);

}  // namespace atm

#endif  // ATM_CONSTRUCTION_H_
