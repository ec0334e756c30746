#ifndef ATM_ANALYSIS_H_
#define ATM_ANALYSIS_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>

#include "atm/syntax.h"

namespace atm {

// A value of omega + 1: a natural number, or omega above all of them.
class Nesting {
 public:
  constexpr Nesting() = default;
  static constexpr Nesting Finite(std::uint32_t value) {
    return Nesting(value, false);
  }
  static constexpr Nesting Omega() { return Nesting(0, true); }

  constexpr bool is_omega() const { return omega_; }
  // Meaningless for omega.
  constexpr std::uint32_t value() const { return value_; }

  // omega + 1 = omega.
  constexpr Nesting successor() const {
    return omega_ ? *this : Finite(value_ + 1);
  }

  friend constexpr bool operator==(Nesting a, Nesting b) = default;
  friend constexpr std::strong_ordering operator<=>(Nesting a, Nesting b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Nesting(std::uint32_t value, bool omega)
      : value_(value), omega_(omega) {}

  std::uint32_t value_ = 0;
  bool omega_ = false;
};

std::string to_string(Nesting n);
std::ostream& operator<<(std::ostream& os, Nesting n);

struct Measures {
  Nesting nesting;
  std::uint32_t impl_complexity = 0;
};

// Groundedness and nesting against one constant table, memoized across calls.
//
// Both are computed on the dependency graph whose edges run from a compound
// to its parts and from T[t] to eval(t). A sentence is grounded iff no cycle
// is reachable from it; A[t], M[t] and bot have no outgoing edges.
class Analyzer {
 public:
  explicit Analyzer(const ConstantTable& table) : table_(&table) {}

  bool grounded(const Sentence& phi) { return !nesting(phi).is_omega(); }
  Nesting nesting(const Sentence& phi);
  Measures measures(const Sentence& phi);

  const ConstantTable& table() const { return *table_; }

 private:
  const ConstantTable* table_;
  // nullopt marks a sentence whose computation is in progress.
  std::unordered_map<Sentence, std::optional<Nesting>> memo_;
};

bool grounded(const Sentence& phi, const ConstantTable& table);
Nesting nesting(const Sentence& phi, const ConstantTable& table);

// Occurrences of the sentence-level ->; dotted arrows inside terms are not
// counted.
std::uint32_t impl_complexity(const Sentence& phi);

}  // namespace atm

#endif  // ATM_ANALYSIS_H_
