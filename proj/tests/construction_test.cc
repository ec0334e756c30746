#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "atm/audit.h"
#include "atm/construction.h"
#include "atm/text.h"
#include "atm/universe.h"
#include "reference_model.h"

namespace atm {
namespace {

const ConstantTable kTable = ConstantTable::Default();

std::vector<Sentence> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Sentence> out;
  for (const char* t : texts) out.push_back(parse_sentence(t));
  return out;
}

std::set<Sentence> closure_of(std::initializer_list<const char*> seeds) {
  auto s = parse_all(seeds);
  Universe u = relevant_closure(s, kTable);
  return {u.sentences().begin(), u.sentences().end()};
}

TEST(Universe, Examples) {
  EXPECT_EQ(closure_of({"bot"}), std::set<Sentence>{Sentence::Falsum()});
  auto s = parse_all({"T[L1]", "T[L1] -> bot", "bot"});
  EXPECT_EQ(closure_of({"T[L1]"}), std::set<Sentence>(s.begin(), s.end()));
  auto t = parse_all({"M[L1] -> A['bot']", "M[L1]", "A['bot']", "~T[L1]",
                      "T[L1]", "bot"});
  EXPECT_EQ(closure_of({"M[L1] -> A['bot']"}),
            std::set<Sentence>(t.begin(), t.end()));
}

TEST(Universe, OrderAndParts) {
  auto seeds = parse_all({"A[L2] -> A['bot']", "T['bot'] | M[L1]"});
  Universe u = relevant_closure(seeds, kTable);
  for (Universe::Id id = 0; id < u.size(); ++id) {
    const Sentence& phi = u.sentence(id);
    EXPECT_EQ(u.id(phi), id);
    if (phi.is_binary()) {
      EXPECT_LT(u.left(id), id);
      EXPECT_LT(u.right(id), id);
      EXPECT_EQ(u.sentence(u.left(id)), phi.left());
    } else if (phi.is_atom()) {
      EXPECT_EQ(u.sentence(u.target(id)), eval(phi.arg(), kTable));
    }
    if (id > 0) {
      EXPECT_LE(u.sentence(id - 1).size(), phi.size());
    }
  }
  EXPECT_FALSE(u.contains(parse_sentence("A[L3]")));
}

class LiarUniverse : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    auto seeds = parse_all({"M[L1] -> A['bot']", "~~M[L1]", "A[L2] -> A['bot']",
                            "~~A[L2]", "~M[L1] -> A['bot']", "~A[L2] -> A['bot']",
                            "~~A['bot']", "bot -> bot", "M['bot']", "~M['bot']",
                            "T['bot']", "A[L3]"});
    state_ = new ConstructionState(
        simulate(std::make_shared<Universe>(relevant_closure(seeds, kTable)),
                 kTable, kDefaultLevelCap));
  }
  static void TearDownTestSuite() { delete state_; }

  static std::optional<Point> at(const char* text) {
    return state_->first_added(parse_sentence(text));
  }
  static ConstructionState* state_;
};
ConstructionState* LiarUniverse::state_ = nullptr;

constexpr Point P(std::uint32_t level, std::uint32_t stage, std::uint32_t step) {
  return Point{level, Nesting::Finite(stage), step};
}

TEST_F(LiarUniverse, FirstAdded) {
  EXPECT_EQ(at("bot"), P(0, 0, 0));
  EXPECT_EQ(at("M[L1]"), P(1, 0, 0));
  EXPECT_EQ(at("A['bot']"), P(1, 0, 0));
  EXPECT_EQ(at("T['bot']"), P(0, 0, 0));
  EXPECT_EQ(at("bot -> bot"), std::nullopt);
  EXPECT_EQ(at("A[L2]"), P(1, 0, 0));
  EXPECT_EQ(at("M['bot']"), std::nullopt);
  EXPECT_EQ(at("~M['bot']"), P(0, 0, 1));
  EXPECT_EQ(at("A[L3]"), P(1, 0, 0));
  EXPECT_EQ(at("~A[L2]"), P(0, 0, 1));
}

TEST_F(LiarUniverse, TheoremsStayOut) {
  for (const char* t : {"M[L1] -> A['bot']", "~~M[L1]", "A[L2] -> A['bot']",
                        "~~A[L2]", "~M[L1] -> A['bot']", "~A[L2] -> A['bot']",
                        "~~A['bot']"}) {
    EXPECT_EQ(at(t), std::nullopt) << t;
  }
}

TEST_F(LiarUniverse, OutsideUniverseThrows) {
  EXPECT_THROW(state_->first_added(parse_sentence("A[L9]")), Error);
}

TEST_F(LiarUniverse, TraceIsOrdered) {
  const auto& trace = state_->trace();
  ASSERT_FALSE(trace.empty());
  for (std::size_t k = 1; k < trace.size(); ++k) {
    EXPECT_LT(trace[k - 1].point, trace[k].point);
  }
  std::size_t members = 0;
  for (Universe::Id id = 0; id < state_->universe().size(); ++id) {
    members += state_->first_added(id).has_value();
  }
  std::size_t added = 0;
  for (const auto& e : trace) {
    EXPECT_TRUE(std::is_sorted(e.added.begin(), e.added.end()));
    for (auto id : e.added) EXPECT_EQ(state_->first_added(id), e.point);
    added += e.added.size();
  }
  EXPECT_EQ(added, members);
}

TEST(Simulate, GoldenTrace) {
  auto seeds = parse_all({"A[L2] -> A['bot']", "T['bot'] | M[L1]"});
  ConstructionState s = simulate(relevant_closure(seeds, kTable), kTable, 4);
  std::ifstream in(ATM_TESTDATA_DIR "/small.trace");
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(s.dump(), golden.str());
}

TEST(Simulate, CapZeroThrows) {
  Universe u = relevant_closure(parse_all({"bot"}), kTable);
  EXPECT_THROW(simulate(u, kTable, 0), Error);
}

TEST(Simulate, MonotoneInCap) {
  auto seeds = default_audit_seeds(kTable);
  auto u = std::make_shared<Universe>(relevant_closure(seeds, kTable));
  ConstructionState small = simulate(u, kTable, 3);
  ConstructionState large = simulate(u, kTable, 8);
  for (Universe::Id id = 0; id < u->size(); ++id) {
    if (small.first_added(id)) {
      EXPECT_EQ(small.first_added(id), large.first_added(id));
    } else if (large.first_added(id)) {
      EXPECT_GE(large.first_added(id)->level, 3u);
    }
  }
}

TEST(Simulate, RestrictionAgrees) {
  auto small_seeds = parse_all({"M[L1] -> A['bot']", "~~A[L2]", "T[T.[bot.]]"});
  std::vector<Sentence> big_seeds = default_audit_seeds(kTable);
  big_seeds.insert(big_seeds.end(), small_seeds.begin(), small_seeds.end());
  Universe u = relevant_closure(small_seeds, kTable);
  Universe big = relevant_closure(big_seeds, kTable);
  ASSERT_LT(u.size(), big.size());
  ConstructionState a = simulate(u, kTable, 6);
  ConstructionState b = simulate(big, kTable, 6);
  for (const Sentence& phi : u.sentences()) {
    ASSERT_TRUE(big.contains(phi));
    EXPECT_EQ(a.first_added(phi), b.first_added(phi)) << phi;
  }
}

TEST(Simulate, Deterministic) {
  auto seeds = default_audit_seeds(kTable);
  std::string first = simulate(relevant_closure(seeds, kTable), kTable).dump();
  std::mt19937_64 rng(5);
  std::shuffle(seeds.begin(), seeds.end(), rng);
  EXPECT_EQ(simulate(relevant_closure(seeds, kTable), kTable).dump(), first);
}

TEST(Point, Printing) {
  EXPECT_EQ(to_string(P(1, 0, 0)), "(1,0,0)");
  EXPECT_EQ(to_string(Point{0, Nesting::Omega(), 2}), "(0,omega,2)");
  EXPECT_LT(P(0, 5, 9), (Point{0, Nesting::Omega(), 0}));
  EXPECT_LT((Point{0, Nesting::Omega(), 9}), P(1, 0, 0));
}

}  // namespace
}  // namespace atm

namespace atm {
namespace {

void expect_reference_agreement(const std::vector<Sentence>& seeds,
                                std::uint32_t cap) {
  Universe u = relevant_closure(seeds, kTable);
  ConstructionState s = simulate(u, kTable, cap);
  auto ref = testing::reference_construction(u.sentences(), kTable, cap);
  std::size_t members = 0;
  for (Universe::Id id = 0; id < u.size(); ++id) {
    auto it = ref.find(u.sentence(id));
    std::optional<Point> expected;
    if (it != ref.end()) expected = it->second;
    members += expected.has_value();
    ASSERT_EQ(s.first_added(id), expected) << u.sentence(id);
  }
  EXPECT_GT(members, 0u);
}

TEST(Simulate, AgreesWithReferenceSmall) {
  expect_reference_agreement(
      parse_all({"A[L2] -> A['bot']", "T['bot'] | M[L1]", "~~M[L1]",
                 "~M[L1] -> A['bot']", "T[T.[L2]] & A[L3]"}),
      kDefaultLevelCap);
}

TEST(Simulate, AgreesWithReferenceAuditUniverse) {
  expect_reference_agreement(default_audit_seeds(kTable), kDefaultLevelCap);
}

TEST(Simulate, AgreesWithReferenceLiarPair) {
  ConstantTable pair = parse_constant_table("L3 := T[L4]\nL4 := ~T[L3]\n");
  auto seeds = parse_all({"T[L3] | ~T[L4]", "M[L3] -> A[L4]", "A[L3 ->. L4]"});
  Universe u = relevant_closure(seeds, pair);
  ConstructionState s = simulate(u, pair, 5);
  auto ref = testing::reference_construction(u.sentences(), pair, 5);
  for (Universe::Id id = 0; id < u.size(); ++id) {
    auto it = ref.find(u.sentence(id));
    EXPECT_EQ(s.first_added(id),
              it == ref.end() ? std::nullopt : std::optional<Point>(it->second))
        << u.sentence(id);
  }
}

}  // namespace
}  // namespace atm
