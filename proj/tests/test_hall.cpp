#include "oracles.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace braidss;

namespace {
std::vector<std::string> formatted(const HallSet& h) {
  std::vector<std::string> v;
  for (const Tree& t : h.trees()) v.push_back(format_tree(t));
  return v;
}
}  // namespace

TEST(Hall, TwoLettersDegreeFiveExactOrder) {
  auto start = std::chrono::steady_clock::now();
  HallSet h = generate_hall_set(Alphabet::letters(2), 5);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  EXPECT_EQ(formatted(h), golden::hall_ab_5());
}

TEST(Hall, SmallCases) {
  EXPECT_EQ(formatted(generate_hall_set(Alphabet::letters(1), 3)), std::vector<std::string>{"a"});
  EXPECT_EQ(formatted(generate_hall_set(Alphabet::letters(2), 2)), (std::vector<std::string>{"a", "[a,b]", "b"}));
  EXPECT_EQ(generate_hall_set(Alphabet::letters(3), 3).size(), 14u);
}

TEST(Hall, LayerAlphabetGivesReferenceBasis) {
  HallSet h = generate_hall_set(Alphabet::layer(4), 3);
  std::vector<std::string> deg3;
  for (const Tree& t : h.of_degree(3)) {
    std::set<int> idx;
    t.for_each_leaf([&](const Generator& g) { idx.insert(g.i()); });
    if (idx.size() == 3) deg3.push_back(format_tree(t));
  }
  EXPECT_EQ(deg3, golden::worked_rows());
}

TEST(Hall, CountsMatchWitt) {
  for (int m = 1; m <= 4; ++m) {
    HallSet h = generate_hall_set(Alphabet::letters(m), 7);
    for (int d = 1; d <= 7; ++d) EXPECT_EQ(Integer(static_cast<long long>(h.of_degree(d).size())), witt_count(m, d)) << m << "," << d;
  }
}

TEST(Hall, StructuralConditionsHold) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(hall_set_violation(generate_hall_set(Alphabet::letters(m), 6)), "") << m;
  EXPECT_EQ(hall_set_violation(generate_hall_set(Alphabet::layer(5), 5)), "");
}

TEST(Hall, SeededOrdersAreValidAndDifferent) {
  HallSet base = generate_hall_set(Alphabet::letters(3), 6);
  int differing = 0;
  for (std::uint64_t seed : {1u, 7u, 42u, 1234u}) {
    HallSet h = generate_hall_set(Alphabet::letters(3), 6, seed);
    EXPECT_EQ(hall_set_violation(h), "") << seed;
    EXPECT_EQ(h.size(), base.size());
    // A different order admits different products, but the same number per degree.
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(h.of_degree(d).size(), base.of_degree(d).size()) << seed << " degree " << d;
    if (formatted(h) != formatted(base)) ++differing;
    EXPECT_EQ(formatted(h), formatted(generate_hall_set(Alphabet::letters(3), 6, seed))) << "deterministic per seed";
  }
  EXPECT_GT(differing, 0);
}

TEST(Hall, ViolationDetectsBrokenOrders) {
  HallSet h = generate_hall_set(Alphabet::letters(2), 3);
  // Swap [a,b] and b: now [a,b] > b, which breaks h1 < [h1,h2] < h2.
  std::vector<Tree> bad = h.trees();
  std::swap(bad[bad.size() - 1], bad[bad.size() - 2]);
  EXPECT_NE(hall_set_violation(HallSet(h.alphabet(), 3, bad)), "");
  // Dropping a tree breaks completeness.
  std::vector<Tree> missing = h.trees();
  missing.erase(missing.begin() + 1);
  EXPECT_NE(hall_set_violation(HallSet(h.alphabet(), 3, missing)), "");
}

TEST(Hall, MembershipAndErrors) {
  HallSet h = generate_hall_set(Alphabet::letters(2), 3);
  EXPECT_TRUE(is_hall(parse_tree("[a,[a,b]]"), h));
  EXPECT_FALSE(is_hall(parse_tree("[[a,b],a]"), h));
  EXPECT_FALSE(is_hall(parse_tree("[b,a]"), h));
  EXPECT_THROW(h.contains(parse_tree("[a,[a,[a,b]]]")), ArgumentError);
  EXPECT_THROW(generate_hall_set(Alphabet::letters(2), 0), ArgumentError);
}
