#include "braidss/braidss.hpp"

#include <gtest/gtest.h>

using namespace braidss;

TEST(Generator, PairIsStoredSorted) {
  Generator g = Generator::pair(3, 1);
  EXPECT_EQ(g.i(), 1);
  EXPECT_EQ(g.j(), 3);
  EXPECT_EQ(g.to_string(), "x(1,3)");
  EXPECT_THROW(Generator::pair(2, 2), ArgumentError);
  EXPECT_THROW(Generator::tangent(0), ArgumentError);
}

TEST(Generator, CodesRoundTrip) {
  std::vector<Generator> all;
  for (int a = 0; a < 26; ++a) all.push_back(Generator::letter(a));
  for (int j = 2; j <= kMaxStrands; ++j)
    for (int i = 1; i < j; ++i) all.push_back(Generator::pair(i, j));
  for (int i = 1; i <= kMaxStrands; ++i) all.push_back(Generator::tangent(i));
  std::set<int> codes;
  for (const Generator& g : all) {
    EXPECT_EQ(Generator::from_code(g.code()), g) << g.to_string();
    codes.insert(g.code());
    EXPECT_NE(g.code(), 0);
  }
  EXPECT_EQ(codes.size(), all.size());
}

TEST(Alphabet, LayerOrder) {
  Alphabet a = Alphabet::layer(4);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.to_string(), "{x(1,4),x(2,4),x(3,4)}");
  EXPECT_THROW(Alphabet({Generator::letter(0), Generator::letter(0)}), ArgumentError);
  EXPECT_THROW(Alphabet::letters(27), ArgumentError);
}

TEST(Tree, ParseFormatRoundTrip) {
  for (std::string s : {"a", "[a,b]", "[[a,b],[a,[a,b]]]", "x(1,2)", "[x(1,4),[x(2,4),x(3,4)]]", "[y(1),x(2,3)]"}) {
    Tree t = parse_tree(s);
    EXPECT_EQ(format_tree(t), s);
  }
  EXPECT_EQ(format_tree(parse_tree(" [ a , [ b , c ] ] ")), "[a,[b,c]]");
}

TEST(Tree, Structure) {
  Tree t = parse_tree("[[a,b],[a,[a,b]]]");
  EXPECT_EQ(t.degree(), 5);
  EXPECT_FALSE(t.is_leaf());
  EXPECT_EQ(format_tree(t.left()), "[a,b]");
  EXPECT_EQ(format_tree(t.right()), "[a,[a,b]]");
  EXPECT_EQ(Tree::node(t.left(), t.right()), t);
  std::string leaves;
  t.for_each_leaf([&](const Generator& g) { leaves += g.to_string(); });
  EXPECT_EQ(leaves, "abaab");
}

TEST(Tree, ParseErrors) {
  for (std::string s : {"", "[a,b", "[a b]", "a]", "x(1,1)", "x(1,", "y()", "[a,b]]", "A", "[,]"}) EXPECT_THROW(parse_tree(s), Error) << s;
  EXPECT_THROW(parse_tree("[a,c]", Alphabet::letters(2)), Error);
  EXPECT_NO_THROW(parse_tree("[a,b]", Alphabet::letters(2)));
}

TEST(Combination, ArithmeticDropsZeros) {
  Tree a = parse_tree("a"), ab = parse_tree("[a,b]");
  Combination<Rational> c(a, 2);
  c.add(ab, Rational(1, 3));
  c.add(a, -2);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient(ab), Rational(1, 3));
  EXPECT_EQ(format_combination(c), "1/3*[a,b]");
  EXPECT_EQ(format_combination(c - c), "0");
  EXPECT_EQ(format_combination(Combination<Rational>(a, -1) + Combination<Rational>(ab, 2)), "2*[a,b] - a");
}
