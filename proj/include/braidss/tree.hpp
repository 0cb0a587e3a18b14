#pragma once

#include "braidss/error.hpp"
#include "braidss/generator.hpp"

#include <cctype>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace braidss {

// A rooted planar binary tree with generator-labelled leaves.
//
// Stored in prefix order as a byte string: a node is the byte 0 followed by
// its left and right subtrees, a leaf is its generator code. Trees up to
// degree 8 fit in the small-string buffer, so copies do not allocate.
// Equality and ordering are on the code, i.e. purely syntactic.
class Tree {
 public:
  static constexpr char kNode = '\0';

  Tree() = default;

  static Tree leaf(const Generator& g) { return Tree(std::string(1, static_cast<char>(g.code()))); }

  static Tree node(const Tree& left, const Tree& right) {
    std::string c;
    c.reserve(1 + left.code_.size() + right.code_.size());
    c.push_back(kNode);
    c += left.code_;
    c += right.code_;
    return Tree(std::move(c));
  }

  // Wraps an existing prefix code; the caller guarantees well-formedness.
  static Tree from_code(std::string code) { return Tree(std::move(code)); }

  bool valid() const { return !code_.empty(); }
  bool is_leaf() const { return code_.size() == 1; }
  Generator generator() const { return Generator::from_code(static_cast<unsigned char>(code_[0])); }

  int degree() const { return static_cast<int>((code_.size() + 1) / 2); }

  Tree left() const { return Tree(code_.substr(1, subtree_end(code_, 1) - 1)); }
  Tree right() const { return Tree(code_.substr(subtree_end(code_, 1))); }

  std::pair<Tree, Tree> children() const {
    std::size_t mid = subtree_end(code_, 1);
    return {Tree(code_.substr(1, mid - 1)), Tree(code_.substr(mid))};
  }

  const std::string& code() const { return code_; }

  template <class F>
  void for_each_leaf(F&& f) const {
    for (char c : code_)
      if (c != kNode) f(Generator::from_code(static_cast<unsigned char>(c)));
  }

  // One past the last byte of the subtree starting at `start`.
  static std::size_t subtree_end(std::string_view code, std::size_t start) {
    int need = 1;
    std::size_t k = start;
    while (need > 0) {
      if (k >= code.size()) throw ParseError("truncated tree code");
      need += (code[k] == kNode) ? 1 : -1;
      ++k;
    }
    return k;
  }

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return a.code_ <=> b.code_; }

 private:
  explicit Tree(std::string code) : code_(std::move(code)) {}

  std::string code_;
};

inline void format_tree_into(const Tree& t, std::string& out) {
  // Walk the prefix code directly; a node opens a bracket, and the comma
  // or closing bracket is emitted once each subtree completes.
  const std::string& c = t.code();
  std::string stack;  // per open node: 0 = awaiting left, 1 = awaiting right
  for (char ch : c) {
    if (ch == Tree::kNode) {
      out += '[';
      stack.push_back(0);
      continue;
    }
    out += Generator::from_code(static_cast<unsigned char>(ch)).to_string();
    while (!stack.empty()) {
      if (stack.back() == 0) {
        stack.back() = 1;
        out += ',';
        break;
      }
      stack.pop_back();
      out += ']';
    }
  }
}

// Canonical text form: `[left,right]` with no whitespace.
inline std::string format_tree(const Tree& t) {
  std::string s;
  format_tree_into(t, s);
  return s;
}

namespace detail {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  Tree parse() {
    Tree t = parse_tree();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 3) fail("index too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Tree parse_tree() {
    if (eat('[')) {
      Tree l = parse_tree();
      expect(',');
      Tree r = parse_tree();
      expect(']');
      return Tree::node(l, r);
    }
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c < 'a' || c > 'z') fail(std::string("unexpected character '") + c + "'");
    ++pos_;
    std::size_t save = pos_;
    try {
      if (c == 'x' && eat('(')) {
        int i = parse_int();
        expect(',');
        int j = parse_int();
        expect(')');
        return Tree::leaf(Generator::pair(i, j));
      }
      if (c == 'y' && eat('(')) {
        int i = parse_int();
        expect(')');
        return Tree::leaf(Generator::tangent(i));
      }
    } catch (const ArgumentError& e) {
      pos_ = save;
      fail(e.what());
    }
    return Tree::leaf(Generator::letter(c));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// tree := generator | "[" tree "," tree "]"; whitespace is ignored.
inline Tree parse_tree(std::string_view s) { return detail::TreeParser(s).parse(); }

// As above, and every leaf must belong to `alphabet`.
inline Tree parse_tree(std::string_view s, const Alphabet& alphabet) {
  Tree t = parse_tree(s);
  t.for_each_leaf([&](const Generator& g) {
    if (!alphabet.contains(g)) throw ParseError("generator " + g.to_string() + " is not in alphabet " + alphabet.to_string());
  });
  return t;
}

}  // namespace braidss

template <>
struct std::hash<braidss::Tree> {
  std::size_t operator()(const braidss::Tree& t) const noexcept { return std::hash<std::string>{}(t.code()); }
};
