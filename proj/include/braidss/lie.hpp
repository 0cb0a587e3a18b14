#pragma once

#include "braidss/combination.hpp"
#include "braidss/error.hpp"
#include "braidss/hall.hpp"

#include <map>
#include <string>
#include <utility>

namespace braidss {

// An element of the free Lie algebra on an ordered alphabet, written as a
// combination of bracket trees. Canonical when every tree is Hall.
struct LieElement {
  Alphabet alphabet;
  Combination<Rational> terms;

  LieElement() = default;
  LieElement(Alphabet a, Combination<Rational> c) : alphabet(std::move(a)), terms(std::move(c)) { validate(); }

  static LieElement of(const Alphabet& a, const Tree& t, Rational c = 1) { return LieElement(a, Combination<Rational>(t, c)); }

  bool is_zero() const { return terms.empty(); }

  void validate() const {
    for (const auto& [t, c] : terms)
      t.for_each_leaf([&](const Generator& g) {
        if (!alphabet.contains(g)) throw ArgumentError("generator " + g.to_string() + " is not in alphabet " + alphabet.to_string());
      });
  }

  LieElement& operator+=(const LieElement& o) {
    require_same_alphabet(o);
    terms += o.terms;
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    require_same_alphabet(o);
    terms -= o.terms;
    return *this;
  }
  LieElement& operator*=(const Rational& q) {
    terms *= q;
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& q, LieElement a) { return a *= q; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

  void require_same_alphabet(const LieElement& o) const {
    if (!(alphabet == o.alphabet)) throw ArgumentError("alphabet mismatch: " + alphabet.to_string() + " vs " + o.alphabet.to_string());
  }
};

namespace detail {

// Locates a subtree s = [s1,s2] that is not Hall but whose children are,
// searching left before right. Returns the byte range of s inside `code`.
inline std::pair<std::size_t, std::size_t> find_minimal_non_hall(const std::string& code, std::size_t start, const HallSet& h) {
  std::size_t end = Tree::subtree_end(code, start);
  std::size_t mid = Tree::subtree_end(code, start + 1);
  Tree left = Tree::from_code(code.substr(start + 1, mid - start - 1));
  if (!h.contains(left)) return find_minimal_non_hall(code, start + 1, h);
  Tree right = Tree::from_code(code.substr(mid, end - mid));
  if (!h.contains(right)) return find_minimal_non_hall(code, mid, h);
  return {start, end};
}

inline Tree splice(const std::string& code, std::pair<std::size_t, std::size_t> range, const Tree& replacement) {
  std::string c;
  c.reserve(code.size());
  c.append(code, 0, range.first);
  c += replacement.code();
  c.append(code, range.second, std::string::npos);
  return Tree::from_code(std::move(c));
}

// Pending non-canonical terms keyed by their formatted text, so the
// smallest-string term is always rewritten first.
class Worklist {
 public:
  void add(const Tree& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = items_.try_emplace(format_tree(t), t, c);
    if (!inserted) {
      it->second.second += c;
      if (it->second.second == 0) items_.erase(it);
    }
  }
  bool empty() const { return items_.empty(); }
  std::pair<Tree, Rational> pop() {
    auto it = items_.begin();
    auto out = std::move(it->second);
    items_.erase(it);
    return out;
  }

 private:
  std::map<std::string, std::pair<Tree, Rational>> items_;
};

}  // namespace detail

// Rewrites a combination of trees into Hall trees using antisymmetry and the
// Jacobi identity. At each step the first non-Hall tree (by formatted text)
// is taken, a non-Hall subtree s = [s1,s2] with Hall children is located,
// and then:
//   s1 == s2           -> the term is dropped;
//   s1 >  s2           -> the children are swapped and the sign flipped;
//   s1 = [x,y] < s2    -> s is replaced by [[x,s2],y] + [x,[y,s2]].
inline LieElement hallify(const LieElement& e, const HallSet& h) {
  if (!(e.alphabet == h.alphabet()))
    throw ArgumentError("alphabet mismatch: element over " + e.alphabet.to_string() + ", Hall set over " + h.alphabet().to_string());

  Combination<Rational> done;
  detail::Worklist pending;
  for (const auto& [t, c] : e.terms) {
    if (h.contains(t))
      done.add(t, c);
    else
      pending.add(t, c);
  }

  auto emit = [&](const Tree& t, const Rational& c) {
    if (h.contains(t))
      done.add(t, c);
    else
      pending.add(t, c);
  };

  while (!pending.empty()) {
    auto [t, coeff] = pending.pop();
    const std::string& code = t.code();
    auto range = detail::find_minimal_non_hall(code, 0, h);
    Tree s = Tree::from_code(code.substr(range.first, range.second - range.first));
    auto [s1, s2] = s.children();
    if (s1 == s2) continue;
    std::size_t p1 = h.rank(s1), p2 = h.rank(s2);
    if (p1 > p2) {
      emit(detail::splice(code, range, Tree::node(s2, s1)), -coeff);
      continue;
    }
    // s1 < s2 and s is not Hall, so s1 = [x,y] with y < s2.
    if (s1.is_leaf()) throw InvariantError("Hall set does not contain admissible product " + format_tree(s));
    auto [x, y] = s1.children();
    emit(detail::splice(code, range, Tree::node(Tree::node(x, s2), y)), coeff);
    emit(detail::splice(code, range, Tree::node(x, Tree::node(y, s2))), coeff);
  }
  return LieElement(e.alphabet, std::move(done));
}

// The Lie bracket of two elements, in Hall form.
inline LieElement bracket(const LieElement& a, const LieElement& b, const HallSet& h) {
  a.require_same_alphabet(b);
  if (a.terms.max_degree() + b.terms.max_degree() > h.max_degree())
    throw ArgumentError("bracket degree " + std::to_string(a.terms.max_degree() + b.terms.max_degree()) +
                        " exceeds the Hall set's maximum degree " + std::to_string(h.max_degree()));
  return hallify(LieElement(a.alphabet, bracket_terms(a.terms, b.terms)), h);
}

}  // namespace braidss
