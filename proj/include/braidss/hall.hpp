#pragma once

#include "braidss/error.hpp"
#include "braidss/generator.hpp"
#include "braidss/tree.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidss {

// The members of a Hall set up to a maximum degree, listed in the Hall
// order (earlier = smaller).
class HallSet {
 public:
  HallSet(Alphabet alphabet, int max_degree, std::vector<Tree> order)
      : alphabet_(std::move(alphabet)), max_degree_(max_degree), order_(std::move(order)) {
    position_.reserve(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) position_.emplace(order_[k], k);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Tree>& trees() const { return order_; }
  std::size_t size() const { return order_.size(); }

  bool contains(const Tree& t) const {
    if (t.degree() > max_degree_)
      throw ArgumentError("tree " + format_tree(t) + " has degree " + std::to_string(t.degree()) +
                          " beyond the Hall set's maximum degree " + std::to_string(max_degree_));
    return position_.find(t) != position_.end();
  }

  // Position in the Hall order, or nullopt when t is not a Hall tree.
  std::optional<std::size_t> position(const Tree& t) const {
    auto it = position_.find(t);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

  // Position of a tree already known to be Hall.
  std::size_t rank(const Tree& t) const {
    auto it = position_.find(t);
    if (it == position_.end()) throw ArgumentError(format_tree(t) + " is not a Hall tree");
    return it->second;
  }

  std::vector<Tree> of_degree(int d) const {
    std::vector<Tree> out;
    for (const Tree& t : order_)
      if (t.degree() == d) out.push_back(t);
    return out;
  }

 private:
  Alphabet alphabet_;
  int max_degree_;
  std::vector<Tree> order_;
  std::unordered_map<Tree, std::size_t> position_;
};

// Builds the Hall set of all degrees <= max_degree.
//
// Degrees are processed in ascending order. For each new degree, h1 runs
// over the current list and h2 over the current list restricted to the
// complementary degree; [h1,h2] is admitted when h1 < h2 and either h1 is a
// letter or h1 = [x,y] with h2 <= y. Without a seed each admitted product is
// inserted immediately after h1, so products admitted later for the same h1
// sit closer to it. With a seed the product is instead inserted just before
// a uniformly chosen existing element no later than h2; that still gives
// [h1,h2] < h2, so the result is another valid Hall set.
inline HallSet generate_hall_set(const Alphabet& alphabet, int max_degree, std::optional<std::uint64_t> seed = std::nullopt) {
  if (alphabet.empty()) throw ArgumentError("Hall set requested over an empty alphabet");
  if (max_degree < 1) throw ArgumentError("Hall set maximum degree must be at least 1");

  std::vector<Tree> list;
  for (const Generator& g : alphabet) list.push_back(Tree::leaf(g));

  std::mt19937_64 rng(seed.value_or(0) ^ (0x9e3779b97f4a7c15ULL * (alphabet.size() + 1)));

  for (int deg = 2; deg <= max_degree; ++deg) {
    std::unordered_map<Tree, std::size_t> pos;
    pos.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) pos.emplace(list[k], k);

    std::vector<std::vector<std::size_t>> by_degree(deg);
    for (std::size_t k = 0; k < list.size(); ++k) by_degree[list[k].degree()].push_back(k);

    // after[k]: products anchored right after list[k] (admission order);
    // before[k]: products anchored right before list[k].
    std::vector<std::vector<Tree>> after(list.size()), before(list.size());

    for (std::size_t a = 0; a < list.size(); ++a) {
      const Tree& h1 = list[a];
      int need = deg - h1.degree();
      if (need < 1) continue;
      std::size_t y_pos = 0;
      if (!h1.is_leaf()) y_pos = pos.at(h1.right());
      for (std::size_t b : by_degree[need]) {
        if (!(a < b)) continue;
        if (!h1.is_leaf() && !(b <= y_pos)) continue;
        Tree h = Tree::node(h1, list[b]);
        if (!seed) {
          after[a].push_back(std::move(h));
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, b);
          before[pick(rng)].push_back(std::move(h));
        }
      }
    }

    std::vector<Tree> next;
    for (std::size_t k = 0; k < list.size(); ++k) {
      for (Tree& t : before[k]) next.push_back(std::move(t));
      next.push_back(list[k]);
      for (auto it = after[k].rbegin(); it != after[k].rend(); ++it) next.push_back(std::move(*it));
    }
    list = std::move(next);
  }
  return HallSet(alphabet, max_degree, std::move(list));
}

inline bool is_hall(const Tree& t, const HallSet& h) { return h.contains(t); }

// Checks the defining conditions of a Hall set directly on a listed order,
// independently of how it was generated: letters present, every product's
// factors listed, h < h2, and the right-factor condition on h1. Returns an
// empty string when valid, otherwise a description of the first violation.
inline std::string hall_set_violation(const HallSet& h) {
  const auto& order = h.trees();
  std::unordered_map<Tree, std::size_t> pos;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (!pos.emplace(order[k], k).second) return "duplicate member " + format_tree(order[k]);
  for (const Generator& g : h.alphabet())
    if (!pos.count(Tree::leaf(g))) return "missing letter " + g.to_string();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Tree& t = order[k];
    if (t.is_leaf()) {
      if (!h.alphabet().contains(t.generator())) return "foreign letter " + format_tree(t);
      continue;
    }
    auto [h1, h2] = t.children();
    auto p1 = pos.find(h1), p2 = pos.find(h2);
    if (p1 == pos.end() || p2 == pos.end()) return "factor of " + format_tree(t) + " not listed";
    if (!(k < p2->second)) return format_tree(t) + " does not precede its right factor";
    if (!(p1->second < p2->second)) return format_tree(t) + " has h1 >= h2";
    if (!h1.is_leaf()) {
      auto py = pos.find(h1.right());
      if (py == pos.end() || !(p2->second <= py->second)) return format_tree(t) + " violates h2 <= y";
    }
  }
  // Completeness: every admissible product within the degree bound is listed.
  for (std::size_t a = 0; a < order.size(); ++a) {
    const Tree& h1 = order[a];
    std::size_t y_pos = h1.is_leaf() ? 0 : pos.at(h1.right());
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (h1.degree() + order[b].degree() > h.max_degree()) continue;
      if (!h1.is_leaf() && b > y_pos) continue;
      if (!pos.count(Tree::node(h1, order[b]))) return "admissible product " + format_tree(Tree::node(h1, order[b])) + " missing";
    }
  }
  return {};
}

}  // namespace braidss
