#pragma once

#include "braidss/combination.hpp"
#include "braidss/error.hpp"
#include "braidss/hall.hpp"
#include "braidss/lie.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidss {

// Hall sets for the layer alphabets x(1,m) < ... < x(m-1,m), built on first
// use and shared read-only afterwards. Safe to use from several threads.
class HallCache {
 public:
  explicit HallCache(int max_degree, std::optional<std::uint64_t> seed = std::nullopt) : max_degree_(max_degree), seed_(seed) {
    if (max_degree < 1) throw ArgumentError("Hall cache maximum degree must be at least 1");
  }

  HallCache(const HallCache&) = delete;
  HallCache& operator=(const HallCache&) = delete;

  const HallSet& layer(int m) const {
    std::lock_guard lock(mu_);
    auto& slot = sets_[m];
    if (!slot) slot = std::make_unique<const HallSet>(generate_hall_set(Alphabet::layer(m), max_degree_, seed_));
    return *slot;
  }

  int max_degree() const { return max_degree_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

 private:
  int max_degree_;
  std::optional<std::uint64_t> seed_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<const HallSet>> sets_;
};

// An element of the braid Lie algebra on n strands (with tangential
// generators y(i)), as an unreduced combination of bracket trees.
struct BraidElement {
  int n = 0;
  Combination<Rational> terms;

  BraidElement() = default;
  BraidElement(int strands, Combination<Rational> c) : n(strands), terms(std::move(c)) { validate(); }

  static BraidElement of(int strands, const Tree& t, Rational c = 1) { return BraidElement(strands, Combination<Rational>(t, c)); }

  void validate() const {
    if (n < 0 || n > kMaxStrands) throw ArgumentError("ambient strand count out of range: " + std::to_string(n));
    for (const auto& [t, c] : terms)
      t.for_each_leaf([&](const Generator& g) {
        if (g.is_letter()) throw ArgumentError("letter " + g.to_string() + " in a braid element");
        if (g.max_index() > n) throw ArgumentError("generator " + g.to_string() + " exceeds ambient n = " + std::to_string(n));
      });
  }
};

// Canonical representative of an element of BT_n: Hall-form components in
// each free layer m = 2..n plus the linear y part.
struct LayeredForm {
  int n = 0;
  std::map<int, LieElement> layers;  // never holds a zero layer
  std::map<int, Rational> y;         // never holds a zero coefficient

  bool is_zero() const { return layers.empty() && y.empty(); }

  LieElement layer(int m) const {
    auto it = layers.find(m);
    if (it != layers.end()) return it->second;
    return LieElement(Alphabet::layer(m), {});
  }

  void add_layer(int m, const LieElement& e) {
    if (e.is_zero()) return;
    auto [it, inserted] = layers.try_emplace(m, e);
    if (!inserted) {
      it->second += e;
      if (it->second.is_zero()) layers.erase(it);
    }
  }

  void add_y(int i, const Rational& c) {
    if (c == 0) return;
    auto& slot = y[i];
    slot += c;
    if (slot == 0) y.erase(i);
  }

  LayeredForm& operator+=(const LayeredForm& o) {
    if (n != o.n) throw ArgumentError("layered forms over different strand counts");
    for (const auto& [m, e] : o.layers) add_layer(m, e);
    for (const auto& [i, c] : o.y) add_y(i, c);
    return *this;
  }

  LayeredForm& operator*=(const Rational& q) {
    if (q == 0) {
      layers.clear();
      y.clear();
      return *this;
    }
    for (auto& [m, e] : layers) e *= q;
    for (auto& [i, c] : y) c *= q;
    return *this;
  }

  // Flattens back to trees (layer trees plus y leaves).
  BraidElement to_braid() const {
    Combination<Rational> c;
    for (const auto& [m, e] : layers) c += e.terms;
    for (const auto& [i, q] : y) c.add(Tree::leaf(Generator::tangent(i)), q);
    return BraidElement(n, std::move(c));
  }

  friend bool operator==(const LayeredForm&, const LayeredForm&) = default;
};

inline std::string format_layered(const LayeredForm& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, e] : f.layers) s += "layer " + std::to_string(m) + ": " + format_combination(e.terms) + "; ";
  if (!f.y.empty()) {
    s += "y:";
    for (const auto& [i, c] : f.y) s += " " + to_string(c) + "*y(" + std::to_string(i) + ")";
  }
  return s;
}

namespace detail {

inline bool has_tangent(const Tree& t) {
  bool found = false;
  t.for_each_leaf([&](const Generator& g) { found = found || g.is_tangent(); });
  return found;
}

// Leaves of the form x(i,top) versus all other leaves.
struct Purity {
  int top_leaves = 0;
  int other_leaves = 0;
  bool pure() const { return top_leaves == 0 || other_leaves == 0; }
};

inline Purity purity(std::string_view code, int top) {
  Purity p;
  for (char ch : code) {
    if (ch == Tree::kNode) continue;
    Generator g = Generator::from_code(static_cast<unsigned char>(ch));
    if (g.is_pair() && g.j() == top)
      ++p.top_leaves;
    else
      ++p.other_leaves;
  }
  return p;
}

}  // namespace detail

// Rewrites an element of B_n into a combination of pure brackets: brackets
// whose leaves are either all of the form x(i,n) or none of that form.
//
// The first impure tree (by formatted text) is taken and a smallest-degree
// impure subtree s = [s1,s2] is located (leftmost on ties). For degree two,
// the braid relations apply:
//   [x(i,n), x(i,m)] -> [x(m,n), x(i,n)]
//   [x(i,j), x(i,n)] -> [x(i,n), x(j,n)]      (and with i, j exchanged)
//   disjoint index pairs                       -> the term vanishes.
// Otherwise the Jacobi identity moves the impurity to a smaller subtree:
//   [[x,y],s2] -> [[s2,y],x] + [[x,s2],y]
//   [s1,[x,y]] -> [x,[s1,y]] + [y,[x,s1]]     (when s1 is a generator).
inline BraidElement standardize(const BraidElement& e) {
  e.validate();
  const int top = e.n;
  Combination<Rational> done;
  detail::Worklist pending;

  auto emit = [&](const Tree& t, const Rational& c) {
    if (detail::purity(t.code(), top).pure())
      done.add(t, c);
    else
      pending.add(t, c);
  };

  for (const auto& [t, c] : e.terms) {
    if (t.degree() >= 2 && detail::has_tangent(t))
      throw ArgumentError("y generator inside the bracket " + format_tree(t) + "; such brackets vanish and must be dropped first");
    emit(t, c);
  }

  while (!pending.empty()) {
    auto [t, coeff] = pending.pop();
    const std::string& code = t.code();

    std::pair<std::size_t, std::size_t> best{0, 0};
    int best_degree = 0;
    for (std::size_t k = 0; k < code.size(); ++k) {
      if (code[k] != Tree::kNode) continue;
      std::size_t end = Tree::subtree_end(code, k);
      int deg = static_cast<int>((end - k + 1) / 2);
      if (best_degree != 0 && deg >= best_degree) continue;
      if (detail::purity(std::string_view(code).substr(k, end - k), top).pure()) continue;
      best = {k, end};
      best_degree = deg;
    }
    Tree s = Tree::from_code(code.substr(best.first, best.second - best.first));
    auto [s1, s2] = s.children();

    if (best_degree == 2) {
      Generator a = s1.generator(), b = s2.generator();
      if (a.j() == top) {
        // s = [x(i,n), x(l,m)] with m < n.
        int i = a.i();
        if (b.i() == i || b.j() == i) {
          int other = b.i() == i ? b.j() : b.i();
          emit(detail::splice(code, best, Tree::node(Tree::leaf(Generator::pair(other, top)), Tree::leaf(Generator::pair(i, top)))), coeff);
        }
      } else {
        // s = [x(i,j), x(l,n)] with i, j < n.
        int l = b.i();
        if (a.i() == l || a.j() == l) {
          int other = a.i() == l ? a.j() : a.i();
          emit(detail::splice(code, best, Tree::node(Tree::leaf(Generator::pair(l, top)), Tree::leaf(Generator::pair(other, top)))), coeff);
        }
      }
      continue;
    }

    if (!s1.is_leaf()) {
      auto [x, y] = s1.children();
      emit(detail::splice(code, best, Tree::node(Tree::node(s2, y), x)), coeff);
      emit(detail::splice(code, best, Tree::node(Tree::node(x, s2), y)), coeff);
    } else {
      auto [x, y] = s2.children();
      emit(detail::splice(code, best, Tree::node(x, Tree::node(s1, y))), coeff);
      emit(detail::splice(code, best, Tree::node(y, Tree::node(x, s1))), coeff);
    }
  }
  return BraidElement(e.n, std::move(done));
}

// The unique layered representative of e. Brackets involving y vanish,
// lone y(i) pass through; the pure-in-n part is Hallified over layer n and
// the remainder recursively treated as an element of B_(n-1).
inline LayeredForm canonical_form(const BraidElement& e, const HallCache& cache) {
  e.validate();
  LayeredForm out;
  out.n = e.n;
  Combination<Rational> current;
  for (const auto& [t, c] : e.terms) {
    if (t.is_leaf() && t.generator().is_tangent()) {
      out.add_y(t.generator().i(), c);
      continue;
    }
    if (detail::has_tangent(t)) continue;
    current.add(t, c);
  }

  for (int top = e.n; top >= 2 && !current.empty(); --top) {
    BraidElement pure = standardize(BraidElement(top, std::move(current)));
    Combination<Rational> upper, rest;
    for (const auto& [t, c] : pure.terms) {
      if (detail::purity(t.code(), top).top_leaves > 0)
        upper.add(t, c);
      else
        rest.add(t, c);
    }
    if (!upper.empty()) out.add_layer(top, hallify(LieElement(Alphabet::layer(top), std::move(upper)), cache.layer(top)));
    current = std::move(rest);
  }
  if (!current.empty()) throw InvariantError("residual terms below layer 2: " + format_combination(current));
  return out;
}

namespace detail {

using LeafMap = std::function<Combination<Rational>(const Generator&)>;

inline Combination<Rational> map_tree(const Tree& t, const LeafMap& f) {
  if (t.is_leaf()) return f(t.generator());
  auto [l, r] = t.children();
  Combination<Rational> a = map_tree(l, f);
  if (a.empty()) return {};
  Combination<Rational> b = map_tree(r, f);
  if (b.empty()) return {};
  return bracket_terms(a, b);
}

inline BraidElement map_element(const BraidElement& e, int target_n, const LeafMap& f) {
  Combination<Rational> out;
  for (const auto& [t, c] : e.terms) {
    Combination<Rational> img = map_tree(t, f);
    img *= c;
    out += img;
  }
  return BraidElement(target_n, std::move(out));
}

inline Combination<Rational> leaf(const Generator& g) { return Combination<Rational>(Tree::leaf(g)); }

}  // namespace detail

// The coface map on generators, for ambient n and 0 <= l <= n+1:
//   x(i,j) -> x(s(i),s(j))                    when i, j != l
//   x(l,j) -> x(l,s(j)) + x(l+1,s(j))         (and symmetrically for j = l)
//   y(i)   -> y(s(i))                          when i != l
//   y(l)   -> x(l,l+1) + y(l) + y(l+1)
// with s(i) = i for i < l and i + 1 for i > l. l = n+1 is the inclusion.
inline Combination<Rational> coface_generator(int l, const Generator& g) {
  auto shift = [l](int i) { return i < l ? i : i + 1; };
  Combination<Rational> r;
  if (g.is_pair()) {
    int i = g.i(), j = g.j();
    if (i != l && j != l) return detail::leaf(Generator::pair(shift(i), shift(j)));
    int other = i == l ? j : i;
    r.add(Tree::leaf(Generator::pair(l, shift(other))), 1);
    r.add(Tree::leaf(Generator::pair(l + 1, shift(other))), 1);
    return r;
  }
  if (g.is_tangent()) {
    int i = g.i();
    if (i != l) return detail::leaf(Generator::tangent(shift(i)));
    r.add(Tree::leaf(Generator::pair(l, l + 1)), 1);
    r.add(Tree::leaf(Generator::tangent(l)), 1);
    r.add(Tree::leaf(Generator::tangent(l + 1)), 1);
    return r;
  }
  throw ArgumentError("coface applied to letter " + g.to_string());
}

// Raw coface: the homomorphism applied tree by tree, without rewriting.
inline BraidElement coface(int l, const BraidElement& e) {
  if (l < 0 || l > e.n + 1) throw ArgumentError("coface index " + std::to_string(l) + " outside 0.." + std::to_string(e.n + 1));
  if (e.n + 1 > kMaxStrands) throw ArgumentError("coface would exceed the maximum strand count");
  return detail::map_element(e, e.n + 1, [l](const Generator& g) { return coface_generator(l, g); });
}

inline BraidElement coface(int l, const LayeredForm& f) { return coface(l, f.to_braid()); }

// The codegeneracy map forgetting strand l (1 <= l <= n): generators that
// mention l die, the others are relabelled i -> i for i < l, i - 1 for i > l.
inline BraidElement codegeneracy(int l, const BraidElement& e) {
  if (l < 1 || l > e.n) throw ArgumentError("codegeneracy index " + std::to_string(l) + " outside 1.." + std::to_string(e.n));
  if (e.n == 1) {
    // BT_0 is a point; everything maps to zero.
    return BraidElement{};
  }
  auto down = [l](int i) { return i < l ? i : i - 1; };
  return detail::map_element(e, e.n - 1, [&](const Generator& g) -> Combination<Rational> {
    if (g.is_pair()) {
      if (g.i() == l || g.j() == l) return {};
      return detail::leaf(Generator::pair(down(g.i()), down(g.j())));
    }
    if (g.is_tangent()) {
      if (g.i() == l) return {};
      return detail::leaf(Generator::tangent(down(g.i())));
    }
    throw ArgumentError("codegeneracy applied to letter " + g.to_string());
  });
}

// Lie bracket of two canonical forms, returned in canonical form.
inline LayeredForm bracket(const LayeredForm& a, const LayeredForm& b, const HallCache& cache) {
  if (a.n != b.n) throw ArgumentError("bracket of layered forms over different strand counts");
  BraidElement ea = a.to_braid(), eb = b.to_braid();
  return canonical_form(BraidElement(a.n, bracket_terms(ea.terms, eb.terms)), cache);
}

// Coface computed recursively down the tree, bringing every partial result
// to canonical form before it is bracketed further: leaves are mapped
// directly, and the image of [t1,t2] is the canonical bracket of the images
// of t1 and t2.
inline LayeredForm coface_canonical(int l, const BraidElement& e, const HallCache& cache) {
  if (l < 0 || l > e.n + 1) throw ArgumentError("coface index " + std::to_string(l) + " outside 0.." + std::to_string(e.n + 1));
  const int target = e.n + 1;
  std::unordered_map<Tree, LayeredForm> memo;
  std::function<const LayeredForm&(const Tree&)> image = [&](const Tree& t) -> const LayeredForm& {
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    LayeredForm f;
    if (t.is_leaf()) {
      f = canonical_form(BraidElement(target, coface_generator(l, t.generator())), cache);
    } else {
      auto [t1, t2] = t.children();
      LayeredForm a = image(t1);
      const LayeredForm& b = image(t2);
      f = bracket(a, b, cache);
    }
    return memo.emplace(t, std::move(f)).first->second;
  };

  LayeredForm out;
  out.n = target;
  for (const auto& [t, c] : e.terms) {
    LayeredForm f = image(t);
    f *= c;
    out += f;
  }
  return out;
}

}  // namespace braidss
