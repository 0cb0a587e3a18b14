#pragma once

#include "braidss/rational.hpp"
#include "braidss/tree.hpp"

#include <map>
#include <string>
#include <utility>

namespace braidss {

// A finite linear combination of trees. Zero coefficients are never stored;
// iteration order is the syntactic tree order, so output is deterministic.
template <class Scalar = Rational>
class Combination {
 public:
  using Map = std::map<Tree, Scalar>;

  Combination() = default;
  Combination(const Tree& t, Scalar c = Scalar(1)) { add(t, std::move(c)); }

  void add(const Tree& t, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coefficient(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  Combination& operator+=(const Combination& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }

  Combination& operator-=(const Combination& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }

  Combination& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
  friend Combination operator-(Combination a) { return a *= Scalar(-1); }

  // The bilinear product [a, b] term by term, without any rewriting.
  friend Combination bracket_terms(const Combination& a, const Combination& b) {
    Combination r;
    for (const auto& [ta, ca] : a.terms_)
      for (const auto& [tb, cb] : b.terms_) r.add(Tree::node(ta, tb), ca * cb);
    return r;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

// "2*[a,b] - [a,[a,b]]", or "0" for the empty combination.
template <class Scalar>
std::string format_combination(const Combination<Scalar>& e) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : e) {
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += to_string(mag) + "*";
    s += format_tree(t);
    first = false;
  }
  return s;
}

}  // namespace braidss
