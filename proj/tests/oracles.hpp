#pragma once

// Independent reference implementations used only by the tests. None of
// them goes through the rewriting code they are used to check.

#include "braidss/braidss.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using braidss::Generator;
using braidss::Rational;
using braidss::Tree;

// Noncommutative polynomial: word (string of generator codes) -> coefficient.
using Poly = std::map<std::string, Rational>;

inline void add_to(Poly& p, const std::string& w, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[w];
  slot += c;
  if (slot == 0) p.erase(w);
}

inline Poly scaled(const Poly& p, const Rational& c) {
  Poly r;
  for (const auto& [w, v] : p) add_to(r, w, v * c);
  return r;
}

inline Poly plus(Poly a, const Poly& b) {
  for (const auto& [w, v] : b) add_to(a, w, v);
  return a;
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [wa, va] : a)
    for (const auto& [wb, vb] : b) add_to(r, wa + wb, va * vb);
  return r;
}

inline Poly commutator(const Poly& a, const Poly& b) { return plus(times(a, b), scaled(times(b, a), -1)); }

inline Poly word(const Generator& g) { return Poly{{std::string(1, static_cast<char>(g.code())), Rational(1)}}; }

// [x,y] -> xy - yx in the free associative algebra. Injective on the free
// Lie algebra, so two Lie elements agree iff their expansions do.
inline Poly expand(const Tree& t) {
  if (t.is_leaf()) return word(t.generator());
  auto [l, r] = t.children();
  return commutator(expand(l), expand(r));
}

template <class Terms>
Poly expand(const Terms& terms) {
  Poly p;
  for (const auto& [t, c] : terms) p = plus(p, scaled(expand(t), c));
  return p;
}

// The braid Lie algebra on n strands acts by derivations on the free Lie
// algebra on z(1..n) (these are the generators x(k,n+1) one level up):
//   x(i,j): z(i) -> [z(i),z(j)], z(j) -> [z(j),z(i)], other z -> 0.
// The action respects every defining relation, so an element and its
// canonical form must act identically. y generators act by zero.
class DerivationRep {
 public:
  explicit DerivationRep(int n) : n_(n) {}

  static Generator z(int k, int n) { return Generator::pair(k, n + 1); }

  Poly apply_generator(const Generator& g, const Poly& p) const {
    if (!g.is_pair()) return {};
    Poly out;
    for (const auto& [w, c] : p)
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        Generator letter = Generator::from_code(static_cast<unsigned char>(w[pos]));
        int k = letter.i();
        int other = k == g.i() ? g.j() : (k == g.j() ? g.i() : 0);
        if (other == 0) continue;
        Poly image = commutator(word(z(k, n_)), word(z(other, n_)));
        for (const auto& [iw, ic] : image) add_to(out, w.substr(0, pos) + iw + w.substr(pos + 1), c * ic);
      }
    return out;
  }

  Poly apply(const Tree& t, const Poly& p) const {
    if (t.is_leaf()) return apply_generator(t.generator(), p);
    auto [l, r] = t.children();
    return plus(apply(l, apply(r, p)), scaled(apply(r, apply(l, p)), -1));
  }

  // The action on every z(k), concatenated into one signature.
  template <class Terms>
  std::vector<Poly> signature(const Terms& terms) const {
    std::vector<Poly> sig;
    for (int k = 1; k <= n_; ++k) {
      Poly zk = word(z(k, n_));
      Poly acc;
      for (const auto& [t, c] : terms) acc = plus(acc, scaled(apply(t, zk), c));
      sig.push_back(acc);
    }
    return sig;
  }

 private:
  int n_;
};

// Counting by enumeration.

inline long long brute_surjections(int d, int n) {
  long long count = 0, total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  for (long long f = 0; f < total; ++f) {
    std::vector<bool> hit(n, false);
    long long x = f;
    for (int i = 0; i < d; ++i, x /= n) hit[x % n] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++count;
  }
  return count;
}

inline bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<int> rot(w.begin() + s, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + s);
    if (!(w < rot)) return false;
  }
  return true;
}

// Lyndon words of length d on m letters; when all_letters is set, only
// those using every letter.
inline long long lyndon_count(int m, int d, bool all_letters = false) {
  long long count = 0, total = 1;
  for (int i = 0; i < d; ++i) total *= m;
  std::vector<int> w(d);
  for (long long f = 0; f < total; ++f) {
    long long x = f;
    std::vector<bool> hit(m, false);
    for (int i = d - 1; i >= 0; --i, x /= m) {
      w[i] = static_cast<int>(x % m);
      hit[w[i]] = true;
    }
    if (all_letters && !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) continue;
    if (is_lyndon(w)) ++count;
  }
  return count;
}

inline int brute_moebius(long long n) {
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  return n > 1 ? -sign : sign;
}

// Random inputs.

inline Tree random_tree(std::mt19937_64& rng, const std::vector<Generator>& gens, int degree) {
  if (degree == 1) return Tree::leaf(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]);
  int left = std::uniform_int_distribution<int>(1, degree - 1)(rng);
  return Tree::node(random_tree(rng, gens, left), random_tree(rng, gens, degree - left));
}

inline std::vector<Generator> pair_generators(int n) {
  std::vector<Generator> g;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) g.push_back(Generator::pair(i, j));
  return g;
}

inline std::vector<Generator> letter_generators(int m) {
  std::vector<Generator> g;
  for (int a = 0; a < m; ++a) g.push_back(Generator::letter(a));
  return g;
}

// A small random combination of x-trees on n strands with degree <= max_degree.
inline braidss::BraidElement random_braid(std::mt19937_64& rng, int n, int max_degree, int terms = 3) {
  auto gens = pair_generators(n);
  braidss::Combination<Rational> c;
  for (int k = 0; k < terms; ++k) {
    int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
    c.add(random_tree(rng, gens, d), Rational(std::uniform_int_distribution<int>(-3, 3)(rng)));
  }
  return braidss::BraidElement(n, c);
}

}  // namespace oracle
