#pragma once

#include "braidss/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace braidss {

// Largest strand index representable in a tree code.
inline constexpr int kMaxStrands = 16;

// A leaf label. Letters a..z serve abstract free Lie algebras; x(i,j) and
// y(i) are the braid generators. Each generator has a one-byte code so that
// trees can be stored as short prefix strings.
class Generator {
 public:
  enum class Kind : std::uint8_t { Letter, Pair, Tangent };

  static Generator letter(int index) {
    if (index < 0 || index >= 26) throw ArgumentError("letter index out of range: " + std::to_string(index));
    return Generator(Kind::Letter, index, 0);
  }

  static Generator letter(char c) {
    if (c < 'a' || c > 'z') throw ArgumentError(std::string("not a letter generator: ") + c);
    return letter(c - 'a');
  }

  // x(i,j) = x(j,i); the pair is stored with i < j.
  static Generator pair(int i, int j) {
    if (i == j) throw ArgumentError("x(i,i) is not a generator (i = " + std::to_string(i) + ")");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > kMaxStrands) throw ArgumentError("strand index out of range in x(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return Generator(Kind::Pair, i, j);
  }

  static Generator tangent(int i) {
    if (i < 1 || i > kMaxStrands) throw ArgumentError("strand index out of range in y(" + std::to_string(i) + ")");
    return Generator(Kind::Tangent, i, 0);
  }

  Kind kind() const { return kind_; }
  bool is_letter() const { return kind_ == Kind::Letter; }
  bool is_pair() const { return kind_ == Kind::Pair; }
  bool is_tangent() const { return kind_ == Kind::Tangent; }

  // For pairs: i < j. For tangents: i. For letters: the letter index.
  int i() const { return i_; }
  int j() const { return j_; }

  // Largest strand index mentioned (0 for letters).
  int max_index() const { return kind_ == Kind::Pair ? j_ : (kind_ == Kind::Tangent ? i_ : 0); }

  unsigned char code() const {
    switch (kind_) {
      case Kind::Letter: return static_cast<unsigned char>(1 + i_);
      case Kind::Pair: return static_cast<unsigned char>(32 + (j_ - 1) * (j_ - 2) / 2 + (i_ - 1));
      case Kind::Tangent: return static_cast<unsigned char>(160 + i_ - 1);
    }
    return 0;
  }

  static Generator from_code(unsigned char c) {
    if (c >= 1 && c <= 26) return Generator(Kind::Letter, c - 1, 0);
    if (c >= 160 && c < 160 + kMaxStrands) return Generator(Kind::Tangent, c - 160 + 1, 0);
    if (c >= 32 && c < 160) {
      int idx = c - 32;
      int j = 2;
      while ((j) * (j - 1) / 2 <= idx) ++j;
      int i = idx - (j - 1) * (j - 2) / 2 + 1;
      if (j <= kMaxStrands) return Generator(Kind::Pair, i, j);
    }
    throw ParseError("invalid generator code " + std::to_string(static_cast<int>(c)));
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Letter: return std::string(1, static_cast<char>('a' + i_));
      case Kind::Pair: return "x(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
      case Kind::Tangent: return "y(" + std::to_string(i_) + ")";
    }
    return {};
  }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(Kind k, int i, int j) : kind_(k), i_(static_cast<std::int8_t>(i)), j_(static_cast<std::int8_t>(j)) {}

  Kind kind_;
  std::int8_t i_;
  std::int8_t j_;
};

// An ordered alphabet. Position in the list is the generator order.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<Generator> letters) : letters_(std::move(letters)) {
    for (std::size_t a = 0; a < letters_.size(); ++a)
      for (std::size_t b = a + 1; b < letters_.size(); ++b)
        if (letters_[a] == letters_[b]) throw ArgumentError("duplicate generator " + letters_[a].to_string() + " in alphabet");
  }

  // a, b, c, ... (m letters).
  static Alphabet letters(int m) {
    if (m < 1 || m > 26) throw ArgumentError("letter alphabet size must be in 1..26");
    std::vector<Generator> g;
    for (int a = 0; a < m; ++a) g.push_back(Generator::letter(a));
    return Alphabet(std::move(g));
  }

  // x(1,m) < x(2,m) < ... < x(m-1,m): the free generators of layer m.
  static Alphabet layer(int m) {
    if (m < 2 || m > kMaxStrands) throw ArgumentError("layer index must be in 2.." + std::to_string(kMaxStrands));
    std::vector<Generator> g;
    for (int i = 1; i < m; ++i) g.push_back(Generator::pair(i, m));
    return Alphabet(std::move(g));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool contains(const Generator& g) const { return std::find(letters_.begin(), letters_.end(), g) != letters_.end(); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t a = 0; a < letters_.size(); ++a) {
      if (a) s += ",";
      s += letters_[a].to_string();
    }
    return s + "}";
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> letters_;
};

}  // namespace braidss
