#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidss::golden {

// Published reference values, keyed by (d, n). Cells not listed are zero.
// They depend only on (d, n); the bigrading for a given odd k is
// (p, q) = (-n, d(k-1)+1).

inline constexpr int kMaxDegree = 6;

inline const std::map<std::pair<int, int>, std::size_t>& e1_dims() {
  static const std::map<std::pair<int, int>, std::size_t> table{
      {{1, 1}, 1},   {{1, 2}, 1},                                                    //
      {{2, 3}, 1},                                                                   //
      {{3, 3}, 2},   {{3, 4}, 2},                                                    //
      {{4, 3}, 3},   {{4, 4}, 9},   {{4, 5}, 6},                                     //
      {{5, 3}, 6},   {{5, 4}, 30},  {{5, 5}, 48},  {{5, 6}, 24},                     //
      {{6, 3}, 9},   {{6, 4}, 89},  {{6, 5}, 260}, {{6, 6}, 300}, {{6, 7}, 120},
  };
  return table;
}

inline const std::map<std::pair<int, int>, std::size_t>& e2_dims() {
  static const std::map<std::pair<int, int>, std::size_t> table{
      {{2, 3}, 1},                                 //
      {{3, 3}, 1}, {{3, 4}, 1},                    //
      {{5, 3}, 1}, {{5, 5}, 1}, {{5, 6}, 2},       //
      {{6, 6}, 1}, {{6, 7}, 1},
  };
  return table;
}

inline std::size_t lookup(const std::map<std::pair<int, int>, std::size_t>& table, int d, int n) {
  auto it = table.find({d, n});
  return it == table.end() ? 0 : it->second;
}

// Hall set on {a, b} through degree 5, in Hall order.
inline const std::vector<std::string>& hall_ab_5() {
  static const std::vector<std::string> list{
      "a",
      "[a,[[[a,b],b],b]]",
      "[a,[a,[a,[a,b]]]]",
      "[a,[a,[[a,b],b]]]",
      "[a,[[a,b],b]]",
      "[a,[a,[a,b]]]",
      "[a,[a,b]]",
      "[[a,[a,b]],[a,b]]",
      "[a,b]",
      "[[a,b],[[a,b],b]]",
      "[[a,b],b]",
      "[[[a,b],b],b]",
      "[[[[a,b],b],b],b]",
      "b",
  };
  return list;
}

// d1: M(3,3) -> M(3,4) in the Hall bases.
inline const std::vector<std::string>& worked_rows() {
  static const std::vector<std::string> v{"[x(1,4),[x(2,4),x(3,4)]]", "[[x(1,4),x(3,4)],x(2,4)]"};
  return v;
}
inline const std::vector<std::string>& worked_cols() {
  static const std::vector<std::string> v{"[x(1,3),[x(1,3),x(2,3)]]", "[[x(1,3),x(2,3)],x(2,3)]"};
  return v;
}
inline const std::vector<std::vector<int>>& worked_matrix() {
  static const std::vector<std::vector<int>> m{{0, 2}, {0, 1}};
  return m;
}

}  // namespace braidss::golden
