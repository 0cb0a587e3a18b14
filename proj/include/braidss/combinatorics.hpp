#pragma once

#include "braidss/error.hpp"
#include "braidss/rational.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace braidss {

// Number-theoretic Moebius function.
inline int moebius(long long j) {
  if (j < 1) throw ArgumentError("moebius is defined for positive integers only");
  int sign = 1;
  for (long long p = 2; p * p <= j; ++p) {
    if (j % p) continue;
    j /= p;
    if (j % p == 0) return 0;
    sign = -sign;
  }
  if (j > 1) sign = -sign;
  return sign;
}

inline std::vector<long long> divisors(long long d) {
  std::vector<long long> out;
  for (long long j = 1; j <= d; ++j)
    if (d % j == 0) out.push_back(j);
  return out;
}

inline Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Surjections from a d-element set onto an n-element set, by
// inclusion-exclusion: sum_i (-1)^i C(n,i) (n-i)^d.
inline Integer surjections(long long d, long long n) {
  if (d < 0 || n < 0) throw ArgumentError("surjection count needs non-negative arguments");
  Integer total = 0;
  for (long long i = 0; i <= n; ++i) {
    Integer term = binomial(n, i) * boost::multiprecision::pow(Integer(n - i), static_cast<unsigned>(d));
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

// Dimension of the degree-d part of the free Lie algebra on m generators.
inline Integer witt_count(long long m, long long d) {
  if (m < 1 || d < 1) throw ArgumentError("witt_count needs m >= 1 and d >= 1");
  Integer sum = 0;
  for (long long j : divisors(d)) sum += moebius(j) * boost::multiprecision::pow(Integer(m), static_cast<unsigned>(d / j));
  if (sum % d != 0) throw InvariantError("Witt sum not divisible by the degree");
  return sum / d;
}

// Number of degree-d Hall trees on n letters in which every letter occurs:
// (1/d) sum_{j|d} mu(j) Surj(d/j, n).
inline Integer reduced_rank_formula(long long d, long long n) {
  if (d < 1 || n < 1) throw ArgumentError("reduced_rank_formula needs d >= 1 and n >= 1");
  Integer sum = 0;
  for (long long j : divisors(d)) sum += moebius(j) * surjections(d / j, n);
  if (sum % d != 0) throw InvariantError("reduced rank sum not divisible by the degree");
  return sum / d;
}

// sum_{l=1}^m (-1)^l Surj(m, l); equals (-1)^m.
inline Integer alternating_surjection_identity(long long m) {
  if (m < 1) throw ArgumentError("alternating_surjection_identity needs m >= 1");
  Integer sum = 0;
  for (long long l = 1; l <= m; ++l) {
    if (l % 2) sum -= surjections(m, l);
    else sum += surjections(m, l);
  }
  return sum;
}

// Memoized counts, filled on demand.
class CountTable {
 public:
  Integer surjections(long long d, long long n) const { return lookup(surj_, {d, n}, [&] { return braidss::surjections(d, n); }); }
  Integer witt(long long m, long long d) const { return lookup(witt_, {m, d}, [&] { return witt_count(m, d); }); }
  Integer reduced_rank(long long d, long long n) const { return lookup(rank_, {d, n}, [&] { return reduced_rank_formula(d, n); }); }

 private:
  using Key = std::pair<long long, long long>;

  template <class F>
  Integer lookup(std::map<Key, Integer>& table, Key key, F&& compute) const {
    {
      std::lock_guard lock(mu_);
      auto it = table.find(key);
      if (it != table.end()) return it->second;
    }
    Integer v = compute();
    std::lock_guard lock(mu_);
    table.emplace(key, v);
    return v;
  }

  mutable std::mutex mu_;
  mutable std::map<Key, Integer> surj_, witt_, rank_;
};

}  // namespace braidss
