#pragma once

#include "braidss/braid.hpp"
#include "braidss/combinatorics.hpp"
#include "braidss/golden.hpp"
#include "braidss/hall.hpp"
#include "braidss/linalg.hpp"
#include "braidss/spectral.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace braidss {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyConfig {
  int k = 3;
  int d_max = 6;
  std::optional<std::uint64_t> hall_seed;
  unsigned threads = default_threads();
};

namespace detail {

inline std::string cell_name(int d, int n) { return "(" + std::to_string(d) + "," + std::to_string(n) + ")"; }

template <class F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult r{name, true, {}};
  try {
    r.detail = body();
    // A body reports failure by returning a message that starts with "FAIL".
    if (r.detail.rfind("FAIL", 0) == 0) {
      r.passed = false;
      r.detail = r.detail.substr(std::min<std::size_t>(r.detail.size(), 5));
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

inline std::string fail(const std::string& why) { return "FAIL " + why; }

}  // namespace detail

// ---- individual checks, usable on their own -------------------------------

inline CheckResult check_hall_golden() {
  return detail::run_check("hall-golden", [] {
    HallSet h = generate_hall_set(Alphabet::letters(2), 5);
    const auto& want = golden::hall_ab_5();
    if (h.size() != want.size()) return detail::fail("expected " + std::to_string(want.size()) + " trees, got " + std::to_string(h.size()));
    for (std::size_t k = 0; k < want.size(); ++k)
      if (format_tree(h.trees()[k]) != want[k]) return detail::fail("position " + std::to_string(k) + ": " + format_tree(h.trees()[k]) + " != " + want[k]);
    return std::string("14-element list on {a,b} through degree 5 matches");
  });
}

// Counts against the Witt formula and the Hall conditions checked directly.
inline CheckResult check_hall_sets(int max_letters, int max_degree, std::optional<std::uint64_t> seed = std::nullopt) {
  return detail::run_check("hall-counts", [=] {
    for (int m = 1; m <= max_letters; ++m) {
      HallSet h = generate_hall_set(Alphabet::letters(m), max_degree, seed);
      for (int d = 1; d <= max_degree; ++d) {
        Integer got = static_cast<long long>(h.of_degree(d).size());
        if (got != witt_count(m, d))
          return detail::fail("m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " + got.str() + " trees vs Witt " + witt_count(m, d).str());
      }
      std::string why = hall_set_violation(h);
      if (!why.empty()) return detail::fail("m=" + std::to_string(m) + ": " + why);
    }
    return "m <= " + std::to_string(max_letters) + ", d <= " + std::to_string(max_degree) + ": counts equal Witt numbers, Hall conditions hold";
  });
}

inline CheckResult check_formula_dims(int d_max, const HallCache& cache) {
  return detail::run_check("formula-dims", [&] {
    std::size_t cells = 0;
    for (int d = 1; d <= d_max; ++d)
      for (int n = 2; n <= d + 1; ++n) {
        Integer got = static_cast<long long>(reduced_basis(d, n, cache).dim());
        Integer want = reduced_rank_formula(d, n - 1);
        if (got != want) return detail::fail("M" + detail::cell_name(d, n) + " has " + got.str() + " basis trees, R(d,n-1) = " + want.str());
        ++cells;
      }
    return "|M(d,n)| = R(d,n-1) on " + std::to_string(cells) + " cells, d <= " + std::to_string(d_max);
  });
}

inline CheckResult check_vanishing_line(int k, const Page& e1) {
  return detail::run_check("vanishing-line", [&] {
    for (const Cell& c : e1.cells) {
      if (c.q < -c.p * (k - 1) + 2 - k && c.dim != 0) return detail::fail("nonzero cell below the line at " + detail::cell_name(c.d, c.n));
      if (c.d < c.n - 1 && c.dim != 0) return detail::fail("M" + detail::cell_name(c.d, c.n) + " nonzero with d < n-1");
    }
    return std::string("no cell below q = -p(k-1)+2-k is nonzero");
  });
}

inline CheckResult check_euler(const Page& e1) {
  return detail::run_check("euler-characteristic", [&] {
    std::ostringstream s;
    for (int d = 1; d <= e1.d_max; ++d) {
      long long chi = euler_characteristic(e1, d);
      if (d >= 3 && chi != 0) return detail::fail("chi(M(" + std::to_string(d) + ",*)) = " + std::to_string(chi));
      s << " chi(" << d << ")=" << chi;
    }
    for (int d = 3; d <= 10; ++d) {
      Integer chi = 0;
      for (int n = 2; n <= d + 1; ++n) chi += (n % 2 ? -1 : 1) * reduced_rank_formula(d, n - 1);
      if (chi != 0) return detail::fail("formula-level chi(" + std::to_string(d) + ") = " + chi.str());
    }
    for (int m = 1; m <= 10; ++m)
      if (alternating_surjection_identity(m) != (m % 2 ? -1 : 1)) return detail::fail("alternating surjection identity fails at m=" + std::to_string(m));
    return "rows d >= 3 have zero Euler characteristic;" + s.str();
  });
}

inline CheckResult check_chain_condition(const Page& e1) {
  return detail::run_check("chain-condition", [&] {
    std::size_t products = 0;
    for (const auto& [key, b] : e1.boundaries) {
      auto next = e1.boundaries.find({key.first, key.second + 1});
      if (next == e1.boundaries.end()) continue;
      if (!multiply(next->second.matrix, b.matrix).is_zero()) return detail::fail("d1 d1 != 0 starting at M" + detail::cell_name(key.first, key.second));
      ++products;
    }
    return "d1 * d1 = 0 for " + std::to_string(products) + " composable pairs";
  });
}

// Recomputes every d1 image and checks that it lies in M(d,n+1).
inline CheckResult check_image_in_reduced(int d_max, const HallCache& cache, unsigned threads) {
  return detail::run_check("image-in-M", [&] {
    struct Item {
      Tree t;
      int n;
    };
    std::vector<Item> items;
    for (int d = 1; d <= d_max; ++d)
      for (int n = 1; n <= d + 1; ++n)
        for (const Tree& t : reduced_basis(d, n, cache).basis) items.push_back({t, n});
    std::vector<std::string> problems(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) { problems[i] = d1_image_violation(d1_image(items[i].t, items[i].n, cache), items[i].n); });
    for (std::size_t i = 0; i < items.size(); ++i)
      if (!problems[i].empty()) return detail::fail("d1(" + format_tree(items[i].t) + "): " + problems[i]);
    return "all " + std::to_string(items.size()) + " basis images land in M(d,n+1)";
  });
}

inline CheckResult check_codegeneracy_kernel(int d_max, const HallCache& cache) {
  return detail::run_check("codegeneracy-kernel", [&] {
    std::size_t checked = 0;
    for (int d = 1; d <= d_max; ++d)
      for (int n = 1; n <= d + 1; ++n)
        for (const Tree& t : reduced_basis(d, n, cache).basis)
          for (int l = 1; l <= n; ++l) {
            BraidElement img = codegeneracy(l, BraidElement::of(n, t));
            if (n > 1 && !canonical_form(img, cache).is_zero()) return detail::fail("phi^" + std::to_string(l) + "(" + format_tree(t) + ") != 0");
            if (n == 1 && !img.terms.empty()) return detail::fail("phi^1(y(1)) != 0");
            ++checked;
          }
    return std::to_string(checked) + " codegeneracy images vanish, d <= " + std::to_string(d_max);
  });
}

inline CheckResult check_rank_crosscheck(const Page& e1, std::size_t max_side = 50) {
  return detail::run_check("rank-crosscheck", [&] {
    std::size_t compared = 0;
    for (const auto& [key, b] : e1.boundaries) {
      if (b.matrix.rows() > max_side || b.matrix.cols() > max_side) continue;
      std::size_t g = rank_gaussian(b.matrix);
      if (g != b.rank) return detail::fail("M" + detail::cell_name(key.first, key.second) + ": Bareiss " + std::to_string(b.rank) + " vs Gauss " + std::to_string(g));
      ++compared;
    }
    return "Bareiss and Gaussian ranks agree on " + std::to_string(compared) + " matrices up to " + std::to_string(max_side) + "x" +
           std::to_string(max_side);
  });
}

inline CheckResult check_worked_boundary(const Page& e1) {
  return detail::run_check("worked-boundary", [&] {
    if (e1.d_max < 3) return std::string("skipped (d_max < 3)");
    const Boundary& b = e1.boundaries.at({3, 3});
    std::vector<std::string> rows, cols;
    for (const Tree& t : b.rows) rows.push_back(format_tree(t));
    for (const Tree& t : b.cols) cols.push_back(format_tree(t));
    if (rows != golden::worked_rows() || cols != golden::worked_cols()) return detail::fail("basis labels differ");
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        if (b.matrix.at(r, c) != golden::worked_matrix()[r][c]) return detail::fail("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + to_string(b.matrix.at(r, c)));
    if (b.rank != 1) return detail::fail("rank " + std::to_string(b.rank));
    return std::string("d1: M(3,3) -> M(3,4) is [[0,2],[0,1]], rank 1");
  });
}

inline CheckResult check_golden_table(const std::string& name, const Page& page, const std::map<std::pair<int, int>, std::size_t>& table) {
  return detail::run_check(name, [&] {
    int top = std::min(page.d_max, golden::kMaxDegree);
    std::size_t cells = 0;
    for (const Cell& c : page.cells) {
      if (c.d > top) continue;
      std::size_t want = golden::lookup(table, c.d, c.n);
      if (c.dim != want)
        return detail::fail("cell (p,q) = (" + std::to_string(c.p) + "," + std::to_string(c.q) + ") has dim " + std::to_string(c.dim) + ", expected " +
                            std::to_string(want));
      ++cells;
    }
    return std::to_string(cells) + " cells match for d <= " + std::to_string(top);
  });
}

inline CheckResult check_e2_euler(const Page& e2) {
  return detail::run_check("e2-row-euler", [&] {
    for (int d = 3; d <= e2.d_max; ++d)
      if (euler_characteristic(e2, d) != 0) return detail::fail("E2 row d=" + std::to_string(d) + " has Euler characteristic " + std::to_string(euler_characteristic(e2, d)));
    return std::string("E2 rows d >= 3 have zero Euler characteristic");
  });
}

// Ranks and E2 dimensions under a perturbed Hall order must equal those
// under the standard order.
inline CheckResult check_hall_robustness(const Page& e1, std::uint64_t seed, unsigned threads) {
  return detail::run_check("hall-seed-robustness", [&] {
    Page other = e1_page(e1.k, e1.d_max, PageOptions{seed, threads});
    Page e2a = e2_from_e1(e1), e2b = e2_from_e1(other);
    std::size_t changed_bases = 0;
    for (const auto& [key, b] : e1.boundaries) {
      const Boundary& o = other.boundaries.at(key);
      if (o.rank != b.rank)
        return detail::fail("seed " + std::to_string(seed) + ": rank of d1 at M" + detail::cell_name(key.first, key.second) + " is " + std::to_string(o.rank) + " vs " +
                            std::to_string(b.rank));
      if (o.cols != b.cols) ++changed_bases;
    }
    if (e2a.cells != e2b.cells) return detail::fail("seed " + std::to_string(seed) + ": E2 dimensions differ");
    return "seed " + std::to_string(seed) + ": all ranks and E2 dimensions unchanged (" + std::to_string(changed_bases) + " source bases reordered)";
  });
}

// The full invariant suite behind `braidss verify`.
inline std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  require_odd_k(config.k);
  if (config.d_max < 1) throw ArgumentError("d_max must be at least 1");
  std::vector<CheckResult> results;
  results.push_back(check_hall_golden());
  results.push_back(check_hall_sets(4, std::max(config.d_max, 5)));

  HallCache cache(config.d_max);
  results.push_back(check_formula_dims(config.d_max, cache));
  results.push_back(check_codegeneracy_kernel(std::min(config.d_max, 5), cache));

  Page e1;
  CheckResult build = detail::run_check("image-in-M", [&] {
    e1 = e1_page(config.k, config.d_max, PageOptions{std::nullopt, config.threads});
    std::size_t columns = 0;
    for (const auto& [key, b] : e1.boundaries) columns += b.cols.size();
    return "all " + std::to_string(columns) + " basis images land in M(d,n+1)";
  });
  results.push_back(build);
  if (!build.passed) return results;

  Page e2 = e2_from_e1(e1);
  results.push_back(check_vanishing_line(config.k, e1));
  results.push_back(check_euler(e1));
  results.push_back(check_chain_condition(e1));
  results.push_back(check_rank_crosscheck(e1));
  results.push_back(check_worked_boundary(e1));
  results.push_back(check_golden_table("e1-reference-dims", e1, golden::e1_dims()));
  results.push_back(check_golden_table("e2-reference-dims", e2, golden::e2_dims()));
  results.push_back(check_e2_euler(e2));
  if (config.hall_seed) {
    results.push_back(check_hall_sets(4, std::max(config.d_max, 5), config.hall_seed));
    results.back().name = "hall-counts-seeded";
    results.push_back(check_hall_robustness(e1, *config.hall_seed, config.threads));
  }
  return results;
}

}  // namespace braidss
