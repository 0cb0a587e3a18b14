#pragma once

#include "braidss/braid.hpp"
#include "braidss/error.hpp"
#include "braidss/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace braidss {

// Hall-tree basis of the reduced E1 entry M(d,n): degree-d Hall trees over
// x(1,n) < ... < x(n-1,n) in which every index 1..n-1 occurs, in Hall order.
// M(1,1) is spanned by y(1).
struct ReducedModule {
  int d = 0;
  int n = 0;
  std::vector<Tree> basis;

  std::size_t dim() const { return basis.size(); }

  std::optional<std::size_t> find(const Tree& t) const {
    auto it = std::find(basis.begin(), basis.end(), t);
    if (it == basis.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
  }
};

// True when every index 1..n-1 appears among the leaves x(i,n).
inline bool covers_all_indices(const Tree& t, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  bool foreign = false;
  t.for_each_leaf([&](const Generator& g) {
    if (g.is_pair() && g.j() == n)
      seen[static_cast<std::size_t>(g.i())] = true;
    else
      foreign = true;
  });
  if (foreign) return false;
  for (int i = 1; i < n; ++i)
    if (!seen[static_cast<std::size_t>(i)]) return false;
  return true;
}

inline ReducedModule reduced_basis(int d, int n, const HallCache& cache) {
  ReducedModule m{d, n, {}};
  if (d < 1 || n < 1) return m;
  if (n == 1) {
    if (d == 1) m.basis.push_back(Tree::leaf(Generator::tangent(1)));
    return m;
  }
  if (d < n - 1) return m;
  if (d > cache.max_degree()) throw ArgumentError("degree " + std::to_string(d) + " beyond the Hall cache's maximum degree");
  for (const Tree& t : cache.layer(n).trees())
    if (t.degree() == d && covers_all_indices(t, n)) m.basis.push_back(t);
  return m;
}

// sum_{l=0}^{n+1} (-1)^l coface(l, t), in canonical form over n+1 strands.
inline LayeredForm d1_image(const Tree& t, int n, const HallCache& cache) {
  BraidElement e = BraidElement::of(n, t);
  LayeredForm out;
  out.n = n + 1;
  for (int l = 0; l <= n + 1; ++l) {
    LayeredForm f = coface_canonical(l, e, cache);
    if (l % 2) f *= Rational(-1);
    out += f;
  }
  return out;
}

// Empty when `image` lies in M(d,n+1): no y part, no layer below n+1, and
// every layer n+1 tree uses all indices. Otherwise describes the residue.
inline std::string d1_image_violation(const LayeredForm& image, int n) {
  if (!image.y.empty()) return "nonzero y part: " + format_layered(image);
  for (const auto& [m, e] : image.layers) {
    if (m != n + 1) return "nonzero layer " + std::to_string(m) + ": " + format_combination(e.terms);
    for (const auto& [t, c] : e.terms)
      if (!covers_all_indices(t, n + 1)) return "tree " + format_tree(t) + " misses an index";
  }
  return {};
}

// d1 of a basis element of M(d,n). Throws InvariantError if the image has
// any component outside M(d,n+1), which would contradict the cancellation
// theorem and signals a bug.
inline LayeredForm d1_apply(const Tree& t, int n, const HallCache& cache) {
  LayeredForm image = d1_image(t, n, cache);
  std::string why = d1_image_violation(image, n);
  if (!why.empty()) throw InvariantError("d1(" + format_tree(t) + ") leaves M(" + std::to_string(t.degree()) + "," + std::to_string(n + 1) + "): " + why);
  return image;
}

// Worker count: BRAIDSS_THREADS when set, else the hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("BRAIDSS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs f(0..count-1) on up to `threads` workers. The first exception thrown
// by any task is rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        try {
          f(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Coordinates of d1 images in the Hall basis of the target module.
inline RationalMatrix coordinates(const std::vector<LayeredForm>& images, const ReducedModule& target) {
  std::unordered_map<Tree, std::size_t> row;
  for (std::size_t k = 0; k < target.basis.size(); ++k) row.emplace(target.basis[k], k);
  RationalMatrix m(target.dim(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& [layer, e] : images[c].layers)
      for (const auto& [t, q] : e.terms) {
        auto it = row.find(t);
        if (it == row.end()) throw InvariantError("d1 image term " + format_tree(t) + " is not a basis element of M(" + std::to_string(target.d) + "," + std::to_string(target.n) + ")");
        m.set(it->second, c, q);
      }
    if (!images[c].y.empty()) throw InvariantError("d1 image has a y component");
  }
  return m;
}

// Matrix of d1: M(d,n) -> M(d,n+1). Columns follow the source basis, rows
// the target basis.
inline RationalMatrix d1_matrix(int d, int n, const HallCache& cache, unsigned threads = 1) {
  ReducedModule source = reduced_basis(d, n, cache);
  ReducedModule target = reduced_basis(d, n + 1, cache);
  std::vector<LayeredForm> images(source.dim());
  parallel_for(source.dim(), threads, [&](std::size_t k) { images[k] = d1_apply(source.basis[k], n, cache); });
  return coordinates(images, target);
}

// One bidegree of a page: p = -n, q = d(k-1)+1.
struct Cell {
  int p = 0;
  int q = 0;
  int d = 0;
  int n = 0;
  std::size_t dim = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// d1: M(d,n) -> M(d,n+1) with labelled bases and its rank.
struct Boundary {
  int d = 0;
  int n = 0;
  std::vector<Tree> rows;  // basis of M(d,n+1)
  std::vector<Tree> cols;  // basis of M(d,n)
  RationalMatrix matrix;
  std::size_t rank = 0;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct Page {
  int k = 3;
  int page = 1;
  int d_max = 0;
  std::vector<Cell> cells;                         // ordered by d, then n
  std::map<std::pair<int, int>, Boundary> boundaries;  // (d,n); page 1 only

  std::size_t dim(int d, int n) const {
    for (const Cell& c : cells)
      if (c.d == d && c.n == n) return c.dim;
    return 0;
  }

  friend bool operator==(const Page&, const Page&) = default;
};

inline void require_odd_k(int k) {
  if (k < 3 || k % 2 == 0) throw ArgumentError("k = " + std::to_string(k) + " is not supported: only odd k >= 3 is implemented");
}

inline Cell make_cell(int k, int d, int n, std::size_t dim) { return Cell{-n, d * (k - 1) + 1, d, n, dim}; }

struct PageOptions {
  std::optional<std::uint64_t> hall_seed;
  unsigned threads = default_threads();
};

// E1 page for odd k: the modules M(d,n) for 1 <= d <= d_max, 1 <= n <= d+1,
// with every d1 matrix between them and its rank.
inline Page e1_page(int k, int d_max, const PageOptions& options = {}) {
  require_odd_k(k);
  if (d_max < 1) throw ArgumentError("d_max must be at least 1");
  HallCache cache(d_max, options.hall_seed);

  Page page;
  page.k = k;
  page.page = 1;
  page.d_max = d_max;

  std::map<std::pair<int, int>, ReducedModule> modules;
  for (int d = 1; d <= d_max; ++d)
    for (int n = 1; n <= d + 2; ++n) modules.emplace(std::pair{d, n}, reduced_basis(d, n, cache));

  for (int d = 1; d <= d_max; ++d)
    for (int n = 1; n <= d + 1; ++n) page.cells.push_back(make_cell(k, d, n, modules.at({d, n}).dim()));

  // One task per basis element over the whole page, for load balance.
  struct Task {
    int d, n;
    std::size_t column;
  };
  std::vector<Task> tasks;
  std::map<std::pair<int, int>, std::vector<LayeredForm>> images;
  for (int d = 1; d <= d_max; ++d)
    for (int n = 1; n <= d + 1; ++n) {
      const ReducedModule& src = modules.at({d, n});
      images[{d, n}].resize(src.dim());
      for (std::size_t c = 0; c < src.dim(); ++c) tasks.push_back({d, n, c});
    }
  // Heaviest columns first.
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return std::pair{a.d, a.n} > std::pair{b.d, b.n}; });
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    images.at({t.d, t.n})[t.column] = d1_apply(modules.at({t.d, t.n}).basis[t.column], t.n, cache);
  });

  std::vector<std::pair<int, int>> keys;
  for (int d = 1; d <= d_max; ++d)
    for (int n = 1; n <= d + 1; ++n) {
      Boundary b;
      b.d = d;
      b.n = n;
      b.cols = modules.at({d, n}).basis;
      b.rows = modules.at({d, n + 1}).basis;
      b.matrix = coordinates(images.at({d, n}), modules.at({d, n + 1}));
      page.boundaries.emplace(std::pair{d, n}, std::move(b));
      keys.push_back({d, n});
    }
  parallel_for(keys.size(), options.threads, [&](std::size_t i) {
    Boundary& b = page.boundaries.at(keys[i]);
    b.rank = rank(b.matrix);
  });
  return page;
}

// A single labelled d1 matrix, without building the rest of the page.
inline Boundary compute_boundary(int d, int n, const PageOptions& options = {}) {
  if (d < 1 || n < 1) throw ArgumentError("d and n must be positive");
  HallCache cache(d, options.hall_seed);
  Boundary b;
  b.d = d;
  b.n = n;
  b.cols = reduced_basis(d, n, cache).basis;
  b.rows = reduced_basis(d, n + 1, cache).basis;
  b.matrix = d1_matrix(d, n, cache, options.threads);
  b.rank = rank(b.matrix);
  return b;
}

inline std::size_t boundary_rank(const Page& e1, int d, int n) {
  auto it = e1.boundaries.find({d, n});
  return it == e1.boundaries.end() ? 0 : it->second.rank;
}

// E2 = homology of the E1 rows: dim M(d,n) - rank d1(d,n) - rank d1(d,n-1).
inline Page e2_from_e1(const Page& e1) {
  if (e1.page != 1) throw ArgumentError("E2 must be derived from an E1 page");
  Page page;
  page.k = e1.k;
  page.page = 2;
  page.d_max = e1.d_max;
  for (const Cell& c : e1.cells) {
    std::size_t out = boundary_rank(e1, c.d, c.n);
    std::size_t in = c.n > 1 ? boundary_rank(e1, c.d, c.n - 1) : 0;
    if (out + in > c.dim) throw InvariantError("ranks exceed the dimension at (" + std::to_string(c.d) + "," + std::to_string(c.n) + ")");
    page.cells.push_back(make_cell(e1.k, c.d, c.n, c.dim - out - in));
  }
  return page;
}

inline Page e2_page(int k, int d_max, const PageOptions& options = {}) { return e2_from_e1(e1_page(k, d_max, options)); }

// sum_n (-1)^n dim M(d,n) over the cells of a page.
inline long long euler_characteristic(const Page& page, int d) {
  long long chi = 0;
  for (const Cell& c : page.cells)
    if (c.d == d) chi += (c.n % 2 ? -1 : 1) * static_cast<long long>(c.dim);
  return chi;
}

inline long long euler_characteristic(int d, const HallCache& cache) {
  long long chi = 0;
  for (int n = 1; n <= d + 1; ++n) chi += (n % 2 ? -1 : 1) * static_cast<long long>(reduced_basis(d, n, cache).dim());
  return chi;
}

}  // namespace braidss
