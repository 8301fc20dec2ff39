#pragma once

// Skew shapes skyt(a,i,b) and their strictly increasing fillings.
//
// The shape has i+1 columns: a leftmost column of height a, then i-1 columns
// of height 2, then a rightmost column of height b. The two middle rows (the
// "band") run through every column; they are the TOP two cells of the left
// column and the BOTTOM two cells of the right column, so the left column
// hangs a-2 cells below the band and the right column rises b-2 cells above
// it. A legal filling places 1..a+b+2i-2 with rows increasing left to right
// and columns increasing top to bottom.
//
// Counting conventions for non-geometric parameters:
//   skyt(a,0,b) = 1;  skyt(a,i,b) = 0 if i > 0 and (a < 2 or b < 2);
//   bar_skyt(0,b) = 0; bar_skyt(i,b) = 0 if b < 2 (ambient set already empty).

#include "sparsekl/exactmath.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sparsekl::tableaux {

inline constexpr int kDefaultCellCap = 16;

struct SkytShape {
  int a = 0;
  int i = 0;
  int b = 0;

  bool geometric() const { return a >= 2 && b >= 2 && i >= 1; }
  int cell_count() const { return a + b + 2 * i - 2; }

  // Band rows are 0 and 1; the left column occupies rows 0..a-1 of column 0,
  // middle columns rows {0,1}, the right column rows (2-b)..1 of column i.
  struct Cell {
    int col;
    int row;
  };

  // Canonical cell order: column-major, each column top to bottom.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int r = 0; r < a; ++r) out.push_back({0, r});
    for (int c = 1; c < i; ++c) {
      out.push_back({c, 0});
      out.push_back({c, 1});
    }
    for (int r = 2 - b; r <= 1; ++r) out.push_back({i, r});
    return out;
  }

  int left_top_index() const { return 0; }
  int left_third_index() const { return a >= 3 ? 2 : -1; }  // -1 when absent
  int right_top_index() const { return cell_count() - b; }
  int right_bottom_index() const { return cell_count() - 1; }
};

struct SkytFilling {
  SkytShape shape;
  std::vector<int> entries;  // values in canonical cell order

  // Independent legality check: permutation of 1..N, rows and columns strict.
  bool is_legal() const {
    const int n = shape.cell_count();
    if (static_cast<int>(entries.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    const auto cs = shape.cells();
    auto at = [&](int col, int row) -> int {
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (cs[k].col == col && cs[k].row == row) return entries[k];
      return 0;  // absent
    };
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const int below = at(cs[k].col, cs[k].row + 1);
      if (below != 0 && below <= entries[k]) return false;
      const int right = at(cs[k].col + 1, cs[k].row);
      if (right != 0 && right <= entries[k]) return false;
    }
    return true;
  }
};

namespace detail {

// Backtracking over cells in canonical order with ascending value choice;
// the output is lexicographically sorted on the entry sequence.
inline std::vector<SkytFilling> enumerate_impl(const SkytShape& shape) {
  const auto cs = shape.cells();
  const int n = shape.cell_count();

  // Indices of the up- and left-neighbours of each cell (already placed,
  // since both precede the cell in column-major order).
  std::vector<int> up(cs.size(), -1), left(cs.size(), -1);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      if (cs[j].col == cs[k].col && cs[j].row == cs[k].row - 1) up[k] = static_cast<int>(j);
      if (cs[j].row == cs[k].row && cs[j].col == cs[k].col - 1) left[k] = static_cast<int>(j);
    }

  std::vector<SkytFilling> out;
  std::vector<int> filling(cs.size(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto backtrack = [&](auto&& self, std::size_t k) -> void {
    if (k == cs.size()) {
      out.push_back({shape, filling});
      return;
    }
    int lo = 1;
    if (up[k] >= 0) lo = std::max(lo, filling[static_cast<std::size_t>(up[k])] + 1);
    if (left[k] >= 0) lo = std::max(lo, filling[static_cast<std::size_t>(left[k])] + 1);
    for (int v = lo; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      filling[k] = v;
      self(self, k + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  backtrack(backtrack, 0);
  return out;
}

inline void require_enumerable(int a, int i, int b, int cell_cap) {
  if (a < 2 || b < 2 || i < 1)
    throw validation_error("enumerate_skyt: requires a,b >= 2 and i >= 1");
  if (a + b + 2 * i - 2 > cell_cap)
    throw cap_error("enumerate_skyt: shape with " + std::to_string(a + b + 2 * i - 2) +
                    " cells is too large to enumerate (cap " + std::to_string(cell_cap) + ")");
}

}  // namespace detail

inline std::vector<SkytFilling> enumerate_skyt(int a, int i, int b,
                                               int cell_cap = kDefaultCellCap) {
  detail::require_enumerable(a, i, b, cell_cap);
  return detail::enumerate_impl(SkytShape{a, i, b});
}

// Fillings of skyt(2,i,b) whose left-column top entry is 1.
inline std::vector<SkytFilling> enumerate_bar_skyt(int i, int b,
                                                   int cell_cap = kDefaultCellCap) {
  auto all = enumerate_skyt(2, i, b, cell_cap);
  std::vector<SkytFilling> out;
  for (auto& f : all)
    if (f.entries[static_cast<std::size_t>(f.shape.left_top_index())] == 1)
      out.push_back(std::move(f));
  return out;
}

// Alternating-sum count of legal fillings:
//   skyt(a,i,b) = 1/(i!(a-2)!(a+i-1)) *
//     sum_{k=0}^{b-2} (-1)^k C(a+b+2i-2, b-2-k) (a+2i+k)!(k+1) / ((a+i+k)(i+k+1)!)
// Each term's inner ratio is an integer because a+i+k is one of the factors
// of (a+2i+k)!/(i+k+1)!; the prefactor division is performed once at the end.
inline Integer count_skyt(int a, int i, int b) {
  if (i < 0) throw validation_error("count_skyt: negative i");
  if (i == 0) return 1;
  if (a < 2 || b < 2) return 0;
  Integer sum = 0;
  for (int k = 0; k + 2 <= b; ++k) {
    Integer term = binomial(a + b + 2 * i - 2, b - 2 - k) * (k + 1);
    term *= exact_div(product_range(i + k + 2, a + 2 * i + k), Integer(a + i + k));
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return exact_div(sum, factorial(i) * factorial(a - 2) * (a + i - 1));
}

// Positive-term count, written over a common denominator so the single
// division at the end is exact (the individual summands are not integers):
//   skyt(a,i,b) = C(a+i-2,i) C(a+b+2i-2,b+i-1) *
//     [ sum_k (b+i-k-3)_(b-k-2) (k+1)! (b-2)_(k) (a+i+b-2)_(b-k-2) ]
//     / [ (b-2)! (a+i+b-2)_(b-1) ]
inline Integer count_skyt_positive(int a, int i, int b) {
  if (a < 2 || b < 2 || i < 1)
    throw validation_error("count_skyt_positive: requires a,b >= 2 and i >= 1");
  Integer sum = 0;
  for (int k = 0; k + 2 <= b; ++k) {
    Integer term = falling_factorial(b + i - k - 3, b - k - 2) * factorial(k + 1);
    term *= falling_factorial(b - 2, k);
    term *= falling_factorial(a + i + b - 2, b - k - 2);
    sum += term;
  }
  Integer numerator = binomial(a + i - 2, i) * binomial(a + b + 2 * i - 2, b + i - 1) * sum;
  Integer denominator = factorial(b - 2) * falling_factorial(a + i + b - 2, b - 1);
  return exact_div(numerator, denominator);
}

// Single closed form: bar_skyt(i,b) = 2(b+2i-1)! / ((i+1)!(i-1)!(b-2)!(b+i)(b+i-2)).
inline Integer count_bar_skyt(int i, int b) {
  if (i < 0) throw validation_error("count_bar_skyt: negative i");
  if (i == 0 || b < 2) return 0;
  Integer numerator = 2 * factorial(b + 2 * i - 1);
  Integer denominator =
      factorial(i + 1) * factorial(i - 1) * factorial(b - 2) * (b + i) * (b + i - 2);
  return exact_div(numerator, denominator);
}

// Independent alternating form for cross-validation:
//   bar_skyt(i,b) = 1/(i+1)! sum_k (-1)^k C(b+2i-1, b-2-k) (2i+k+2)!(k+1)/(i+k+2)!
inline Integer count_bar_skyt_alternating(int i, int b) {
  if (i < 0) throw validation_error("count_bar_skyt_alternating: negative i");
  if (i == 0 || b < 2) return 0;
  Integer sum = 0;
  for (int k = 0; k + 2 <= b; ++k) {
    Integer term = binomial(b + 2 * i - 1, b - 2 - k) * (k + 1);
    term *= product_range(i + k + 3, 2 * i + k + 2);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return exact_div(sum, factorial(i + 1));
}

// Size of the subset of skyt(m+1, i, d-2i+1) whose fillings satisfy at least
// one of: the right column's top entry is 1; the right column's bottom entry
// exceeds d+c; the left column's third-from-top entry is below d+1 (the last
// condition is unsatisfiable when the left column is shorter than 3). For a
// disjoint circuit-hyperplane family of size c this subset has exactly
// skyt(m+1,i,d-2i+1) - c*bar_skyt(i,d-2i+1) elements.
inline Integer count_disjoint_positive(int m, int d, int i, const Integer& c,
                                       int cell_cap = kDefaultCellCap) {
  if (m < 0 || d < 0 || i < 0 || c < 0)
    throw validation_error("count_disjoint_positive: negative argument");
  if (2 * i >= d && i > 0)
    throw validation_error("count_disjoint_positive: requires i < d/2");
  if (i == 0) return 1;  // the i=0 coefficient is the conventional 1
  const int a = m + 1, b = d - 2 * i + 1;
  if (a < 2 || b < 2) return 0;  // ambient skyt set is empty
  const SkytShape shape{a, i, b};
  const auto fillings = enumerate_skyt(a, i, b, cell_cap);
  const std::size_t top_right = static_cast<std::size_t>(shape.right_top_index());
  const std::size_t bottom_right = static_cast<std::size_t>(shape.right_bottom_index());
  const int third_left = shape.left_third_index();
  Integer count = 0;
  for (const auto& f : fillings) {
    const bool c1 = f.entries[top_right] == 1;
    const bool c2 = Integer(f.entries[bottom_right]) > Integer(d) + c;
    const bool c3 = third_left >= 0 && f.entries[static_cast<std::size_t>(third_left)] < d + 1;
    if (c1 || c2 || c3) ++count;
  }
  return count;
}

}  // namespace sparsekl::tableaux
