#include "sparsekl/tableaux.hpp"

#include "sparsekl/sparse_paving.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace sparsekl;
using namespace sparsekl::tableaux;

namespace {

// Independent oracle: try every permutation of 1..N as a filling and keep the
// legal ones. Only usable for tiny shapes; the production enumerator uses
// pruned backtracking and is checked against this.
long brute_force_count(int a, int i, int b) {
  SkytShape shape{a, i, b};
  const int n = shape.cell_count();
  REQUIRE(n <= 8);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    if (SkytFilling{shape, perm}.is_legal()) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST_CASE("enumeration matches the permutation-filter oracle", "[tableaux]") {
  struct Case {
    int a, i, b;
  };
  for (auto [a, i, b] : {Case{2, 1, 2}, Case{3, 1, 2}, Case{2, 2, 2}, Case{4, 1, 2},
                         Case{2, 1, 4}, Case{3, 2, 3}, Case{2, 3, 2}}) {
    const auto fillings = enumerate_skyt(a, i, b);
    REQUIRE(static_cast<long>(fillings.size()) == brute_force_count(a, i, b));
    for (const auto& f : fillings) REQUIRE(f.is_legal());
  }
}

TEST_CASE("enumeration order is lexicographic and duplicate-free", "[tableaux]") {
  const auto fillings = enumerate_skyt(3, 2, 3);
  for (std::size_t k = 1; k < fillings.size(); ++k)
    REQUIRE(fillings[k - 1].entries < fillings[k].entries);
}

TEST_CASE("enumeration examples", "[tableaux]") {
  CHECK(enumerate_skyt(2, 1, 2).size() == 2);  // Catalan C_2
  CHECK(enumerate_skyt(3, 1, 2).size() == 5);
  CHECK(Integer(static_cast<long>(enumerate_skyt(2, 2, 2).size())) == count_skyt(2, 2, 2));
}

TEST_CASE("enumeration preconditions and cap", "[tableaux]") {
  CHECK_THROWS_AS(enumerate_skyt(1, 1, 2), validation_error);
  CHECK_THROWS_AS(enumerate_skyt(2, 0, 2), validation_error);
  CHECK_THROWS_AS(enumerate_skyt(8, 2, 8), cap_error);
  // raised cap: the 2x9 rectangle, Catalan(9) fillings
  CHECK(enumerate_skyt(2, 8, 2, 18).size() ==
        static_cast<std::size_t>(count_skyt(2, 8, 2).convert_to<long>()));
}

TEST_CASE("count_skyt values and conventions", "[tableaux]") {
  CHECK(count_skyt(4, 1, 2) == 9);
  CHECK(count_skyt(7, 0, 9) == 1);
  CHECK(count_skyt(1, 3, 5) == 0);
  CHECK(count_skyt(5, 2, -3) == 0);  // b below 2, any sign
  CHECK_THROWS_AS(count_skyt(2, -1, 2), validation_error);
}

TEST_CASE("count_skyt_positive agrees with the alternating sum", "[tableaux]") {
  CHECK(count_skyt_positive(4, 1, 2) == 9);
  CHECK(count_skyt_positive(2, 1, 2) == 2);
  CHECK(count_skyt_positive(3, 2, 3) == count_skyt(3, 2, 3));
  CHECK(static_cast<long>(enumerate_skyt(3, 2, 3).size()) ==
        count_skyt(3, 2, 3).convert_to<long>());
  CHECK_THROWS_AS(count_skyt_positive(1, 1, 2), validation_error);
}

TEST_CASE("bar enumeration picks fillings with 1 atop the left column", "[tableaux]") {
  CHECK(enumerate_bar_skyt(1, 2).size() == 2);
  CHECK(enumerate_bar_skyt(1, 4).size() == 4);
  CHECK(enumerate_bar_skyt(2, 2).size() == 5);  // 2*5!/(3!*1!*0!*4*2)
  for (const auto& f : enumerate_bar_skyt(2, 3))
    REQUIRE(f.entries[static_cast<std::size_t>(f.shape.left_top_index())] == 1);
}

TEST_CASE("count_bar_skyt closed form and conventions", "[tableaux]") {
  CHECK(count_bar_skyt(0, 7) == 0);
  CHECK(count_bar_skyt(1, 2) == 2);
  CHECK(count_bar_skyt(1, 6) == 6);
  CHECK(count_bar_skyt(3, 1) == 0);
  CHECK(count_bar_skyt(3, -1) == 0);
}

TEST_CASE("count_bar_skyt_alternating cross-validates the closed form", "[tableaux]") {
  CHECK(count_bar_skyt_alternating(1, 2) == 2);
  CHECK(count_bar_skyt_alternating(2, 2) == 5);
  CHECK(count_bar_skyt_alternating(3, 2) == count_bar_skyt(3, 2));
  for (int i = 0; i <= 5; ++i)
    for (int b = 0; b <= 8; ++b)
      REQUIRE(count_bar_skyt_alternating(i, b) == count_bar_skyt(i, b));
}

TEST_CASE("triple agreement: enumeration, alternating sum, positive form", "[tableaux]") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int i = 1; i <= 4; ++i) {
        if (a + b + 2 * i - 2 > 12) continue;
        const Integer enumerated = static_cast<long>(enumerate_skyt(a, i, b).size());
        REQUIRE(enumerated == count_skyt(a, i, b));
        REQUIRE(enumerated == count_skyt_positive(a, i, b));
      }
  for (int i = 1; i <= 4; ++i)
    for (int b = 2; b <= 8; ++b) {
      if (2 * i + b > 12) continue;
      const Integer enumerated = static_cast<long>(enumerate_bar_skyt(i, b).size());
      REQUIRE(enumerated == count_bar_skyt(i, b));
      REQUIRE(enumerated == count_bar_skyt_alternating(i, b));
    }
}

TEST_CASE("bar fillings are a subset of skyt(2,i,b)", "[tableaux]") {
  for (int i = 1; i <= 4; ++i)
    for (int b = 2; b <= 6; ++b) REQUIRE(count_bar_skyt(i, b) <= count_skyt(2, i, b));
}

TEST_CASE("two-tail closed form", "[tableaux]") {
  for (int m = 1; m <= 6; ++m)
    for (int d = 3; d <= 8; ++d)
      REQUIRE(count_skyt(m + 1, 1, d - 1) == binomial(m + d, d - 1) - m - d);
}

TEST_CASE("2x(i+1) rectangles count Catalan numbers", "[tableaux]") {
  for (int i = 1; i <= 5; ++i) REQUIRE(count_skyt(2, i, 2) == catalan(i + 1));
}

TEST_CASE("count_disjoint_positive examples", "[tableaux]") {
  // With c = 0 the bottom-right condition always holds, so the whole set counts.
  CHECK(count_disjoint_positive(3, 3, 1, 0) == 9);
  CHECK(count_disjoint_positive(3, 3, 1, 2) == 9 - 2 * 2);
  CHECK(count_disjoint_positive(1, 3, 1, 1) == 0);  // = skyt(2,1,2) - bar(1,2)
  CHECK(count_disjoint_positive(4, 5, 0, 1) == 1);
  // Beyond the disjoint-feasible range (no 4 pairwise disjoint 3-subsets of
  // [6]) the filter is still well-defined but no longer tracks the formula:
  // only the three fillings with left-column third entry below 4 remain.
  CHECK(count_disjoint_positive(3, 3, 1, 4) == 3);
}

TEST_CASE("disjoint filter counts the formula on feasible sizes", "[tableaux]") {
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d <= n; ++d) {
      const int m = n - d;
      for (int c = 0; c * d <= n; ++c) {
        // Build the blocks family; skip sizes with no valid matroid.
        std::vector<Mask> blocks;
        for (int j = 0; j < c; ++j) blocks.push_back(full_mask(d) << (j * d));
        try {
          paving::validate(m, d, blocks);
        } catch (const validation_error&) {
          continue;
        }
        for (int i = 0; 2 * i < d; ++i)
          REQUIRE(count_disjoint_positive(m, d, i, c) ==
                  count_skyt(m + 1, i, d - 2 * i + 1) - c * count_bar_skyt(i, d - 2 * i + 1));
      }
    }
}
