#pragma once

// Sparse paving matroids S_{m,d}(CH): rank d on ground set [m+d], with the
// circuit-hyperplane family CH a set of d-subsets whose pairwise symmetric
// difference is at least 4. The i-th Kazhdan-Lusztig coefficient is
//
//   skyt(m+1, i, d-2i+1) - |CH| * bar_skyt(i, d-2i+1),
//
// which depends on CH only through its size. The characteristic polynomial,
// flats, localizations and contractions all have closed descriptions; each is
// cross-checked elsewhere against the brute-force matroid engine.

#include "sparsekl/bounds.hpp"
#include "sparsekl/exactmath.hpp"
#include "sparsekl/subsets.hpp"
#include "sparsekl/tableaux.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace sparsekl::paving {

inline constexpr int kDefaultGroundCap = 16;

struct SparsePavingMatroid {
  int m = 0;                // corank
  int d = 0;                // rank
  std::vector<Mask> ch;     // sorted, deduplicated circuit-hyperplane masks

  int ground() const { return m + d; }
  Integer ch_size() const { return static_cast<long>(ch.size()); }
};

// Checks every invariant and returns the canonicalized matroid. Reports the
// first offending pair on a symmetric-difference violation.
inline SparsePavingMatroid validate(int m, int d, std::vector<Mask> ch) {
  if (m < 0 || d < 0) throw validation_error("sparse paving: m and d must be nonnegative");
  const int n = m + d;
  if (n > 31) throw validation_error("sparse paving: ground set too large for bitmask storage");
  std::sort(ch.begin(), ch.end());
  ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
  for (Mask c : ch) {
    if (!subset_of(c, full_mask(n)))
      throw validation_error("sparse paving: " + mask_to_string(c) +
                             " is not a subset of the ground set [" + std::to_string(n) + "]");
    if (popcount(c) != d)
      throw validation_error("sparse paving: " + mask_to_string(c) + " does not have size d = " +
                             std::to_string(d));
  }
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j)
      if (popcount(ch[i] ^ ch[j]) < 4)
        throw validation_error("sparse paving: |" + mask_to_string(ch[i]) + " sym-diff " +
                               mask_to_string(ch[j]) + "| = " +
                               std::to_string(popcount(ch[i] ^ ch[j])) + " < 4");
  if (m == 0 && !ch.empty())
    throw validation_error("sparse paving: m = 0 forces an empty circuit-hyperplane family");
  if (d == 0 && !ch.empty())
    throw validation_error("sparse paving: d = 0 admits no circuit-hyperplane (bases would vanish)");
  return SparsePavingMatroid{m, d, std::move(ch)};
}

inline void check_ch_size(int m, int d, const Integer& c, bool unchecked) {
  if (c < 0) throw validation_error("kl: negative circuit-hyperplane count");
  if (!unchecked && c > bounds::best_bound(m, d))
    throw validation_error("kl: no valid circuit-hyperplane family of size " + c.str() +
                           " exists for (m,d) = (" + std::to_string(m) + "," + std::to_string(d) +
                           "); bound is " + bounds::best_bound(m, d).str() +
                           " (pass unchecked to evaluate the formula anyway)");
}

// i-th Kazhdan-Lusztig coefficient of S_{m,d}(CH) with |CH| = c. The counting
// conventions make this 1 at i = 0 and 0 for i >= d/2 with i > 0.
inline Integer kl_coefficient(int m, int d, const Integer& c, int i, bool unchecked = false) {
  if (m < 0 || d < 0 || i < 0) throw validation_error("kl_coefficient: negative argument");
  check_ch_size(m, d, c, unchecked);
  const int b = d - 2 * i + 1;
  return tableaux::count_skyt(m + 1, i, b) - c * tableaux::count_bar_skyt(i, b);
}

inline Integer kl_coefficient(const SparsePavingMatroid& sp, int i) {
  return kl_coefficient(sp.m, sp.d, sp.ch_size(), i);
}

inline IntPolynomial kl_polynomial(int m, int d, const Integer& c, bool unchecked = false) {
  if (m < 0 || d < 0) throw validation_error("kl_polynomial: negative argument");
  check_ch_size(m, d, c, unchecked);
  std::vector<Integer> coeffs;
  for (int i = 0; 2 * i < d || i == 0; ++i) {
    coeffs.push_back(kl_coefficient(m, d, c, i, true));
    if (2 * (i + 1) >= d) break;
  }
  return IntPolynomial(std::move(coeffs));
}

inline IntPolynomial kl_polynomial(const SparsePavingMatroid& sp) {
  return kl_polynomial(sp.m, sp.d, sp.ch_size());
}

// chi_{S_{m,d}(CH)}: top coefficients (-1)^i C(m+d,i) on t^(d-i) for i <= d-2,
// linear coefficient (-1)^(d-1)(C(m+d,d-1) - c), constant
// (-1)^d(C(m+d-1,d-1) - c). In rank 0 the empty matroid gets the
// empty-product 1, while a nonempty ground set consists of loops and kills
// the polynomial.
inline IntPolynomial characteristic_polynomial(int m, int d, const Integer& c) {
  if (m < 0 || d < 0) throw validation_error("characteristic_polynomial: negative argument");
  if (c < 0) throw validation_error("characteristic_polynomial: negative family size");
  if (d == 0) return m == 0 ? IntPolynomial::one() : IntPolynomial{};
  std::vector<Integer> co(static_cast<std::size_t>(d) + 1, Integer(0));
  for (int i = 0; i <= d - 2; ++i) {
    Integer v = binomial(m + d, i);
    co[static_cast<std::size_t>(d - i)] = (i % 2 == 0) ? v : -v;
  }
  Integer lin = binomial(m + d, d - 1) - c;
  co[1] = (d % 2 == 1) ? lin : -lin;
  Integer cst = binomial(m + d - 1, d - 1) - c;
  co[0] = (d % 2 == 0) ? cst : -cst;
  return IntPolynomial(std::move(co));
}

inline IntPolynomial characteristic_polynomial(const SparsePavingMatroid& sp) {
  return characteristic_polynomial(sp.m, sp.d, sp.ch_size());
}

// chi_{U_{m,d}} = (-1)^d C(m+d-1,d-1) + sum_{i=0}^{d-1} (-1)^i C(m+d,i) t^(d-i).
inline IntPolynomial uniform_characteristic_polynomial(int m, int d) {
  if (m < 0 || d < 0)
    throw validation_error("uniform_characteristic_polynomial: negative argument");
  if (d == 0) return m == 0 ? IntPolynomial::one() : IntPolynomial{};
  std::vector<Integer> co(static_cast<std::size_t>(d) + 1, Integer(0));
  for (int i = 0; i <= d - 1; ++i) {
    Integer v = binomial(m + d, i);
    co[static_cast<std::size_t>(d - i)] = (i % 2 == 0) ? v : -v;
  }
  Integer cst = binomial(m + d - 1, d - 1);
  co[0] = (d % 2 == 0) ? cst : -cst;
  return IntPolynomial(std::move(co));
}

inline bool is_flat(const SparsePavingMatroid& sp, Mask f) {
  const int n = sp.ground();
  if (!subset_of(f, full_mask(n))) return false;
  const int size = popcount(f);
  if (f == full_mask(n)) return true;
  if (size <= sp.d - 2) return true;
  if (size == sp.d - 1) {
    for (Mask c : sp.ch)
      if (subset_of(f, c)) return false;
    return true;
  }
  if (size == sp.d)
    return std::binary_search(sp.ch.begin(), sp.ch.end(), f);
  return false;
}

// All flats grouped by rank 0..d: subsets of size <= d-2; the (d-1)-subsets
// contained in no circuit-hyperplane; the circuit-hyperplanes themselves
// (rank d-1); and the full ground set.
inline std::vector<std::vector<Mask>> flats_by_rank(const SparsePavingMatroid& sp,
                                                    int ground_cap = kDefaultGroundCap) {
  const int n = sp.ground();
  if (n > ground_cap)
    throw cap_error("flats_by_rank: ground set of size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(ground_cap));
  std::vector<std::vector<Mask>> by_rank(static_cast<std::size_t>(sp.d) + 1);
  for (int k = 0; k <= sp.d - 2; ++k) by_rank[static_cast<std::size_t>(k)] = k_subsets(n, k);
  if (sp.d >= 1) {
    auto& rk = by_rank[static_cast<std::size_t>(sp.d - 1)];
    for (Mask f : k_subsets(n, sp.d - 1)) {
      bool covered = false;
      for (Mask c : sp.ch)
        if (subset_of(f, c)) {
          covered = true;
          break;
        }
      if (!covered) rk.push_back(f);
    }
    rk.insert(rk.end(), sp.ch.begin(), sp.ch.end());
    std::sort(rk.begin(), rk.end());
  }
  by_rank[static_cast<std::size_t>(sp.d)].push_back(full_mask(n));
  if (sp.d == 0) by_rank[0] = {full_mask(n)};
  return by_rank;
}

// Symbolic description of a localization or contraction: either a uniform
// matroid or a smaller sparse paving matroid, on a ground set relabeled
// order-preservingly to an initial segment.
struct MinorDescriptor {
  enum class Kind { Uniform, SparsePaving };
  Kind kind = Kind::Uniform;
  int m = 0;
  int d = 0;
  std::vector<Mask> ch;  // empty for Kind::Uniform

  // Explicit bases on [m+d], for comparison with the brute-force engine.
  std::vector<Mask> bases() const {
    std::vector<Mask> out;
    for (Mask s : k_subsets(m + d, d))
      if (!std::binary_search(ch.begin(), ch.end(), s)) out.push_back(s);
    return out;
  }
};

namespace detail {

inline MinorDescriptor describe(int m, int d, std::vector<Mask> ch) {
  MinorDescriptor md;
  md.kind = ch.empty() ? MinorDescriptor::Kind::Uniform : MinorDescriptor::Kind::SparsePaving;
  md.m = m;
  md.d = d;
  md.ch = std::move(ch);
  return md;
}

// Relabel a mask over the complement of F to an initial segment.
inline Mask relabel_outside(Mask s, Mask f, int n) {
  Mask out = 0;
  int idx = 0;
  for (int e = 0; e < n; ++e) {
    if ((f >> e) & 1u) continue;
    if ((s >> e) & 1u) out |= Mask{1} << idx;
    ++idx;
  }
  return out;
}

}  // namespace detail

// Localization S^F: the whole matroid at the full set, U_{1,d-1} at a
// circuit-hyperplane, and the Boolean U_{0,|F|} at every other flat.
inline MinorDescriptor localize(const SparsePavingMatroid& sp, Mask f) {
  if (!is_flat(sp, f)) throw validation_error("localize: " + mask_to_string(f) + " is not a flat");
  const int n = sp.ground();
  if (f == full_mask(n)) return detail::describe(sp.m, sp.d, sp.ch);
  if (std::binary_search(sp.ch.begin(), sp.ch.end(), f)) return detail::describe(1, sp.d - 1, {});
  return detail::describe(0, popcount(f), {});
}

// Contraction S_F: U_{m-1,1} at a circuit-hyperplane; S_{m, d-|F|}(CH(F))
// with CH(F) = { C \ F : F inside C in CH } when F sits strictly inside some
// circuit-hyperplane; the uniform contraction otherwise.
inline MinorDescriptor contract(const SparsePavingMatroid& sp, Mask f) {
  if (!is_flat(sp, f)) throw validation_error("contract: " + mask_to_string(f) + " is not a flat");
  const int n = sp.ground();
  if (f == 0) return detail::describe(sp.m, sp.d, sp.ch);
  if (f == full_mask(n)) return detail::describe(0, 0, {});
  if (std::binary_search(sp.ch.begin(), sp.ch.end(), f)) return detail::describe(sp.m - 1, 1, {});
  std::vector<Mask> chf;
  for (Mask c : sp.ch)
    if (subset_of(f, c)) chf.push_back(detail::relabel_outside(c, f, n));
  std::sort(chf.begin(), chf.end());
  return detail::describe(sp.m, sp.d - popcount(f), std::move(chf));
}

}  // namespace sparsekl::paving
