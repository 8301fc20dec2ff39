#pragma once

// Ground-truth matroid engine: matroids given by an explicit basis family,
// with rank/closure/flats computed directly from the bases, the lattice of
// flats with its Moebius function, characteristic polynomials, minors, and
// Kazhdan-Lusztig polynomials straight from the defining recurrence
//
//   t^{rk M} P_M(1/t) = sum over flats F of chi_{M^F}(t) P_{M_F}(t),
//
// with deg P_M < rk(M)/2 and P_M = 1 in rank 0. Nothing here knows about the
// sparse paving closed forms; this module is what they are checked against.

#include "sparsekl/exactmath.hpp"
#include "sparsekl/sparse_paving.hpp"
#include "sparsekl/subsets.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sparsekl::matroid {

inline constexpr int kLatticeGroundCap = 16;
inline constexpr int kKlGroundCap = 12;

struct GeneralMatroid {
  int n = 0;                // ground set size
  int r = 0;                // common basis size
  std::vector<Mask> bases;  // sorted, unique

  bool has_basis(Mask b) const { return std::binary_search(bases.begin(), bases.end(), b); }
};

namespace detail {

inline GeneralMatroid make_unchecked(int n, std::vector<Mask> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  GeneralMatroid mat;
  mat.n = n;
  mat.r = bases.empty() ? 0 : popcount(bases.front());
  mat.bases = std::move(bases);
  return mat;
}

}  // namespace detail

inline int rank(const GeneralMatroid& mat, Mask s) {
  int best = 0;
  for (Mask b : mat.bases) best = std::max(best, popcount(s & b));
  return best;
}

inline Mask closure(const GeneralMatroid& mat, Mask s) {
  const int rs = rank(mat, s);
  Mask out = s;
  for (int e = 0; e < mat.n; ++e) {
    const Mask bit = Mask{1} << e;
    if ((s & bit) == 0 && rank(mat, s | bit) == rs) out |= bit;
  }
  return out;
}

inline bool is_flat(const GeneralMatroid& mat, Mask s) { return closure(mat, s) == s; }

// Validated construction; the basis-exchange axiom is checked exhaustively
// for ground sets up to 12 elements and reports a witness pair on failure.
inline GeneralMatroid from_bases(int n, std::vector<Mask> bases) {
  if (n < 0 || n > 31) throw validation_error("from_bases: ground size out of range");
  if (bases.empty()) throw validation_error("from_bases: empty basis family");
  const int r = popcount(bases.front());
  for (Mask b : bases) {
    if (!subset_of(b, full_mask(n)))
      throw validation_error("from_bases: " + mask_to_string(b) + " is not inside [" +
                             std::to_string(n) + "]");
    if (popcount(b) != r)
      throw validation_error("from_bases: bases of unequal sizes (" + mask_to_string(b) +
                             " vs " + mask_to_string(bases.front()) + ")");
  }
  GeneralMatroid mat = detail::make_unchecked(n, std::move(bases));
  if (n <= 12) {
    for (Mask b1 : mat.bases)
      for (Mask b2 : mat.bases) {
        Mask only1 = b1 & ~b2;
        for (int x = 0; x < n; ++x) {
          if ((only1 >> x & 1u) == 0) continue;
          bool exchanged = false;
          Mask only2 = b2 & ~b1;
          for (int y = 0; y < n && !exchanged; ++y)
            if ((only2 >> y & 1u) != 0 &&
                mat.has_basis((b1 & ~(Mask{1} << x)) | (Mask{1} << y)))
              exchanged = true;
          if (!exchanged)
            throw validation_error("from_bases: exchange axiom fails for " + mask_to_string(b1) +
                                   ", " + mask_to_string(b2) + " at element " +
                                   std::to_string(x + 1));
        }
      }
  }
  return mat;
}

// Bases are all d-subsets except the circuit-hyperplanes; the exchange axiom
// holds automatically for a valid family.
inline GeneralMatroid from_sparse_paving(const paving::SparsePavingMatroid& sp) {
  const int n = sp.ground();
  if (n > kLatticeGroundCap)
    throw cap_error("from_sparse_paving: ground set of size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(kLatticeGroundCap));
  std::vector<Mask> bases;
  for (Mask s : k_subsets(n, sp.d))
    if (!std::binary_search(sp.ch.begin(), sp.ch.end(), s)) bases.push_back(s);
  if (bases.empty()) throw validation_error("from_sparse_paving: no bases remain");
  return detail::make_unchecked(n, std::move(bases));
}

struct FlatLattice {
  struct Flat {
    Mask set = 0;
    int rank = 0;
    Integer mu;  // Moebius value mu(bottom, this flat)
  };
  std::vector<Flat> flats;  // sorted by (rank, set); flats.front() is the bottom

  const Flat& bottom() const { return flats.front(); }
  const Flat& top() const { return flats.back(); }
};

// Every closed set, found by closing all subsets, with Moebius values
// mu(0^,F) = -sum of mu over proper subflats (and 1 at the bottom).
inline FlatLattice flat_lattice(const GeneralMatroid& mat) {
  if (mat.n > kLatticeGroundCap)
    throw cap_error("flat_lattice: ground set of size " + std::to_string(mat.n) +
                    " exceeds cap " + std::to_string(kLatticeGroundCap));
  std::vector<Mask> closed;
  std::vector<char> seen(std::size_t{1} << mat.n, 0);
  for (Mask s = 0; s < (Mask{1} << mat.n); ++s) {
    Mask f = closure(mat, s);
    if (!seen[f]) {
      seen[f] = 1;
      closed.push_back(f);
    }
  }
  FlatLattice lat;
  lat.flats.reserve(closed.size());
  for (Mask f : closed) lat.flats.push_back({f, rank(mat, f), Integer(0)});
  std::sort(lat.flats.begin(), lat.flats.end(), [](const auto& x, const auto& y) {
    return x.rank != y.rank ? x.rank < y.rank : x.set < y.set;
  });
  for (std::size_t i = 0; i < lat.flats.size(); ++i) {
    if (i == 0) {
      lat.flats[i].mu = 1;
      continue;
    }
    Integer acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (lat.flats[j].set != lat.flats[i].set && subset_of(lat.flats[j].set, lat.flats[i].set))
        acc += lat.flats[j].mu;
    lat.flats[i].mu = -acc;
  }
  return lat;
}

namespace detail {

// chi of the localization at F, read off one shared lattice: the interval
// below F in L(M) is the lattice of M^F, so its Moebius values can be reused.
inline IntPolynomial localization_chi(const FlatLattice& lat, Mask f, int rank_f) {
  std::vector<Integer> co(static_cast<std::size_t>(rank_f) + 1, Integer(0));
  for (const auto& g : lat.flats)
    if (subset_of(g.set, f)) co[static_cast<std::size_t>(rank_f - g.rank)] += g.mu;
  return IntPolynomial(std::move(co));
}

inline GeneralMatroid relabel_to_initial(const std::vector<Mask>& bases, Mask ground_subset,
                                         int n) {
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  int idx = 0;
  for (int e = 0; e < n; ++e)
    if ((ground_subset >> e) & 1u) map[static_cast<std::size_t>(e)] = idx++;
  std::vector<Mask> out;
  out.reserve(bases.size());
  for (Mask b : bases) {
    Mask nb = 0;
    for (int e = 0; e < n; ++e)
      if ((b >> e) & 1u) nb |= Mask{1} << map[static_cast<std::size_t>(e)];
    out.push_back(nb);
  }
  return make_unchecked(idx, std::move(out));
}

}  // namespace detail

// Localization M^F: restriction to the flat F, relabeled order-preservingly
// onto an initial segment. Bases are the maximum independent subsets of F.
inline GeneralMatroid restrict_to(const GeneralMatroid& mat, Mask f) {
  if (!is_flat(mat, f))
    throw validation_error("restrict_to: " + mask_to_string(f) + " is not a flat");
  const int rf = rank(mat, f);
  std::vector<Mask> bs;
  for (Mask b : mat.bases) {
    // maximal intersections B /\ F realize every basis of M^F as b ranges
    if (popcount(b & f) == rf) bs.push_back(b & f);
  }
  return detail::relabel_to_initial(bs, f, mat.n);
}

// Contraction M_F on the complementary ground set, relabeled. X is a basis
// iff X union B_F is a basis of M, for one fixed basis B_F of F.
inline GeneralMatroid contract(const GeneralMatroid& mat, Mask f) {
  if (!is_flat(mat, f))
    throw validation_error("contract: " + mask_to_string(f) + " is not a flat");
  Mask bf = 0;
  int rb = 0;
  for (int e = 0; e < mat.n; ++e) {
    const Mask bit = Mask{1} << e;
    if ((f & bit) != 0 && rank(mat, bf | bit) > rb) {
      bf |= bit;
      ++rb;
    }
  }
  std::vector<Mask> bs;
  for (Mask b : mat.bases)
    if ((b & f) == bf) bs.push_back(b & ~f);  // X with X union B_F a basis
  return detail::relabel_to_initial(bs, full_mask(mat.n) & ~f, mat.n);
}

// chi_M via the lattice of flats; the zero polynomial when M has a loop
// (closure of the empty set is nonempty), matching the usual convention.
inline IntPolynomial characteristic_polynomial(const GeneralMatroid& mat) {
  if (closure(mat, 0) != 0) return IntPolynomial{};
  const FlatLattice lat = flat_lattice(mat);
  return detail::localization_chi(lat, lat.top().set, lat.top().rank);
}

// Kazhdan-Lusztig engine with memoization on the relabeled basis family.
// Each query walks the lattice of flats: with R = sum over flats F above the
// bottom of chi_{M^F} P_{M_F}, the coefficients of P_M for 0 <= i < rk/2 are
// read off R at t^{rk-i}, and the full recurrence is re-verified before the
// result is cached.
class KlEngine {
 public:
  IntPolynomial kl_polynomial(const GeneralMatroid& mat) {
    if (mat.n > kKlGroundCap)
      throw cap_error("kl_polynomial: ground set of size " + std::to_string(mat.n) +
                      " exceeds cap " + std::to_string(kKlGroundCap));
    return compute(mat);
  }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Mask>& key) const {
      std::size_t h = 1469598103934665603ull;
      for (Mask m : key) {
        h ^= m;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  static std::vector<Mask> key_of(const GeneralMatroid& mat) {
    std::vector<Mask> key;
    key.reserve(mat.bases.size() + 1);
    key.push_back(static_cast<Mask>(mat.n));
    key.insert(key.end(), mat.bases.begin(), mat.bases.end());
    return key;
  }

  IntPolynomial compute(const GeneralMatroid& mat) {
    const int d = mat.r;
    if (d == 0) return IntPolynomial::one();
    const auto key = key_of(mat);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const FlatLattice lat = flat_lattice(mat);
    const Mask bottom = lat.bottom().set;
    IntPolynomial r_sum;
    for (const auto& flat : lat.flats) {
      if (flat.set == bottom) continue;
      const IntPolynomial chi = detail::localization_chi(lat, flat.set, flat.rank);
      const IntPolynomial p_contr = compute(contract(mat, flat.set));
      r_sum += chi * p_contr;
    }

    std::vector<Integer> coeffs;
    for (int i = 0; 2 * i < d; ++i) coeffs.push_back(r_sum.coeff(d - i));
    if (coeffs.empty() || coeffs.front() != 1)
      throw invariant_error("kl_polynomial: recurrence did not force constant term 1");
    IntPolynomial p{std::vector<Integer>(coeffs)};

    // Full round trip of the defining identity. The bottom flat contributes
    // chi = 1 times P of the contraction at the bottom, which is P_M itself
    // when the matroid is loopless.
    const IntPolynomial bottom_p = bottom == 0 ? p : compute(contract(mat, bottom));
    if (reciprocal_shift(p, d) != r_sum + bottom_p)
      throw invariant_error("kl_polynomial: computed polynomial fails the defining recurrence");

    memo_.emplace(key, p);
    return p;
  }

  std::unordered_map<std::vector<Mask>, IntPolynomial, KeyHash> memo_;
};

// One-shot convenience without a shared cache.
inline IntPolynomial kl_polynomial(const GeneralMatroid& mat) {
  KlEngine engine;
  return engine.kl_polynomial(mat);
}

}  // namespace sparsekl::matroid
