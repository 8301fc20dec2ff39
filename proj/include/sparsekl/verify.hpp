#pragma once

// Formula-versus-engine verification sweep shared by the CLI and the
// acceptance suite. For every sparse paving matroid in range it compares the
// combinatorial Kazhdan-Lusztig polynomial and the closed characteristic
// polynomial against the brute-force engine, which itself re-verifies the
// defining recurrence on every instance it computes.
//
// Instances: exhaustive over all valid circuit-hyperplane families for ground
// sets up to kExhaustiveGroundCap, plus seeded random families per (m,d) for
// larger grounds (capped at kOracleGroundCap).

#include "sparsekl/bounds.hpp"
#include "sparsekl/ch_document.hpp"
#include "sparsekl/exactmath.hpp"
#include "sparsekl/matroid_oracle.hpp"
#include "sparsekl/sparse_paving.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sparsekl::verify {

inline constexpr int kExhaustiveGroundCap = 7;
inline constexpr int kOracleGroundCap = 9;

struct SweepOptions {
  int max_ground = kExhaustiveGroundCap;
  int samples = 50;          // random families per (m,d) beyond the exhaustive range
  std::uint64_t seed = 0;
  bool check_charpoly = true;
  bool inject_fault = false;  // mutation hook: corrupts the formula side
};

struct SweepStats {
  long instances = 0;
  long exhaustive_instances = 0;
  long sampled_instances = 0;
};

struct Mismatch {
  paving::SparsePavingMatroid instance;
  std::string quantity;  // "kl" or "characteristic"
  IntPolynomial formula_value;
  IntPolynomial engine_value;

  std::string describe() const {
    return quantity + " mismatch on " + ChDocument::from_matroid(instance).serialize() +
           ": formula " + formula_value.str() + " vs engine " + engine_value.str();
  }
};

namespace detail {

inline std::optional<Mismatch> check_instance(const paving::SparsePavingMatroid& sp,
                                              matroid::KlEngine& engine,
                                              const SweepOptions& opt) {
  const auto mat = matroid::from_sparse_paving(sp);
  IntPolynomial formula = paving::kl_polynomial(sp);
  if (opt.inject_fault) formula += IntPolynomial::one();
  const IntPolynomial truth = engine.kl_polynomial(mat);
  if (!(formula == truth)) return Mismatch{sp, "kl", formula, truth};
  if (opt.check_charpoly) {
    const IntPolynomial chi_formula = paving::characteristic_polynomial(sp);
    const IntPolynomial chi_truth = matroid::characteristic_polynomial(mat);
    if (!(chi_formula == chi_truth)) return Mismatch{sp, "characteristic", chi_formula, chi_truth};
  }
  return std::nullopt;
}

// Random valid family: greedy growth to a maximal family, truncated to a
// uniformly random prefix length. Deterministic in the rng state.
inline std::vector<Mask> random_family(int m, int d, std::mt19937_64& rng) {
  const int n = m + d;
  if (m == 0 || d == 0) return {};
  std::vector<Mask> fam;
  std::vector<int> perm(static_cast<std::size_t>(n));
  const int attempts = 32 * n + 64;
  for (int t = 0; t < attempts; ++t) {
    for (int e = 0; e < n; ++e) perm[static_cast<std::size_t>(e)] = e;
    Mask s = 0;
    for (int j = 0; j < d; ++j) {
      std::uniform_int_distribution<int> pick(j, n - 1);
      std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(pick(rng))]);
      s |= Mask{1} << perm[static_cast<std::size_t>(j)];
    }
    bool ok = true;
    for (Mask u : fam)
      if (popcount(s ^ u) < 4) {
        ok = false;
        break;
      }
    if (ok) fam.push_back(s);
  }
  std::uniform_int_distribution<std::size_t> cut(0, fam.size());
  fam.resize(cut(rng));
  std::sort(fam.begin(), fam.end());
  return fam;
}

}  // namespace detail

// Returns the first counterexample, or nothing when every instance agrees.
inline std::optional<Mismatch> formula_vs_engine_sweep(const SweepOptions& opt,
                                                       SweepStats* stats = nullptr) {
  matroid::KlEngine engine;
  SweepStats local;
  const int limit = std::min(opt.max_ground, kOracleGroundCap);

  for (int n = 1; n <= std::min(limit, kExhaustiveGroundCap); ++n) {
    for (int d = 0; d <= n; ++d) {
      const int m = n - d;
      std::optional<Mismatch> found;
      bounds::for_each_independent_set(n, d, [&](const std::vector<Mask>& fam) {
        if (found) return;
        if (!fam.empty() && (m == 0 || d == 0)) return;  // no valid matroid
        auto sp = paving::validate(m, d, fam);
        ++local.instances;
        ++local.exhaustive_instances;
        if (auto mm = detail::check_instance(sp, engine, opt)) found = mm;
      });
      if (found) {
        if (stats) *stats = local;
        return found;
      }
    }
  }

  for (int n = kExhaustiveGroundCap + 1; n <= limit; ++n) {
    for (int d = 0; d <= n; ++d) {
      const int m = n - d;
      for (int k = 0; k < opt.samples; ++k) {
        std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ull + 1000003ull * n + 1009ull * d + k);
        auto sp = paving::validate(m, d, detail::random_family(m, d, rng));
        ++local.instances;
        ++local.sampled_instances;
        if (auto mm = detail::check_instance(sp, engine, opt)) {
          if (stats) *stats = local;
          return mm;
        }
      }
    }
  }
  if (stats) *stats = local;
  return std::nullopt;
}

}  // namespace sparsekl::verify
