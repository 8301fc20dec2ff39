#pragma once

// Upper bounds on the number of circuit-hyperplanes of S_{m,d}(CH).
//
// A family CH of d-subsets of [m+d] with pairwise symmetric difference >= 4
// is exactly an independent set in the Johnson graph J(m+d,d) (equivalently a
// binary constant-weight code with minimum distance 4). Two bounds apply:
//   coding bound:   |CH| <= C(m+d,d) / (m+1)
//   Johnson-graph bound: |CH| <= 2 C(m+d,d) / (m+d+2)
// The unfloored bounds cross exactly at d = m, where both equal the m-th
// Catalan number. For small graphs an exact branch-and-bound solver computes
// the independence number and a witness family.

#include "sparsekl/exactmath.hpp"
#include "sparsekl/subsets.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace sparsekl::bounds {

// Largest vertex count the exact solver accepts. J(9,4) with 126 vertices
// solves in well under a second; the next sizes up (J(10,4), J(10,5)) already
// take minutes to hours, so the cap sits just below them.
inline constexpr long kExactSolverVertexCap = 128;

inline Integer coding_bound(int m, int d) {
  if (m < 0 || d < 0) throw validation_error("coding_bound: negative argument");
  return binomial(m + d, d) / (m + 1);
}

inline Integer johnson_bound(int m, int d) {
  if (m < 0 || d < 0) throw validation_error("johnson_bound: negative argument");
  return (2 * binomial(m + d, d)) / (m + d + 2);
}

inline Integer best_bound(int m, int d) {
  return std::min(coding_bound(m, d), johnson_bound(m, d));
}

// Sign of coding - johnson as exact rationals, before flooring:
// C/(m+1) vs 2C/(m+d+2) cross-multiplied. Positive iff d > m.
inline int compare_bounds_unfloored(int m, int d) {
  const Integer c = binomial(m + d, d);
  const Integer lhs = c * (m + d + 2);
  const Integer rhs = 2 * c * (m + 1);
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

inline bool johnson_graph_adjacent(Mask a, Mask b) { return popcount(a ^ b) == 2; }

// Tightest bound on |CH| this library can certify for the matroid to exist.
// Beyond min(coding, johnson): m = 0 forces an empty family; for m = 1 every
// pair of d-subsets of [d+1] has symmetric difference 2, so |CH| <= 1; for
// m = 2 the complements are 2-subsets that must be pairwise disjoint, so
// |CH| <= floor((d+2)/2); at m = d = 3 the independence number of J(6,3)
// is 4, established by the exact solver below.
inline Integer certified_ch_bound(int m, int d);

// ---------------------------------------------------------------------------
// Independent-set machinery on J(n,d).

// Visits every family of pairwise-compatible d-subsets (including the empty
// family), in lexicographic order of the vertex index sequence.
template <typename Fn>
void for_each_independent_set(int n, int d, Fn&& visit) {
  const std::vector<Mask> verts = k_subsets(n, d);
  std::vector<Mask> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    visit(const_cast<const std::vector<Mask>&>(current));
    for (std::size_t j = start; j < verts.size(); ++j) {
      bool ok = true;
      for (Mask u : current)
        if (popcount(verts[j] ^ u) < 4) {
          ok = false;
          break;
        }
      if (ok) {
        current.push_back(verts[j]);
        self(self, j + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0);
}

inline std::vector<std::vector<Mask>> independent_sets_of_size(int n, int d, int size) {
  std::vector<std::vector<Mask>> out;
  for_each_independent_set(n, d, [&](const std::vector<Mask>& fam) {
    if (static_cast<int>(fam.size()) == size) out.push_back(fam);
  });
  return out;
}

namespace detail {

// 256-bit set over solver vertex indices.
struct VertexSet {
  std::array<std::uint64_t, 4> w{0, 0, 0, 0};
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  int first() const {
    for (int blk = 0; blk < 4; ++blk)
      if (w[static_cast<std::size_t>(blk)] != 0)
        return blk * 64 + std::countr_zero(w[static_cast<std::size_t>(blk)]);
    return -1;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int k = 0; k < 4; ++k) w[static_cast<std::size_t>(k)] &= o.w[static_cast<std::size_t>(k)];
    return *this;
  }
  VertexSet and_not(const VertexSet& o) const {
    VertexSet r;
    for (int k = 0; k < 4; ++k)
      r.w[static_cast<std::size_t>(k)] =
          w[static_cast<std::size_t>(k)] & ~o.w[static_cast<std::size_t>(k)];
    return r;
  }
};

// Greedy clique cover of the candidate set, emitted in cover order. At most
// one vertex per clique can join an independent set, so a vertex listed under
// the k-th clique can extend the current set by at most k more vertices; that
// per-vertex bound drives the branch order.
inline void clique_cover_order(VertexSet cand, const std::vector<VertexSet>& adj,
                               std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int cliques = 0;
  while (cand.any()) {
    ++cliques;
    int v = cand.first();
    cand.reset(v);
    order.push_back(v);
    bound.push_back(cliques);
    VertexSet common = cand;
    common &= adj[static_cast<std::size_t>(v)];
    while (common.any()) {
      int u = common.first();
      cand.reset(u);
      common.reset(u);
      order.push_back(u);
      bound.push_back(cliques);
      common &= adj[static_cast<std::size_t>(u)];
    }
  }
}

}  // namespace detail

struct IndependentSetResult {
  int size = 0;
  std::vector<Mask> witness;  // one maximum independent set, sorted masks
};

// Exact independence number of J(n,d) by branch and bound with the greedy
// clique-cover bound. Refuses graphs with more than kExactSolverVertexCap
// vertices; use greedy_family beyond that scale.
inline IndependentSetResult max_independent_set_exact(int n, int d) {
  if (n < 0 || d < 0 || d > n)
    throw validation_error("max_independent_set_exact: need 0 <= d <= n");
  const Integer vcount = binomial(n, d);
  if (vcount > kExactSolverVertexCap)
    throw cap_error("max_independent_set_exact: J(" + std::to_string(n) + "," +
                    std::to_string(d) + ") has " + vcount.str() +
                    " vertices, above the exact-solver cap " +
                    std::to_string(kExactSolverVertexCap) + "; use greedy_family");
  const std::vector<Mask> verts = k_subsets(n, d);
  const int V = static_cast<int>(verts.size());
  std::vector<detail::VertexSet> adj(static_cast<std::size_t>(V));
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j)
      if (i != j && johnson_graph_adjacent(verts[static_cast<std::size_t>(i)],
                                           verts[static_cast<std::size_t>(j)]))
        adj[static_cast<std::size_t>(i)].set(j);

  std::vector<int> best, current;
  detail::VertexSet all;
  for (int i = 0; i < V; ++i) all.set(i);
  auto expand = [&](auto&& self, detail::VertexSet cand) -> void {
    if (!cand.any()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    std::vector<int> order, bound;
    detail::clique_cover_order(cand, adj, order, bound);
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (static_cast<int>(current.size()) + bound[static_cast<std::size_t>(k)] <=
          static_cast<int>(best.size()))
        return;  // every earlier vertex has an equal or smaller bound
      const int v = order[static_cast<std::size_t>(k)];
      cand.reset(v);
      current.push_back(v);
      self(self, cand.and_not(adj[static_cast<std::size_t>(v)]));
      current.pop_back();
    }
  };
  expand(expand, all);

  IndependentSetResult res;
  res.size = static_cast<int>(best.size());
  for (int i : best) res.witness.push_back(verts[static_cast<std::size_t>(i)]);
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

// Randomized greedy construction of a family of the requested size.
// Deterministic in the seed; a failure after the restart budget is a search
// failure, not a proof that no such family exists.
inline std::optional<std::vector<Mask>> greedy_family(int m, int d, int target,
                                                      std::uint64_t seed, int restarts = 200) {
  if (m < 0 || d < 0 || target < 0) throw validation_error("greedy_family: negative argument");
  if (Integer(target) > best_bound(m, d))
    throw validation_error("greedy_family: target " + std::to_string(target) +
                           " exceeds best_bound(" + std::to_string(m) + "," + std::to_string(d) +
                           ") = " + best_bound(m, d).str());
  if (target == 0) return std::vector<Mask>{};
  if (m == 0 || d == 0)
    throw validation_error("greedy_family: no nonempty family exists for m = 0 or d = 0");
  const int n = m + d;
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int r = 0; r < restarts; ++r) {
    std::vector<Mask> fam;
    const int attempts = 64 * target + 64;
    for (int t = 0; t < attempts && static_cast<int>(fam.size()) < target; ++t) {
      for (int e = 0; e < n; ++e) perm[static_cast<std::size_t>(e)] = e;
      Mask s = 0;
      for (int j = 0; j < d; ++j) {  // partial Fisher-Yates draw of a d-subset
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
    if (static_cast<int>(fam.size()) == target) {
      std::sort(fam.begin(), fam.end());
      return fam;
    }
  }
  return std::nullopt;
}

inline Integer certified_ch_bound(int m, int d) {
  Integer b = best_bound(m, d);
  if (m == 0 || d == 0) return 0;
  if (m == 1) return std::min(b, Integer(1));
  if (m == 2) return std::min(b, Integer((d + 2) / 2));
  if (m == 3 && d == 3) return std::min(b, Integer(max_independent_set_exact(6, 3).size));
  return b;
}

struct BoundReport {
  int m = 0;
  int d = 0;
  Integer coding;
  Integer johnson;
  Integer best;
  std::optional<int> exact;            // independence number of J(m+d,d)
  std::vector<Mask> witness;           // maximum independent set when exact
};

inline BoundReport make_report(int m, int d, bool with_exact) {
  BoundReport r;
  r.m = m;
  r.d = d;
  r.coding = coding_bound(m, d);
  r.johnson = johnson_bound(m, d);
  r.best = best_bound(m, d);
  if (with_exact) {
    auto s = max_independent_set_exact(m + d, d);
    r.exact = s.size;
    r.witness = std::move(s.witness);
  }
  return r;
}

}  // namespace sparsekl::bounds
