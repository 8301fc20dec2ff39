#pragma once

// Ground sets are {1,...,n} externally and bitmasks over bits 0..n-1 internally.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sparsekl {

using Mask = std::uint32_t;

inline int popcount(Mask s) { return std::popcount(s); }

inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask{1} << n) - 1u; }

inline bool subset_of(Mask a, Mask b) { return (a & b) == a; }

// All k-subsets of {0,...,n-1} in lexicographic (= numeric) mask order.
inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0u);
    return out;
  }
  Mask s = full_mask(k);
  const Mask limit = Mask{1} << n;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next mask with the same popcount.
    Mask c = s & -s;
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
    if (r >= limit) break;
  }
  return out;
}

inline std::vector<int> mask_to_elements(Mask s) {
  std::vector<int> out;
  for (int e = 0; s != 0; ++e, s >>= 1)
    if (s & 1u) out.push_back(e + 1);  // 1-based
  return out;
}

inline Mask elements_to_mask(const std::vector<int>& elems) {
  Mask s = 0;
  for (int e : elems) s |= Mask{1} << (e - 1);
  return s;
}

inline std::string mask_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_to_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace sparsekl
