#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "hassett/error.hpp"
#include "hassett/permutation.hpp"
#include "hassett/subsets.hpp"
#include "hassett/weights.hpp"

namespace hassett {

/// Subgroup of S_n generated by transpositions. Such a group is the product of
/// the symmetric groups on the connected components of its generator graph.
struct PermGroup {
  int n = 0;
  std::vector<std::pair<int, int>> generators;
  std::vector<IndexSet> components;
  BigInt order = 1;
};

/// Explicitly enumerated set of permutations (oracle output).
struct PermSet {
  int n = 0;
  std::vector<Permutation> elements;

  BigInt order() const { return BigInt(elements.size()); }
  bool contains(const Permutation& p) const { return std::binary_search(elements.begin(), elements.end(), p); }
};

inline BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Order of the Young subgroup prod_c S_{|c|}.
inline BigInt young_order(const std::vector<IndexSet>& components) {
  BigInt order = 1;
  for (const auto& c : components) order *= factorial(static_cast<int>(c.size()));
  return order;
}

namespace detail {

// h_1..h_r range over distinct indices outside {i, j}, r >= 2.
inline bool admissible(const SubsetSums& sums, int i, int j) {
  const int n = sums.size();
  const Mask bit_i = Mask{1} << (i - 1);
  const Mask bit_j = Mask{1} << (j - 1);
  const Mask others = full_mask(n) & ~bit_i & ~bit_j;
  for (Mask h = others; h != 0; h = (h - 1) & others) {
    if (popcount(h) < 2) continue;
    if (sums.fits(h | bit_i) != sums.fits(h | bit_j)) return false;
  }
  return true;
}

inline std::vector<IndexSet> components_of(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  std::vector<IndexSet> blocks;
  std::vector<int> block_of_root(static_cast<std::size_t>(n + 1), -1);
  for (int k = 1; k <= n; ++k) {
    int root = find(k);
    auto& slot = block_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot)].push_back(k);
  }
  return blocks;
}

inline std::vector<std::pair<int, int>> admissible_pairs(const WeightData& data) {
  const int n = data.size();
  require_enumerable(n);
  SubsetSums sums(data.weights());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (admissible(sums, i, j)) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace detail

/// Whether the transposition i <-> j is admissible: for every set H of at
/// least two other markings, a_i + sum_H <= 1 exactly when a_j + sum_H <= 1.
inline bool is_admissible(const WeightData& data, int i, int j) {
  const int n = data.size();
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw Error(ErrorCode::invalid_argument, "i and j must differ");
  require_enumerable(n);
  return detail::admissible(detail::SubsetSums(data.weights()), i, j);
}

/// Connected components of the admissibility graph, each sorted, ordered by
/// smallest element.
inline std::vector<IndexSet> admissibility_partition(const WeightData& data) {
  return detail::components_of(data.size(), detail::admissible_pairs(data));
}

/// The group generated by all admissible transpositions.
inline PermGroup admissible_group(const WeightData& data) {
  PermGroup g;
  g.n = data.size();
  g.generators = detail::admissible_pairs(data);
  g.components = detail::components_of(g.n, g.generators);
  g.order = young_order(g.components);
  return g;
}

inline bool membership(const PermGroup& group, const Permutation& sigma) {
  if (sigma.degree() != group.n) throw Error(ErrorCode::shape_mismatch, "permutation degree differs from group degree");
  for (const auto& c : group.components)
    if (sigma.apply(c) != c) return false;
  return true;
}

inline constexpr int kMaxOracleDegree = 8;

/// Exhaustive filter of S_n: permutations mapping the size-3+ signature onto
/// itself. Refuses n > 8.
inline PermSet signature_preserving_group(const WeightData& data) {
  const int n = data.size();
  if (n > kMaxOracleDegree)
    throw Error(ErrorCode::too_large, "exhaustive oracle is limited to n <= 8");
  std::vector<bool> in_sig(std::size_t{1} << n, false);
  std::vector<Mask> sig;
  for (const auto& s : detail::coincidence_sets(data.weights(), 3)) {
    sig.push_back(mask_of(s));
    in_sig[mask_of(s)] = true;
  }
  PermSet out{n, {}};
  auto image = Permutation::identity(n).image();
  do {
    Permutation sigma(image);
    bool keeps = std::all_of(sig.begin(), sig.end(), [&](Mask s) { return in_sig[sigma.apply(s)]; });
    if (keeps) out.elements.push_back(std::move(sigma));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace hassett
