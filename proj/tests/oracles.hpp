#pragma once

// Brute-force reference computations used only by the tests. They work on
// explicit index vectors and Rational sums, never on the bitmask/scaled
// integer paths used by the library.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hassett/rational.hpp"
#include "hassett/weights.hpp"

namespace oracle {

using hassett::Rational;
using Subset = std::vector<int>;  // 1-based, sorted

inline void for_each_subset(const std::vector<int>& pool, const std::function<void(const Subset&)>& visit) {
  Subset current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pool.size()) {
      visit(current);
      return;
    }
    rec(k + 1);
    current.push_back(pool[k]);
    rec(k + 1);
    current.pop_back();
  };
  rec(0);
}

inline std::vector<int> iota_pool(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

inline Rational sum_of(const std::vector<Rational>& w, const Subset& s) {
  Rational total(0);
  for (int i : s) total = total + w[static_cast<std::size_t>(i - 1)];
  return total;
}

inline std::vector<Subset> signature(const std::vector<Rational>& w, int min_size) {
  std::vector<Subset> out;
  for_each_subset(iota_pool(static_cast<int>(w.size())), [&](const Subset& s) {
    if (static_cast<int>(s.size()) >= min_size && sum_of(w, s) <= Rational(1)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool admissible(const std::vector<Rational>& w, int i, int j) {
  std::vector<int> others;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k)
    if (k != i && k != j) others.push_back(k);
  bool ok = true;
  for_each_subset(others, [&](const Subset& h) {
    if (h.size() < 2) return;
    auto base = sum_of(w, h);
    bool with_i = base + w[static_cast<std::size_t>(i - 1)] <= Rational(1);
    bool with_j = base + w[static_cast<std::size_t>(j - 1)] <= Rational(1);
    if (with_i != with_j) ok = false;
  });
  return ok;
}

/// All products of the generating transpositions (BFS closure).
inline std::set<std::vector<int>> closure(int n, const std::vector<std::pair<int, int>>& gens) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k + 1;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (auto [a, b] : gens) {
        auto q = p;
        // left-multiply by (a b): swap the values a and b
        for (auto& v : q) {
          if (v == a)
            v = b;
          else if (v == b)
            v = a;
        }
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Nodal divisor as the unordered pair of its sides (genus, markings).
using Side = std::pair<int, Subset>;
using NodalKey = std::pair<Side, Side>;

inline NodalKey nodal_key(Side a, Side b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline std::set<NodalKey> nodal_divisors(int g, const std::vector<Rational>& w) {
  const int n = static_cast<int>(w.size());
  std::set<NodalKey> out;
  for (int h = 0; h <= g; ++h) {
    for_each_subset(iota_pool(n), [&](const Subset& p) {
      Subset q;
      for (int k = 1; k <= n; ++k)
        if (!std::binary_search(p.begin(), p.end(), k)) q.push_back(k);
      // a side of genus k with markings S and one node is stable iff
      // 2k - 2 + sum_S + 1 > 0
      auto stable = [&](int k, const Subset& s) { return Rational(2 * k - 1) + sum_of(w, s) > Rational(0); };
      if (stable(h, p) && stable(g - h, q)) out.insert(nodal_key({h, p}, {g - h, q}));
    });
  }
  return out;
}

/// Random valid weight data with n markings, denominators <= max_den.
/// Genus 0 needs n >= 3 (otherwise no valid data exists).
inline hassett::WeightData random_weight_data(std::mt19937& rng, int n, int genus, int max_den = 12) {
  if (genus == 0 && n < 3) throw std::invalid_argument("genus 0 requires at least three markings");
  std::uniform_int_distribution<int> den_dist(1, max_den);
  for (;;) {
    std::vector<Rational> w;
    for (int k = 0; k < n; ++k) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(1, den);
      w.emplace_back(num_dist(rng), den);
    }
    if (hassett::WeightData::satisfies_total_weight(genus, w)) return hassett::WeightData(genus, w);
  }
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// Picard rank of M_{0,n}: 2^{n-1} - C(n,2) - 1.
inline long long m0n_picard_rank(int n) { return (1LL << (n - 1)) - binomial(n, 2) - 1; }

}  // namespace oracle
