#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hassett/error.hpp"
#include "hassett/moduli.hpp"
#include "hassett/subsets.hpp"
#include "hassett/weights.hpp"

namespace hassett {

// The tower blows up P^{n-3} along linear spans of general points
// p_1..p_{n-1}. Step r, sub-step s blows up the spans of s+r-2 points that
// contain p_{n-1},...,p_{n-r+1}, avoid p_{n-r}, and otherwise use p_1..p_{n-r-1}.
// The variety after sub-step (r,s) is the Hassett space with weights A_{r,s}[n].

inline constexpr int kMaxTowerPoints = 18;

struct TowerStep {
  int n = 5;
  int r = 1;
  int s = 1;

  /// Throws invalid_step unless n >= 5, 1 <= r <= n-3, 1 <= s <= n-r-2.
  void validate() const {
    if (n < 5) throw Error(ErrorCode::invalid_step, "the tower needs n >= 5");
    if (n > kMaxTowerPoints) throw Error(ErrorCode::too_large, "n is limited to " + std::to_string(kMaxTowerPoints));
    if (r < 1 || r > n - 3) throw Error(ErrorCode::invalid_step, "r must lie in 1..n-3");
    if (s < 1 || s > n - r - 2) throw Error(ErrorCode::invalid_step, "s must lie in 1..n-r-2");
  }

  bool is_final() const { return r == n - 3 && s == 1; }

  friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

struct BlowupCenter {
  IndexSet points;  // indices into p_1..p_{n-1}

  int dimension() const { return static_cast<int>(points.size()) - 1; }
  friend bool operator==(const BlowupCenter&, const BlowupCenter&) = default;
};

/// A_{r,s}[n] = (1/(n-r-1) x (n-r-1), s/(n-r-1), 1 x r), genus 0.
inline WeightData kapranov_weights(int n, int r, int s) {
  TowerStep{n, r, s}.validate();
  const int m = n - r - 1;
  std::vector<Rational> weights(static_cast<std::size_t>(m), Rational(1, m));
  weights.emplace_back(s, m);
  weights.insert(weights.end(), static_cast<std::size_t>(r), Rational(1));
  return WeightData(0, std::move(weights));
}

/// Centers blown up at sub-step (r,s), lexicographic. (1,1) has none and is
/// rejected.
inline std::vector<BlowupCenter> kapranov_centers(int n, int r, int s) {
  TowerStep{n, r, s}.validate();
  if (r == 1 && s == 1) throw Error(ErrorCode::invalid_step, "step (1,1) is the bare projective space; it has no centers");
  IndexSet required;
  for (int k = n - 1; k >= n - r + 1; --k) required.push_back(k);
  const int free_pool = n - r - 1;  // p_1..p_{n-r-1}
  const int free_count = s - 1;
  std::vector<BlowupCenter> out;
  for (Mask m = 0; m <= full_mask(free_pool); ++m) {
    if (popcount(m) != free_count) continue;
    IndexSet pts = set_of(m);
    pts.insert(pts.end(), required.begin(), required.end());
    std::sort(pts.begin(), pts.end());
    out.push_back(BlowupCenter{std::move(pts)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.points < b.points; });
  return out;
}

struct TowerEntry {
  TowerStep step;
  WeightData weights;
  std::vector<BlowupCenter> centers;
  std::int64_t rank;  // Picard rank after this sub-step
};

/// Full schedule (1,1), (1,2), ..., (n-3,1). Each linear center adds one to
/// the Picard rank, starting from rank 1 on P^{n-3}.
inline std::vector<TowerEntry> kapranov_tower(int n) {
  if (n < 5) throw Error(ErrorCode::invalid_step, "the tower needs n >= 5");
  if (n > kMaxTowerPoints) throw Error(ErrorCode::too_large, "n is limited to " + std::to_string(kMaxTowerPoints));
  std::vector<TowerEntry> out;
  std::int64_t rank = 1;
  for (int r = 1; r <= n - 3; ++r) {
    for (int s = 1; s <= n - r - 2; ++s) {
      std::vector<BlowupCenter> centers;
      if (!(r == 1 && s == 1)) centers = kapranov_centers(n, r, s);
      rank += static_cast<std::int64_t>(centers.size());
      out.push_back(TowerEntry{TowerStep{n, r, s}, kapranov_weights(n, r, s), std::move(centers), rank});
    }
  }
  return out;
}

/// Automorphism group of the Hassett space at step (r,s). Step (1,1) is
/// P^{n-3} itself; its PGL(n-2) is recorded but flagged as outside the
/// theorem's range.
inline GroupDescriptor kapranov_aut(int n, int r, int s) {
  TowerStep{n, r, s}.validate();
  GroupDescriptor d;
  if (r >= 2) {
    d.symmetric_factors = {n};
    return d;
  }
  if (s == 1) {
    d.special = GroupDescriptor::Special{n - 2, true};
    return d;
  }
  d.torus_rank = n - 3;
  d.symmetric_factors = {n - 2};
  if (s == n - 3) d.symmetric_factors.push_back(2);
  return d;
}

/// m = n-2 when the data is A_{1,n-3}[n] up to reordering (the Losev-Manin
/// space of (n-2)-pointed chains); nullopt otherwise.
inline std::optional<int> detect_losev_manin(const WeightData& data) {
  const int n = data.size();
  if (data.genus() != 0 || n < 5 || n > kMaxTowerPoints) return std::nullopt;
  auto have = data.weights();
  auto want = kapranov_weights(n, 1, n - 3).weights();
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (have != want) return std::nullopt;
  return n - 2;
}

// ---------------------------------------------------------------------------
// Degree feasibility for the linear system of a birational self-map of
// P^{n-3} that fixes the general points and stabilizes lines through them.

enum class CremonaClass { first_step, later_steps };  // r = 1 vs r >= 2

struct CremonaCandidate {
  int degree = 1;
  int point_multiplicity = 0;                        // d - 1 at each point
  std::vector<std::pair<int, int>> span_multiplicity;  // (h, max(d-h, 0)) for spans of h points
  bool feasible = false;
  std::string rejected_by;  // empty when feasible
};

struct CremonaReport {
  int n = 5;
  CremonaClass cls = CremonaClass::first_step;
  std::vector<CremonaCandidate> candidates;  // every d in 1..n-3

  std::vector<int> feasible_degrees() const {
    std::vector<int> out;
    for (const auto& c : candidates)
      if (c.feasible) out.push_back(c.degree);
    return out;
  }
};

inline CremonaReport feasible_cremona_degrees(int n, CremonaClass cls) {
  if (n < 5) throw Error(ErrorCode::invalid_step, "n must be at least 5");
  CremonaReport report{n, cls, {}};
  const int dim = n - 3;
  for (int d = 1; d <= dim; ++d) {
    CremonaCandidate c;
    c.degree = d;
    c.point_multiplicity = d - 1;
    // n-2 points for r = 1, n-1 for r >= 2; spans of h <= n-3 points are proper
    for (int h = 1; h <= dim; ++h) c.span_multiplicity.emplace_back(h, std::max(d - h, 0));

    if (cls == CremonaClass::first_step) {
      // A hyperplane through n-3 of the points contains n-3 codimension-two
      // spans, each of multiplicity d-(n-4); no fixed component allows at most d.
      const int codim_two_mult = std::max(d - (n - 4), 0);
      if (static_cast<std::int64_t>(dim) * codim_two_mult > d) {
        c.rejected_by = "fixed-component";
      } else if (d > 1 && codim_two_mult == 0) {
        // the map restricted to a general plane through two points is a
        // plane Cremona map, so a codimension-two span must be a base locus
        c.rejected_by = "plane-cremona";
      }
    } else {
      // degree of the image of a rational normal curve through the n-1 points
      const std::int64_t image_degree = static_cast<std::int64_t>(dim) * d - static_cast<std::int64_t>(n - 1) * (d - 1);
      if (image_degree != dim) c.rejected_by = "rational-normal-curve";
    }
    c.feasible = c.rejected_by.empty();
    report.candidates.push_back(std::move(c));
  }
  return report;
}

}  // namespace hassett
