#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hassett/admissible.hpp"
#include "hassett/error.hpp"
#include "hassett/subsets.hpp"
#include "hassett/weights.hpp"

namespace hassett {

// ---------------------------------------------------------------------------
// Morphisms

/// Forgetful map keeping only the markings in `keep` exists iff
/// 2g - 2 + sum_{keep} a_i > 0.
inline bool forgetful_exists(const WeightData& data, IndexSet keep) {
  keep = normalize_index_set(data.size(), std::move(keep));
  if (keep.empty()) throw Error(ErrorCode::invalid_argument, "keep must be nonempty");
  Rational sum(2 * data.genus() - 2);
  for (int i : keep) sum += data.weight(i);
  return sum > Rational(0);
}

/// Target weight data of the forgetful map; throws forgetful_not_defined.
inline WeightData forgetful_target(const WeightData& data, IndexSet keep) {
  keep = normalize_index_set(data.size(), std::move(keep));
  if (!forgetful_exists(data, keep))
    throw Error(ErrorCode::forgetful_not_defined, "2g-2+sum over kept markings is not positive");
  std::vector<Rational> weights;
  for (int i : keep) weights.push_back(data.weight(i));
  return WeightData(data.genus(), std::move(weights));
}

inline IndexSet complement(int n, const IndexSet& drop) {
  auto normalized = normalize_index_set(n, drop);
  IndexSet keep;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(normalized.begin(), normalized.end(), i)) keep.push_back(i);
  return keep;
}

inline void require_same_shape(const WeightData& a, const WeightData& b) {
  if (a.genus() != b.genus()) throw Error(ErrorCode::shape_mismatch, "genus mismatch");
  if (a.size() != b.size()) throw Error(ErrorCode::shape_mismatch, "length mismatch");
}

/// Reduction M_{g,A} -> M_{g,B} exists iff a_i >= b_i for all i.
inline bool reduction_exists(const WeightData& a, const WeightData& b) {
  require_same_shape(a, b);
  for (int i = 1; i <= a.size(); ++i)
    if (a.weight(i) < b.weight(i)) return false;
  return true;
}

/// Rational tails I (|I| >= 3) that are divisors for A but collapse for B:
/// sum_I b_i <= 1 < sum_I a_i.
inline std::vector<IndexSet> contracted_divisors(const WeightData& a, const WeightData& b) {
  if (!reduction_exists(a, b)) throw Error(ErrorCode::not_a_reduction, "weights of the source must dominate the target");
  const int n = a.size();
  require_enumerable(n);
  detail::SubsetSums sa(a.weights()), sb(b.weights());
  std::vector<IndexSet> out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (popcount(m) >= 3 && sb.fits(m) && !sa.fits(m)) out.push_back(set_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Boundary divisors

struct BoundaryDivisor {
  enum class Kind { irreducible, nodal, collision };

  Kind kind = Kind::irreducible;
  int genus = 0;  // h, nodal only
  IndexSet set;   // P for nodal, S for collision

  static BoundaryDivisor irreducible() { return {}; }
  static BoundaryDivisor nodal(int h, IndexSet p) { return {Kind::nodal, h, std::move(p)}; }
  static BoundaryDivisor collision(IndexSet s) { return {Kind::collision, 0, std::move(s)}; }

  friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
  friend auto operator<=>(const BoundaryDivisor& a, const BoundaryDivisor& b) {
    return std::tie(a.kind, a.genus, a.set) <=> std::tie(b.kind, b.genus, b.set);
  }
};

/// Canonical label of the nodal divisor splitting off genus h with markings P:
/// the side of smaller genus is named, and for g = 2h the side containing
/// marking 1.
inline BoundaryDivisor canonical_nodal(int g, int n, int h, IndexSet p) {
  if (h < 0 || h > g) throw Error(ErrorCode::invalid_argument, "node genus out of range");
  p = normalize_index_set(n, std::move(p));
  const bool swap = (2 * h > g) || (2 * h == g && (p.empty() || p.front() != 1));
  if (!swap) return BoundaryDivisor::nodal(h, std::move(p));
  return BoundaryDivisor::nodal(g - h, complement(n, p));
}

inline std::vector<BoundaryDivisor> boundary_divisors(const WeightData& data) {
  const int g = data.genus();
  const int n = data.size();
  require_enumerable(n);
  detail::SubsetSums sums(data.weights());
  const Mask all = full_mask(n);
  // a genus-0 side with a node is stable iff its marked weight exceeds 1
  auto side_stable = [&](int genus, Mask m) { return genus > 0 || !sums.fits(m); };

  std::vector<BoundaryDivisor> out;
  if (g >= 1) out.push_back(BoundaryDivisor::irreducible());
  std::vector<BoundaryDivisor> nodal;
  for (int h = 0; 2 * h <= g; ++h) {
    for (Mask p = 0;; ++p) {
      bool canonical = (2 * h < g) || (p & 1U);
      if (canonical && side_stable(h, p) && side_stable(g - h, all & ~p))
        nodal.push_back(BoundaryDivisor::nodal(h, set_of(p)));
      if (p == all) break;
    }
  }
  std::sort(nodal.begin(), nodal.end());
  out.insert(out.end(), nodal.begin(), nodal.end());
  std::vector<BoundaryDivisor> collisions;
  for (Mask s = 1; s <= all; ++s)
    if (popcount(s) >= 2 && sums.fits(s)) collisions.push_back(BoundaryDivisor::collision(set_of(s)));
  std::sort(collisions.begin(), collisions.end());
  out.insert(out.end(), collisions.begin(), collisions.end());
  return out;
}

// ---------------------------------------------------------------------------
// Automorphism groups

/// (C^*)^torus_rank x prod S_k x optional projective linear group.
struct GroupDescriptor {
  struct Special {
    int pgl_degree = 2;  // PGL(pgl_degree)
    bool outside_theorem = false;
    friend bool operator==(const Special&, const Special&) = default;
  };

  int torus_rank = 0;
  std::vector<int> symmetric_factors;
  std::optional<Special> special;
  std::optional<std::vector<IndexSet>> components_witness;

  bool is_trivial() const { return torus_rank == 0 && symmetric_factors.empty() && !special; }

  /// prod k! over the symmetric factors; absent when a PGL factor is present.
  std::optional<BigInt> finite_order() const {
    if (special) return std::nullopt;
    BigInt order = 1;
    for (int k : symmetric_factors) order *= factorial(k);
    return order;
  }

  std::string special_name() const { return special ? "PGL" + std::to_string(special->pgl_degree) : ""; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

namespace detail {

inline void require_positive_genus(const WeightData& data) {
  if (data.genus() == 0)
    throw Error(ErrorCode::not_covered, "genus 0: only the Kapranov family A_{r,s}[n] is covered (see kapranov)");
}

inline GroupDescriptor admissible_descriptor(const WeightData& data) {
  GroupDescriptor d;
  auto blocks = admissibility_partition(data);
  for (const auto& b : blocks) d.symmetric_factors.push_back(static_cast<int>(b.size()));
  d.components_witness = std::move(blocks);
  return d;
}

}  // namespace detail

/// Automorphisms of the coarse moduli space, g >= 1.
inline GroupDescriptor aut_descriptor_coarse(const WeightData& data) {
  detail::require_positive_genus(data);
  const int g = data.genus();
  const int n = data.size();
  if (2 * g - 2 + n >= 3) return detail::admissible_descriptor(data);
  if (g == 1 && n == 1) return GroupDescriptor{0, {}, GroupDescriptor::Special{2, false}, std::nullopt};
  if (g == 1 && n == 2) return GroupDescriptor{2, {}, std::nullopt, std::nullopt};
  throw Error(ErrorCode::not_covered, "(g,n) not covered by the automorphism results");
}

/// Automorphisms of the moduli stack, g >= 1.
inline GroupDescriptor aut_descriptor_stack(const WeightData& data) {
  detail::require_positive_genus(data);
  const int g = data.genus();
  const int n = data.size();
  if (2 * g - 2 + n >= 3) return detail::admissible_descriptor(data);
  if (g == 1 && n == 1) return GroupDescriptor{1, {}, std::nullopt, std::nullopt};
  if (g == 1 && n == 2) return GroupDescriptor{};
  throw Error(ErrorCode::not_covered, "(g,n) not covered by the automorphism results");
}

}  // namespace hassett
