#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hassett/error.hpp"
#include "hassett/rational.hpp"
#include "hassett/subsets.hpp"

namespace hassett {

/// Genus plus ordered weights (a_1, ..., a_n) with 0 < a_i <= 1 and
/// 2g - 2 + sum a_i > 0. Immutable once constructed.
class WeightData {
 public:
  WeightData(int genus, std::vector<Rational> weights)
      : genus_(genus), weights_(std::move(weights)) {
    if (genus_ < 0) throw Error(ErrorCode::invalid_argument, "genus must be nonnegative");
    if (weights_.empty()) throw Error(ErrorCode::invalid_argument, "at least one marking is required");
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      const auto& a = weights_[k];
      if (a <= Rational(0) || a > Rational(1))
        throw Error(ErrorCode::weight_out_of_range,
                    "weight a_" + std::to_string(k + 1) + " = " + a.str() + " not in (0,1]");
    }
    if (!satisfies_total_weight(genus_, weights_))
      throw Error(ErrorCode::total_weight,
                  "2g-2+sum(a) = " + (Rational(2 * genus_ - 2) + total()).str() + " is not positive");
  }

  int genus() const { return genus_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  /// 1-based access.
  const Rational& weight(int i) const {
    check_index(size(), i);
    return weights_[static_cast<std::size_t>(i - 1)];
  }
  Rational total() const { return std::accumulate(weights_.begin(), weights_.end(), Rational(0)); }

  static bool satisfies_total_weight(int genus, const std::vector<Rational>& weights) {
    auto sum = std::accumulate(weights.begin(), weights.end(), Rational(2 * genus - 2));
    return sum > Rational(0);
  }

  friend bool operator==(const WeightData&, const WeightData&) = default;

 private:
  int genus_;
  std::vector<Rational> weights_;
};

namespace detail {

/// Subset sums scaled to a common denominator so that "sum <= 1" becomes an
/// integer comparison against the denominator.
class SubsetSums {
 public:
  explicit SubsetSums(const std::vector<Rational>& weights) {
    denom_ = 1;
    for (const auto& w : weights) denom_ = boost::multiprecision::lcm(denom_, w.denominator());
    scaled_.reserve(weights.size());
    for (const auto& w : weights) scaled_.push_back(w.numerator() * (denom_ / w.denominator()));
  }

  int size() const { return static_cast<int>(scaled_.size()); }

  BigInt scaled_sum(Mask m) const {
    BigInt s = 0;
    for (int i = 0; m != 0; ++i, m >>= 1)
      if (m & 1U) s += scaled_[static_cast<std::size_t>(i)];
    return s;
  }

  /// sum_{i in m} a_i <= 1
  bool fits(Mask m) const { return scaled_sum(m) <= denom_; }

  Rational sum(Mask m) const { return Rational(scaled_sum(m), denom_); }

 private:
  BigInt denom_;
  std::vector<BigInt> scaled_;
};

/// All subsets of size >= min_size with sum <= 1, ordered
/// lexicographically on their sorted index lists. No range check on min_size.
inline std::vector<IndexSet> coincidence_sets(const std::vector<Rational>& weights, int min_size) {
  const int n = static_cast<int>(weights.size());
  require_enumerable(n);
  SubsetSums sums(weights);
  std::vector<IndexSet> out;
  for (Mask m = 1; m <= full_mask(n); ++m)
    if (popcount(m) >= min_size && sums.fits(m)) out.push_back(set_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Subsets S with |S| >= min_size and sum_{i in S} a_i <= 1, in canonical
/// (lexicographic) order.
struct Signature {
  int min_size = 2;
  std::vector<IndexSet> subsets;

  bool contains(const IndexSet& s) const { return std::binary_search(subsets.begin(), subsets.end(), s); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// ---------------------------------------------------------------------------
// JSON document {"g": <int>, "weights": ["p/q" | "k", ...]}

inline nlohmann::json to_json(const WeightData& data) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : data.weights()) weights.push_back(w.str());
  return {{"g", data.genus()}, {"weights", std::move(weights)}};
}

inline WeightData weight_data_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::syntax, "weight data must be a JSON object");
  if (!doc.contains("g") || !doc.contains("weights"))
    throw Error(ErrorCode::syntax, "weight data needs keys \"g\" and \"weights\"");
  const auto& g = doc.at("g");
  if (!g.is_number_integer()) throw Error(ErrorCode::syntax, "\"g\" must be an integer");
  const auto& list = doc.at("weights");
  if (!list.is_array()) throw Error(ErrorCode::syntax, "\"weights\" must be an array");
  std::vector<Rational> weights;
  for (const auto& w : list) {
    if (w.is_string()) {
      weights.push_back(Rational::parse(w.get<std::string>()));
    } else if (w.is_number_integer()) {
      weights.emplace_back(w.get<std::int64_t>());
    } else {
      throw Error(ErrorCode::syntax, "weights must be fraction strings, got " + w.dump());
    }
  }
  return WeightData(g.get<int>(), std::move(weights));
}

inline WeightData parse_weight_data(std::string_view text) {
  auto doc = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::syntax, "invalid JSON");
  return weight_data_from_json(doc);
}

inline std::string serialize_weight_data(const WeightData& data) { return to_json(data).dump(); }

// ---------------------------------------------------------------------------

/// True iff the markings in S may lie at one smooth point: sum_S a_i <= 1.
inline bool can_coincide(const WeightData& data, IndexSet subset) {
  subset = normalize_index_set(data.size(), std::move(subset));
  if (subset.empty()) throw Error(ErrorCode::invalid_argument, "subset must be nonempty");
  Rational sum(0);
  for (int i : subset) sum += data.weight(i);
  return sum <= Rational(1);
}

inline Signature signature(const WeightData& data, int min_size) {
  if (min_size < 2 || min_size > data.size())
    throw Error(ErrorCode::invalid_argument,
                "min_size must lie in 2.." + std::to_string(data.size()));
  return Signature{min_size, detail::coincidence_sets(data.weights(), min_size)};
}

/// Weight data with the i-th marking removed (order preserved).
inline WeightData reduced_weights(const WeightData& data, int i) {
  check_index(data.size(), i);
  if (data.size() == 1) throw Error(ErrorCode::total_weight, "cannot remove the only marking");
  auto weights = data.weights();
  weights.erase(weights.begin() + (i - 1));
  if (!WeightData::satisfies_total_weight(data.genus(), weights))
    throw Error(ErrorCode::total_weight,
                "removing marking " + std::to_string(i) + " violates 2g-2+sum(a) > 0");
  return WeightData(data.genus(), std::move(weights));
}

/// Alignment between reduced_weights(A, i) and reduced_weights(A, j): common
/// markings are matched, and the slot holding a_j in the first is matched to
/// the slot holding a_i in the second. Entry k (0-based) is the 1-based slot
/// in the second list for slot k+1 of the first.
inline std::vector<int> canonical_alignment(int n, int i, int j) {
  check_index(n, i);
  check_index(n, j);
  auto slot_without = [](int removed, int original) { return original < removed ? original : original - 1; };
  std::vector<int> align;
  align.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    int target = (k == j) ? i : k;
    align.push_back(slot_without(j, target));
  }
  return align;
}

/// Size-3+ signatures of A and B agree once A's indices are relabelled by
/// align (1-based images, align[k-1] = image of k).
inline bool weight_data_equivalent(const WeightData& a, const WeightData& b, const std::vector<int>& align) {
  if (a.genus() != b.genus()) throw Error(ErrorCode::shape_mismatch, "genus mismatch");
  if (a.size() != b.size()) throw Error(ErrorCode::shape_mismatch, "length mismatch");
  const int n = a.size();
  if (static_cast<int>(align.size()) != n)
    throw Error(ErrorCode::shape_mismatch, "alignment has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int image : align) {
    check_index(n, image);
    if (seen[static_cast<std::size_t>(image - 1)])
      throw Error(ErrorCode::invalid_argument, "alignment is not a bijection");
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
  auto sig_a = detail::coincidence_sets(a.weights(), 3);
  auto sig_b = detail::coincidence_sets(b.weights(), 3);
  if (sig_a.size() != sig_b.size()) return false;
  std::vector<IndexSet> mapped;
  mapped.reserve(sig_a.size());
  for (const auto& s : sig_a) {
    IndexSet t;
    for (int i : s) t.push_back(align[static_cast<std::size_t>(i - 1)]);
    std::sort(t.begin(), t.end());
    mapped.push_back(std::move(t));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == sig_b;
}

inline std::vector<int> identity_alignment(int n) {
  std::vector<int> align(static_cast<std::size_t>(n));
  std::iota(align.begin(), align.end(), 1);
  return align;
}

}  // namespace hassett
