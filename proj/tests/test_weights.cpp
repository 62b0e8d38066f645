#include <random>

#include <gtest/gtest.h>

#include "hassett/weights.hpp"
#include "oracles.hpp"

using namespace hassett;

namespace {

WeightData wd(int g, std::initializer_list<const char*> ws) {
  std::vector<Rational> v;
  for (const char* w : ws) v.push_back(Rational::parse(w));
  return WeightData(g, v);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(ParseWeightData, KapranovWeights) {
  auto a = parse_weight_data(R"({"g":0,"weights":["1/4","1/4","1/4","1/4","1/2","1"]})");
  EXPECT_EQ(a, wd(0, {"1/4", "1/4", "1/4", "1/4", "1/2", "1"}));
}

TEST(ParseWeightData, GenusOneSingleLightMarking) {
  auto a = parse_weight_data(R"({"g":1,"weights":["1/3"]})");
  EXPECT_EQ(a.genus(), 1);
  EXPECT_EQ(a.weight(1), Rational(1, 3));
}

TEST(ParseWeightData, ErrorsAreDistinguishable) {
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":0,"weights":["1/3","1/3","1/3"]})"); }), ErrorCode::total_weight);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,"weights":["0"]})"); }), ErrorCode::weight_out_of_range);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,"weights":["4/3"]})"); }), ErrorCode::weight_out_of_range);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,"weights":["-1/3"]})"); }), ErrorCode::weight_out_of_range);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,"weights":[0.5]})"); }), ErrorCode::syntax);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,"weights":["0.5"]})"); }), ErrorCode::syntax);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"g":1,)"); }), ErrorCode::syntax);
  EXPECT_EQ(code_of([] { parse_weight_data(R"({"weights":["1"]})"); }), ErrorCode::syntax);
}

TEST(ParseWeightData, RoundTripProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_weight_data(rng, 3 + trial % 5, trial % 3);
    auto text = serialize_weight_data(a);
    EXPECT_EQ(parse_weight_data(text), a);
    EXPECT_EQ(serialize_weight_data(parse_weight_data(text)), text);
  }
  // lowest terms on output
  EXPECT_EQ(serialize_weight_data(parse_weight_data(R"({"g":1,"weights":["2/6","4/4"]})")),
            R"({"g":1,"weights":["1/3","1"]})");
}

TEST(CanCoincide, Examples) {
  auto a = wd(2, {"1", "1/3", "1/3", "1/3"});
  EXPECT_TRUE(can_coincide(a, {2, 3, 4}));
  EXPECT_FALSE(can_coincide(a, {1, 2}));
  for (int i = 1; i <= 4; ++i) EXPECT_TRUE(can_coincide(a, {i}));
  EXPECT_EQ(code_of([&] { can_coincide(a, {5}); }), ErrorCode::index_out_of_range);
  EXPECT_EQ(code_of([&] { can_coincide(a, {}); }), ErrorCode::invalid_argument);
}

TEST(CanCoincide, MonotoneUnderInclusion) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_weight_data(rng, 6, 1);
    for (Mask t = 1; t <= full_mask(6); ++t) {
      if (!can_coincide(a, set_of(t))) continue;
      for (Mask s = t; s != 0; s = (s - 1) & t) EXPECT_TRUE(can_coincide(a, set_of(s)));
    }
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(wd(2, {"1", "1/3", "1/3", "1/3"}), 3).subsets, (std::vector<IndexSet>{{2, 3, 4}}));
  EXPECT_TRUE(signature(wd(0, {"1", "1", "1", "1", "1"}), 2).subsets.empty());

  // brute-force oracle: all pairs except {1,2}, no triples. Genus 1 because
  // these weights sum to exactly 2, which is not valid in genus 0.
  EXPECT_THROW(wd(0, {"3/5", "3/5", "2/5", "2/5"}), Error);
  auto a = wd(1, {"3/5", "3/5", "2/5", "2/5"});
  auto expected = oracle::signature(a.weights(), 2);
  EXPECT_EQ(expected, (std::vector<IndexSet>{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(signature(a, 2).subsets, expected);
}

TEST(Signature, RejectsBadMinSize) {
  auto a = wd(0, {"1", "1", "1"});
  EXPECT_EQ(code_of([&] { signature(a, 1); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([&] { signature(a, 4); }), ErrorCode::invalid_argument);
}

TEST(Signature, MatchesExhaustiveEnumeration) {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      auto a = oracle::random_weight_data(rng, n, n < 3 ? 1 : trial % 3);
      for (int m = 2; m <= n; ++m) {
        auto sig = signature(a, m);
        EXPECT_EQ(sig.subsets, oracle::signature(a.weights(), m)) << "n=" << n << " m=" << m;
        // downward closed above min_size
        for (const auto& s : sig.subsets) {
          if (static_cast<int>(s.size()) == m) continue;
          for (std::size_t drop = 0; drop < s.size(); ++drop) {
            auto t = s;
            t.erase(t.begin() + static_cast<long>(drop));
            EXPECT_TRUE(sig.contains(t));
          }
        }
      }
    }
  }
}

TEST(ReducedWeights, Examples) {
  auto a = wd(2, {"1", "1/3", "1/3", "1/3"});
  EXPECT_EQ(reduced_weights(a, 1), wd(2, {"1/3", "1/3", "1/3"}));
  EXPECT_EQ(reduced_weights(wd(1, {"1", "1"}), 2), wd(1, {"1"}));
  auto k = wd(0, {"1/4", "1/4", "1/4", "1/4", "1/2", "1"});
  EXPECT_EQ(code_of([&] { reduced_weights(k, 6); }), ErrorCode::total_weight);
  EXPECT_EQ(code_of([&] { reduced_weights(k, 7); }), ErrorCode::index_out_of_range);
}

TEST(CanonicalAlignment, MatchesSwappedSlot) {
  // removing 1 vs 4 from n=4: slots (2,3,4) -> (1,2,3); index 4 in the first maps to slot of 1
  EXPECT_EQ(canonical_alignment(4, 1, 4), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(canonical_alignment(4, 2, 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(canonical_alignment(5, 4, 2), (std::vector<int>{1, 3, 2, 4}));
}

TEST(WeightDataEquivalent, Examples) {
  auto a = wd(2, {"1", "1/3", "1/3", "1/3"});
  // reduced(A,1) = (1/3,1/3,1/3) has signature {{1,2,3}}; reduced(A,4) = (1,1/3,1/3) has none
  EXPECT_EQ(oracle::signature(reduced_weights(a, 1).weights(), 3), (std::vector<IndexSet>{{1, 2, 3}}));
  EXPECT_TRUE(oracle::signature(reduced_weights(a, 4).weights(), 3).empty());
  EXPECT_FALSE(weight_data_equivalent(reduced_weights(a, 1), reduced_weights(a, 4), canonical_alignment(4, 1, 4)));
  EXPECT_TRUE(weight_data_equivalent(a, a, identity_alignment(4)));
  EXPECT_TRUE(weight_data_equivalent(reduced_weights(a, 2), reduced_weights(a, 3), canonical_alignment(4, 2, 3)));
}

TEST(WeightDataEquivalent, ShapeErrors) {
  auto a = wd(2, {"1", "1/3"});
  EXPECT_EQ(code_of([&] { weight_data_equivalent(a, wd(1, {"1", "1/3"}), identity_alignment(2)); }), ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([&] { weight_data_equivalent(a, wd(2, {"1"}), identity_alignment(2)); }), ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([&] { weight_data_equivalent(a, a, {1, 1}); }), ErrorCode::invalid_argument);
}

TEST(WeightDataEquivalent, IsAnEquivalenceRelation) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 5;
    std::vector<WeightData> pool;
    for (int k = 0; k < 4; ++k) pool.push_back(oracle::random_weight_data(rng, n, 1, 6));
    auto id = identity_alignment(n);
    for (const auto& x : pool) {
      EXPECT_TRUE(weight_data_equivalent(x, x, id));
      for (const auto& y : pool) {
        EXPECT_EQ(weight_data_equivalent(x, y, id), weight_data_equivalent(y, x, id));
        for (const auto& z : pool) {
          if (weight_data_equivalent(x, y, id) && weight_data_equivalent(y, z, id)) {
            EXPECT_TRUE(weight_data_equivalent(x, z, id));
          }
        }
      }
    }
  }
}
