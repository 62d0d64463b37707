#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "syncx/errors.hpp"
#include "syncx/families.hpp"
#include "syncx/reset.hpp"

using namespace syncx;

namespace {

StateSet q(std::initializer_list<int> labels) { return StateSet::from_labels(labels); }

// L_0 singletons, no member inside an earlier member, no member strictly inside a sibling.
void expect_layer_invariants(const Dfa& dfa, const LayerTrace& trace) {
    ASSERT_FALSE(trace.layers.empty());
    if (dfa.n() > 1) {
        for (StateSet s : trace.layers[0]) {
            ASSERT_EQ(s.size(), 1u);
            bool merged = false;
            for (Letter a = 0; a < dfa.k(); ++a) merged = merged || preimage(dfa, s, a).size() >= 2;
            EXPECT_TRUE(merged) << s.to_string();
        }
    }
    for (std::size_t i = 0; i < trace.layers.size(); ++i) {
        for (StateSet s : trace.layers[i]) {
            for (std::size_t j = 0; j < i; ++j) {
                for (StateSet t : trace.layers[j]) EXPECT_FALSE(s.is_subset_of(t)) << i << " " << j;
            }
            for (StateSet t : trace.layers[i]) EXPECT_FALSE(s.is_proper_subset_of(t)) << i;
        }
    }
    if (trace.found_at) {
        const auto& last = trace.layers.at(*trace.found_at);
        EXPECT_NE(std::find(last.begin(), last.end(), dfa.states()), last.end());
    }
}

}  // namespace

TEST(ShortestResetWord, Examples) {
    const auto m3 = shortest_reset_word(m_series(3));
    ASSERT_TRUE(m3);
    EXPECT_EQ(m3->size(), 3u);
    EXPECT_EQ(check_sync_word(m_series(3), *m3), 1u);
    EXPECT_EQ(shortest_reset_word(cerny(4))->size(), 9u);
    EXPECT_FALSE(shortest_reset_word(make_dfa(2, 1, {{2, 1}})).has_value());
    EXPECT_TRUE(shortest_reset_word(make_dfa(1, 1, {{1}}))->empty());
}

TEST(InverseLayers, MSeriesLayerZero) {
    for (int n = 3; n <= 9; ++n) {
        const auto trace = inverse_layers(m_series(n));
        ASSERT_FALSE(trace.layers.empty());
        EXPECT_EQ(trace.layers[0], std::vector<StateSet>{q({2})}) << n;
    }
}

TEST(InverseLayers, MSeriesEveryNthLayer) {
    for (int n = 4; n <= 8; ++n) {
        const auto trace = inverse_layers(m_series(n));
        for (int i = 0; i <= n - 3; ++i) {
            const auto index = static_cast<std::size_t>(i * n);
            ASSERT_LT(index, trace.layers.size());
            EXPECT_EQ(trace.layers[index], std::vector<StateSet>{StateSet::label_range(2, 2 + i)}) << n << " " << i;
        }
    }
}

TEST(InverseLayers, MSixFoundAt) {
    const auto trace = inverse_layers(m_series(6));
    EXPECT_EQ(trace.found_at, 21u);
    EXPECT_FALSE(trace.truncated);
}

TEST(InverseLayers, Truncation) {
    const auto trace = inverse_layers(m_series(6), 5);
    EXPECT_FALSE(trace.found_at.has_value());
    EXPECT_TRUE(trace.truncated);
    EXPECT_EQ(trace.layers.size(), 6u);
}

TEST(InverseLayers, NonSynchronizingRunsDry) {
    const auto trace = inverse_layers(make_dfa(3, 2, {{2, 3, 1}, {1, 2, 3}}));
    EXPECT_FALSE(trace.found_at.has_value());
    EXPECT_FALSE(trace.truncated);
}

TEST(InverseLayers, SingleState) {
    const auto trace = inverse_layers(make_dfa(1, 1, {{1}}));
    EXPECT_EQ(trace.found_at, 0u);
    ASSERT_EQ(trace.layers.size(), 1u);
    EXPECT_EQ(trace.layers[0], std::vector<StateSet>{q({1})});
}

TEST(InverseLayers, DefaultLimit) {
    EXPECT_EQ(default_layer_limit(6), 42u);
    EXPECT_EQ(default_layer_limit(12), 300u);
}

TEST(ResetLength, MSeries) {
    EXPECT_EQ(reset_length(m_series(7)), 31u);
    EXPECT_EQ(reset_length(m_prime_series(7)), 30u);
}

TEST(ResetLength, ASevenAgainstOracle) {
    const Dfa dfa = a_odd(4);
    const auto length = reset_length(dfa);
    ASSERT_TRUE(length);
    EXPECT_LE(*length, 26u);
    EXPECT_EQ(length, oracle::reset_length(oracle::table_of(dfa)));
}

TEST(ResetLength, NonSynchronizing) {
    EXPECT_FALSE(reset_length(make_dfa(2, 1, {{2, 1}})).has_value());
}

TEST(CheckSyncWord, Examples) {
    EXPECT_EQ(check_sync_word(a_odd(5), prop1_word(5)), 0u);
    EXPECT_TRUE(check_sync_word(m_series(5), thm5_word(5)).has_value());
    EXPECT_FALSE(check_sync_word(m_series(5), Word{}).has_value());
}

TEST(ResetProperties, MethodsAgreeOnFamilies) {
    for (int n = 3; n <= 12; ++n) {
        EXPECT_NO_THROW(reset_length(m_series(n))) << n;
        EXPECT_NO_THROW(reset_length(m_prime_series(n))) << n;
    }
    for (int m = 3; m <= 6; ++m) {
        for (const Dfa& dfa : {a_odd(m), a_even(m), conservative(m), cerny(2 * m)}) {
            const auto word = shortest_reset_word(dfa);
            const auto trace = inverse_layers(dfa);
            ASSERT_TRUE(word);
            EXPECT_EQ(trace.found_at, word->size());
            expect_layer_invariants(dfa, trace);
        }
    }
}

TEST(ResetProperties, RandomAgainstOracle) {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 600; ++iter) {
        const std::size_t n = 1 + iter % 8;
        const std::size_t k = 1 + iter % 3;
        const Dfa dfa = oracle::random_dfa(rng, n, k);
        const auto expected = oracle::reset_length(oracle::table_of(dfa));
        const auto word = shortest_reset_word(dfa);
        ASSERT_EQ(word.has_value(), expected.has_value());
        if (word) {
            EXPECT_EQ(word->size(), *expected);
            EXPECT_TRUE(check_sync_word(dfa, *word).has_value());
        }
        const auto trace = inverse_layers(dfa);
        EXPECT_EQ(trace.found_at, expected);
        expect_layer_invariants(dfa, trace);
        EXPECT_EQ(reset_length(dfa), expected);
    }
}

TEST(ResetProperties, NoShorterResetWordExists) {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + iter % 5;
        const Dfa dfa = oracle::random_dfa(rng, n, 2);
        const auto word = shortest_reset_word(dfa);
        if (!word || word->size() > 9) continue;
        const auto t = oracle::table_of(dfa);
        for (std::size_t len = 0; len < word->size(); ++len) {
            oracle::for_each_word(2, len, [&](const std::vector<int>& w) {
                EXPECT_GT(oracle::image(t, oracle::all_states(t), w).size(), 1u);
            });
        }
    }
}
