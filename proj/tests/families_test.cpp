#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syncx/errors.hpp"
#include "syncx/families.hpp"
#include "syncx/reset.hpp"

using namespace syncx;

namespace {

StateSet q(std::initializer_list<int> labels) { return StateSet::from_labels(labels); }

std::vector<int> row_labels(const Dfa& dfa, Letter a) {
    std::vector<int> out;
    for (State s : dfa.row(a)) out.push_back(static_cast<int>(s) + 1);
    return out;
}

std::vector<FamilySpec> every_family_up_to(int size) {
    std::vector<FamilySpec> out;
    for (int m = 3; m <= size; ++m) {
        out.push_back({FamilyName::AOdd, m});
        out.push_back({FamilyName::AEven, m});
        out.push_back({FamilyName::Conservative, m});
        out.push_back({FamilyName::MSeries, m});
        out.push_back({FamilyName::MPrime, m});
        out.push_back({FamilyName::Cerny, m});
        if (m >= 4) out.push_back({FamilyName::BSeries, m});
    }
    out.push_back({FamilyName::Cerny, 2});
    return out;
}

}  // namespace

TEST(Families, AOddThreeTable) {
    const Dfa dfa = a_odd(3);
    EXPECT_EQ(row_labels(dfa, 0), (std::vector<int>{2, 3, 1, 5, 4}));
    EXPECT_EQ(row_labels(dfa, 1), (std::vector<int>{1, 2, 5, 1, 3}));
}

TEST(Families, AOddStronglyConnected) {
    EXPECT_TRUE(is_strongly_connected(a_odd(5)));
}

TEST(Families, AEvenFourB) {
    const Dfa dfa = a_even(4);
    EXPECT_EQ(dfa.n(), 8u);
    EXPECT_EQ(row_labels(dfa, 0), (std::vector<int>{2, 3, 4, 1, 6, 7, 8, 5}));
    EXPECT_EQ(row_labels(dfa, 1), (std::vector<int>{1, 2, 3, 8, 1, 2, 4, 4}));
    EXPECT_TRUE(is_strongly_connected(dfa));
    EXPECT_TRUE(is_synchronizing(dfa));
}

TEST(Families, ConservativeFour) {
    const Dfa dfa = conservative(4);
    EXPECT_EQ(preimage(dfa, q({5, 6, 7}), 0), q({5, 6, 7, 8}));
    EXPECT_EQ(preimage(dfa, q({5, 6, 7, 8}), 1), q({4}));
    EXPECT_EQ(preimage(dfa, q({5, 6, 7, 8}), 0), q({5, 6, 7, 8}));
}

TEST(Families, ConservativeOnlyAExtendsS) {
    for (int m = 3; m <= 8; ++m) {
        const Dfa dfa = conservative(m);
        const StateSet s = StateSet::label_range(m + 1, 2 * m - 1);
        EXPECT_TRUE(s.is_proper_subset_of(preimage(dfa, s, 0))) << m;
        EXPECT_LE(preimage(dfa, s, 1).size(), s.size()) << m;
    }
}

TEST(Families, BSeriesFour) {
    const Dfa dfa = b_series(4);
    EXPECT_EQ(image(dfa, q({4, 7}), Word::parse("b")), q({8}));
    // a-cycles of lengths 4 and 3, plus a loop
    EXPECT_EQ(row_labels(dfa, 0), (std::vector<int>{2, 3, 4, 1, 6, 7, 5, 8}));
    EXPECT_TRUE(is_strongly_connected(dfa));
    EXPECT_TRUE(is_synchronizing(dfa));
}

TEST(Families, MFourC) {
    EXPECT_EQ(row_labels(m_series(4), 2), (std::vector<int>{4, 2, 3, 1}));
    EXPECT_EQ(row_labels(m_prime_series(4), 2), (std::vector<int>{1, 2, 3, 1}));
    EXPECT_EQ(row_labels(m_series(4), 0), (std::vector<int>{2, 3, 4, 2}));
    EXPECT_EQ(row_labels(m_series(4), 1), (std::vector<int>{2, 2, 3, 4}));
}

TEST(Families, MThreeAcb) {
    EXPECT_EQ(image(m_series(3), StateSet::full(3), Word::parse("acb")), q({2}));
}

TEST(Families, MPrimeFiveWord) {
    const Word w = thm5_prime_word(5);
    EXPECT_EQ(w.size(), 12u);
    EXPECT_TRUE(check_sync_word(m_prime_series(5), w).has_value());
}

TEST(Families, CernyResetLengths) {
    EXPECT_EQ(reset_length(cerny(2)), 1u);
    EXPECT_EQ(reset_length(cerny(4)), 9u);
    EXPECT_EQ(reset_length(cerny(5)), 16u);
}

TEST(Families, ParameterErrors) {
    EXPECT_THROW(a_odd(2), ConstructionError);
    EXPECT_THROW(a_even(2), ConstructionError);
    EXPECT_THROW(conservative(2), ConstructionError);
    EXPECT_THROW(b_series(3), ConstructionError);
    EXPECT_THROW(m_series(2), ConstructionError);
    EXPECT_THROW(m_prime_series(2), ConstructionError);
    EXPECT_THROW(cerny(1), ConstructionError);
    EXPECT_THROW(a_odd(17), ConstructionError);
}

TEST(Families, ParseAndMake) {
    EXPECT_EQ(parse_family("m"), FamilyName::MSeries);
    EXPECT_EQ(parse_family("b-series"), FamilyName::BSeries);
    EXPECT_FALSE(parse_family("nope").has_value());
    for (const auto& spec : every_family_up_to(4)) {
        EXPECT_EQ(parse_family(family_id(spec.name)), spec.name);
    }
    EXPECT_EQ(make_family({FamilyName::Cerny, 5}), cerny(5));
}

TEST(NamedSubset, AOddFive) {
    const FamilySpec spec{FamilyName::AOdd, 5};
    const StateSet qu = named_subset(spec, SubsetName::QU);
    const StateSet qd = named_subset(spec, SubsetName::QD);
    EXPECT_EQ(qu, q({6, 7, 8, 9}));
    EXPECT_EQ(qd, q({1, 2, 3, 4, 5}));
    EXPECT_EQ(qu | qd, StateSet::full(9));
    EXPECT_TRUE((qu & qd).empty());
    EXPECT_EQ(named_subset({FamilyName::AEven, 4}, SubsetName::QU), q({5, 6, 7, 8}));
    EXPECT_THROW(named_subset({FamilyName::BSeries, 4}, SubsetName::QU), PreconditionError);
}

TEST(Covered, AOddFive) {
    const Dfa dfa = a_odd(5);
    const StateSet qu = named_subset({FamilyName::AOdd, 5}, SubsetName::QU);
    EXPECT_TRUE(is_covered(dfa, qu | q({1}), 5));
    EXPECT_FALSE(is_covered(dfa, qu, 8));
    for (State s = 5; s < 9; ++s) EXPECT_TRUE(is_covered(dfa, dfa.states(), s));
    EXPECT_THROW(is_covered(dfa, qu, 0), PreconditionError);
    EXPECT_THROW(is_covered(dfa, q({6}), 6), PreconditionError);
    EXPECT_THROW(is_covered(a_even(4), q({5}), 4), PreconditionError);
}

TEST(Words, KnownShapes) {
    EXPECT_EQ(prop1_word(4).str(), "babaaaab" "aaabaaaab" "aaabaaaab");
    EXPECT_EQ(thm5_word(5).str(), "acb" "aaacb" "aaacb");
    EXPECT_EQ(thm5_prime_word(5).str(), "cb" "aaacb" "aaacb");
    EXPECT_EQ(greedy_seed_word(5).str(), "baaaaaaabaa");
}

TEST(Words, Lengths) {
    for (int m = 3; m <= 8; ++m) EXPECT_EQ(prop1_word(m).size(), static_cast<std::size_t>(2 * m * m - 2 * m + 2));
    for (int n = 3; n <= 12; ++n) {
        EXPECT_EQ(thm5_word(n).size(), static_cast<std::size_t>(n * n - 3 * n + 3));
        EXPECT_EQ(thm5_prime_word(n).size(), static_cast<std::size_t>(n * n - 3 * n + 2));
    }
    EXPECT_EQ(prop1_word(5).size(), 42u);
}

TEST(Words, PropOneSynchronizesToFirstState) {
    for (int m = 3; m <= 8; ++m) {
        EXPECT_EQ(image(a_odd(m), StateSet::full(2 * m - 1), prop1_word(m)), q({1})) << m;
    }
}

TEST(Words, GreedyQuWord) {
    EXPECT_EQ(greedy_qu_word(5).size(), 22u);
    EXPECT_EQ(greedy_qu_word(6).size(), 31u);
    EXPECT_EQ(greedy_qu_length(4), 14);
    EXPECT_EQ(greedy_qu_length(5), 22);
    EXPECT_EQ(greedy_qu_length(6), 31);
    for (int m = 4; m <= 8; ++m) {
        const Dfa dfa = a_odd(m);
        const StateSet qu = named_subset({FamilyName::AOdd, m}, SubsetName::QU);
        const Word w = greedy_qu_word(m);
        EXPECT_EQ(static_cast<int>(w.size()), greedy_qu_length(m)) << m;
        EXPECT_GT(preimage_word(dfa, qu, w).size(), qu.size()) << m;
        EXPECT_GE(preimage_word(dfa, qu, w).size(), static_cast<std::size_t>(m)) << m;
        EXPECT_EQ(oracle::to_set(preimage_word(dfa, qu, w)),
                  oracle::preimage(oracle::table_of(dfa), oracle::to_set(qu), oracle::word_of(w)));
    }
    EXPECT_THROW(greedy_qu_word(3), ConstructionError);
}

// Family-wide invariants.

TEST(FamilyProperties, StronglyConnectedAndSynchronizing) {
    for (const auto& spec : every_family_up_to(8)) {
        const Dfa dfa = make_family(spec);
        EXPECT_TRUE(is_strongly_connected(dfa)) << family_id(spec.name) << " " << spec.param;
        EXPECT_TRUE(is_synchronizing(dfa)) << family_id(spec.name) << " " << spec.param;
    }
}

TEST(FamilyProperties, PermutationLetters) {
    for (int m = 3; m <= 8; ++m) {
        for (const Dfa& dfa : {a_odd(m), a_even(m)}) {
            EXPECT_TRUE(dfa.is_permutation(0));
            EXPECT_FALSE(dfa.is_permutation(1));
        }
        // q_{2m-1} and q_{2m} both go to q_{m+1} under a.
        EXPECT_FALSE(conservative(m).is_permutation(0));
        EXPECT_FALSE(conservative(m).is_permutation(1));
        if (m >= 4) {
            EXPECT_TRUE(b_series(m).is_permutation(0));
            EXPECT_FALSE(b_series(m).is_permutation(1));
        }
        const Dfa mn = m_series(m);
        const Dfa mp = m_prime_series(m);
        EXPECT_TRUE(mn.is_permutation(2));
        EXPECT_FALSE(mn.is_permutation(1));
        EXPECT_FALSE(mp.is_permutation(1));
        EXPECT_FALSE(mp.is_permutation(2));
    }
}

TEST(FamilyProperties, SizesAndAlphabets) {
    for (int m = 3; m <= 8; ++m) {
        EXPECT_EQ(a_odd(m).n(), static_cast<std::size_t>(2 * m - 1));
        EXPECT_EQ(a_even(m).n(), static_cast<std::size_t>(2 * m));
        EXPECT_EQ(conservative(m).n(), static_cast<std::size_t>(2 * m));
        EXPECT_EQ(m_series(m).k(), 3u);
        EXPECT_EQ(cerny(m).k(), 2u);
    }
}
