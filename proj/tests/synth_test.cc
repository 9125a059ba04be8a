#include "twep/synth.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.h"
#include "twep/bounds.h"
#include "twep/errors.h"

using namespace twep;

namespace {

PauliVec q(std::string_view text) {
    return parse_pauli(text, 2);
}

/// Best separated-pair count over N(S) \ S by brute force.
uint64_t best_separation(const StabilizerSet &s, const ErrorSet &e) {
    auto sp = oracle::span(2, s.n(), s.generators());
    uint64_t best = 0;
    for (const auto &m : oracle::normalizer(2, s.n(), s.generators())) {
        if (oracle::in_span(sp, m)) {
            continue;
        }
        uint64_t a = 0;
        for (const auto &err : e.members()) {
            a += oracle::symp(m, err);
        }
        best = std::max(best, a * (e.size() - a));
    }
    return best;
}

}  // namespace

TEST(SplitCounts, IdentitySeparatesNothing) {
    auto e = enumerate_errors(3, 1, 2);
    SplitCount c = split_counts(PauliVec(2, 3), e);
    EXPECT_EQ(c.commuting, e.size());
    EXPECT_EQ(c.anticommuting, 0u);
    EXPECT_EQ(c.separated_pairs, 0u);
}

TEST(SplitCounts, PerfectSplitterOfFour) {
    ErrorSet e(2, 2, {q("II"), q("XI"), q("ZI"), q("YI")});
    SplitCount c = split_counts(q("ZI"), e);
    EXPECT_EQ(c.commuting, 2u);
    EXPECT_EQ(c.anticommuting, 2u);
    EXPECT_EQ(c.separated_pairs, 4u);
    EXPECT_EQ(c.max_side(), 2u);
}

TEST(SplitCounts, WeightOneOnTwoQubits) {
    auto e = enumerate_errors(2, 1, 2);
    SplitCount c = split_counts(q("XI"), e);
    EXPECT_EQ(c.commuting, 5u);
    EXPECT_EQ(c.anticommuting, 2u);
    EXPECT_EQ(c.separated_pairs, 10u);
}

TEST(SplitCounts, Preconditions) {
    auto e3 = enumerate_errors(2, 1, 3);
    EXPECT_THROW(split_counts(parse_pauli("X,I", 3), e3), std::invalid_argument);
    auto e = enumerate_errors(2, 1, 2);
    EXPECT_THROW(split_counts(q("XII"), e), DimensionMismatch);
}

TEST(ChooseGenerator, SingleQubitPair) {
    ErrorSet e(2, 1, {q("X"), q("Z")});
    PauliVec m = choose_generator(StabilizerSet(2, 1), e);
    EXPECT_EQ(render(m), "X");
    SplitCount c = split_counts(m, e);
    EXPECT_EQ(c.commuting, 1u);
    EXPECT_EQ(c.anticommuting, 1u);
}

TEST(ChooseGenerator, BalancedOnFourQubits) {
    auto e = enumerate_errors(4, 1, 2);
    PauliVec m = choose_generator(StabilizerSet(2, 4), e);
    SplitCount c = split_counts(m, e);
    EXPECT_LE(c.max_side(), 9u);
    EXPECT_LT(static_cast<double>(c.max_side()), 13.0 / 2 + std::sqrt(13.0) / 2);
    EXPECT_EQ(c.separated_pairs, best_separation(StabilizerSet(2, 4), e));
}

TEST(ChooseGenerator, IsOptimalAgainstBruteForce) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 40; rep++) {
        std::size_t n = 2 + rep % 3;
        auto gens = oracle::random_isotropic(rng, 2, n, rep % n);
        StabilizerSet s(2, n, gens);
        // Survivors of one syndrome, as the greedy protocol sees them.
        auto e = enumerate_errors(n, 1, 2);
        for (const auto &g : gens) {
            e = filter_by_outcome(e, g, 0);
        }
        if (coset_classes(e, s).size() < 2) {
            EXPECT_THROW(choose_generator(s, e), NoSeparator);
            continue;
        }
        PauliVec m = choose_generator(s, e);
        EXPECT_TRUE(in_normalizer(s, m));
        EXPECT_FALSE(is_member(s, m));
        EXPECT_EQ(split_counts(m, e).separated_pairs, best_separation(s, e));
    }
}

TEST(ChooseGenerator, MixedSyndromesScanWholeNormalizer) {
    StabilizerSet s(2, 3, std::vector<PauliVec>{q("ZZI")});
    ErrorSet e(2, 3, {q("III"), q("XII"), q("IIX")});
    PauliVec m = choose_generator(s, e);
    EXPECT_EQ(split_counts(m, e).separated_pairs, best_separation(s, e));
}

TEST(ChooseGenerator, FullRankHasNoSeparator) {
    StabilizerSet s(2, 2, std::vector<PauliVec>{q("XX"), q("ZZ")});
    ErrorSet e(2, 2, {q("II"), q("YY")});
    EXPECT_THROW(choose_generator(s, e), NoSeparator);
}

TEST(ChooseGenerator, SizeLimit) {
    ErrorSet two(2, 11, {PauliVec(2, 11), PauliVec::on_sites(2, 11, {0}, 1, 0)});
    EXPECT_THROW(choose_generator(StabilizerSet(2, 11), two), SizeLimitError);
}

TEST(GreedyStrategy, NoErrorsFinishesImmediately) {
    for (std::size_t n = 1; n <= 6; n++) {
        Strategy s = greedy_strategy(n, 0);
        Transcript t = simulate(s, PauliVec(2, n));
        EXPECT_TRUE(t.history.entries.empty());
        EXPECT_EQ(t.k_out, n);
    }
}

TEST(GreedyStrategy, Claims) {
    EXPECT_EQ(greedy_strategy(8, 1).k_claimed, thm2_k(8, 1));
    EXPECT_EQ(greedy_strategy(5, 1).k_claimed, 0);
    EXPECT_THROW(greedy_strategy(11, 1), SizeLimitError);
}

TEST(GreedyStrategy, SixAndSevenPairs) {
    for (std::size_t n : {6u, 7u}) {
        Strategy s = greedy_strategy(n, 1);
        Report r = verify(s, {4});
        EXPECT_TRUE(r.pass) << n;
        EXPECT_LE(static_cast<long>(r.max_measurements), ceil_log2(count_errors(n, 1, 2)) + 2);
        EXPECT_GE(r.k_min, std::max(0L, thm2_k(n, 1)));
    }
}
