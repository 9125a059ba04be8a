#include "twep/errorspace.h"

#include <gtest/gtest.h>

#include <set>

#include "oracle.h"
#include "twep/errors.h"

using namespace twep;

namespace {

PauliVec q(std::string_view text) {
    return parse_pauli(text, 2);
}

/// Weight <= t operators picked out of the full operator list.
std::set<oracle::Vec> brute_force_errors(std::size_t n, std::size_t t, int d) {
    std::set<oracle::Vec> out;
    for (const auto &p : oracle::all_paulis(d, n)) {
        if (p.weight() <= t) {
            out.insert(oracle::from(p));
        }
    }
    return out;
}

}  // namespace

TEST(EnumerateErrors, Examples) {
    EXPECT_EQ(enumerate_errors(7, 1, 2).size(), 22u);
    EXPECT_EQ(enumerate_errors(9, 2, 2).size(), 352u);
    EXPECT_EQ(enumerate_errors(4, 1, 3).size(), 33u);
}

TEST(EnumerateErrors, MatchesBruteForce) {
    for (int d : {2, 3}) {
        for (std::size_t n = 1; n <= 4; n++) {
            for (std::size_t t = 0; t <= n; t++) {
                auto e = enumerate_errors(n, t, d);
                std::set<oracle::Vec> got;
                for (const auto &p : e.members()) {
                    got.insert(oracle::from(p));
                }
                EXPECT_EQ(got.size(), e.size());
                EXPECT_EQ(got, brute_force_errors(n, t, d));
            }
        }
    }
}

TEST(EnumerateErrors, IdentityFirstAndCanonicalOrder) {
    auto e = enumerate_errors(5, 2, 2);
    EXPECT_TRUE(e[0].is_identity());
    for (std::size_t i = 1; i < e.size(); i++) {
        EXPECT_TRUE(canonical_less(e[i - 1], e[i]));
    }
    EXPECT_EQ(e.weight_bound(), 2u);
}

TEST(EnumerateErrors, CountsMatchClosedForm) {
    for (int d : {2, 3}) {
        for (std::size_t n = 1; n <= 10; n++) {
            for (std::size_t t = 0; t <= std::min<std::size_t>(3, n); t++) {
                uint64_t expected = oracle::count(n, t, d);
                EXPECT_EQ(enumerate_errors(n, t, d).size(), expected);
                EXPECT_EQ(count_errors(n, t, d), BigInt(expected));
            }
        }
    }
}

TEST(EnumerateErrors, CapAndPreconditions) {
    EXPECT_THROW(enumerate_errors(20, 4, 2, 1000), SizeLimitError);
    EXPECT_THROW(enumerate_errors(3, 4, 2), std::invalid_argument);
    try {
        enumerate_errors(10, 3, 2, 100);
        FAIL();
    } catch (const SizeLimitError &e) {
        EXPECT_NE(std::string(e.what()).find("3676"), std::string::npos);
    }
}

TEST(CountErrors, Examples) {
    EXPECT_EQ(count_errors(6, 1, 2), 19);
    EXPECT_EQ(count_errors(9, 2, 2), 352);
    for (std::size_t n : {1u, 5u, 40u}) {
        EXPECT_EQ(count_errors(n, 0, 2), 1);
        EXPECT_EQ(count_errors(n, 0, 3), 1);
    }
}

TEST(CountErrors, LargeValuesAreExact) {
    // sum_j 3^j C(50, j) for j <= 5 and j <= 10, computed independently.
    EXPECT_EQ(count_errors(50, 5, 2), BigInt(534053356));
    EXPECT_EQ(count_errors(50, 10, 2), BigInt("659635231556536"));
    EXPECT_EQ(count_errors(200, 200, 2), BigInt(1) << 400);
}

TEST(FilterByOutcome, AllXOnFourQubits) {
    auto e = enumerate_errors(4, 1, 2);
    auto c = filter_by_outcome(e, q("XXXX"), 0);
    auto a = filter_by_outcome(e, q("XXXX"), 1);
    std::vector<std::string> commuting;
    for (const auto &p : c.members()) {
        commuting.push_back(render(p));
    }
    EXPECT_EQ(commuting, (std::vector<std::string>{"IIII", "XIII", "IXII", "IIXI", "IIIX"}));
    EXPECT_EQ(a.size(), 8u);
    for (const auto &p : a.members()) {
        EXPECT_EQ(oracle::symp(q("XXXX"), p), 1);
    }
    EXPECT_FALSE(c.weight_bound().has_value());
}

TEST(FilterByOutcome, IdentityMeasurement) {
    auto e = enumerate_errors(3, 1, 3);
    EXPECT_EQ(filter_by_outcome(e, PauliVec(3, 3), 0).members(), e.members());
    EXPECT_TRUE(filter_by_outcome(e, PauliVec(3, 3), 1).empty());
    EXPECT_TRUE(filter_by_outcome(e, PauliVec(3, 3), 2).empty());
}

TEST(FilterByOutcome, Mismatch) {
    auto e = enumerate_errors(3, 1, 2);
    EXPECT_THROW(filter_by_outcome(e, q("XX"), 0), DimensionMismatch);
}

TEST(ErrorSet, CheckedConstruction) {
    EXPECT_THROW(ErrorSet(2, 2, {q("XI"), q("XI")}), std::invalid_argument);
    EXPECT_THROW(ErrorSet(2, 2, {q("XII")}), DimensionMismatch);
    EXPECT_THROW(ErrorSet(2, 2, {q("XI")}, 1), std::invalid_argument);
    EXPECT_NO_THROW(ErrorSet(2, 1, {q("I"), q("X"), q("Y"), q("Z")}, 1));
}

TEST(CosetClasses, DegeneratePairMerges) {
    StabilizerSet s(2, 4, std::vector<PauliVec>{q("XXXX"), q("ZZZZ"), q("XXII"), q("ZZII")});
    ErrorSet e(2, 4, {q("YIII"), q("IYII")});
    auto classes = coset_classes(e, s);
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].members, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(classes[0].representative, 0u);
    EXPECT_TRUE(is_member(s, q("YIII") * q("IYII")));
}

TEST(CosetClasses, DistinctClasses) {
    StabilizerSet s(2, 4, std::vector<PauliVec>{q("XXXX"), q("ZZZZ"), q("XXII"), q("ZZII")});
    ErrorSet e(2, 4, {q("XIII"), q("ZIII")});
    EXPECT_EQ(coset_classes(e, s).size(), 2u);
    EXPECT_FALSE(is_member(s, q("YIII")));
}

TEST(CosetClasses, EmptyStabilizerIsIdentityPartition) {
    auto e = enumerate_errors(3, 2, 3);
    auto classes = coset_classes(e, StabilizerSet(3, 3));
    EXPECT_EQ(classes.size(), e.size());
}

TEST(CosetClasses, RepresentativeIsCanonicalLeast) {
    StabilizerSet s(2, 3, std::vector<PauliVec>{q("XXI")});
    ErrorSet e(2, 3, {q("IXI"), q("XII"), q("IIZ")});
    auto classes = coset_classes(e, s);
    ASSERT_EQ(classes.size(), 2u);
    EXPECT_EQ(classes[0].members, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(render(e[classes[0].representative]), "XII");
}
