#include <cyclic_quiver/character_oracle.hpp>
#include <cyclic_quiver/crystal.hpp>

#include <gtest/gtest.h>

#include "sweep.hpp"

using namespace cyclic_quiver;

namespace {

QSeries series(int truncation, std::vector<int> coeffs)
{
    std::vector<Integer> c(coeffs.begin(), coeffs.end());
    return QSeries(truncation, std::move(c));
}

LaurentPolynomial poly(int vars, std::vector<std::pair<Exponent, std::int64_t>> terms)
{
    LaurentPolynomial p(vars);
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// Schur polynomial as the generating function of SST weights.
LaurentPolynomial schur_by_tableaux(const Partition& shape, int n)
{
    LaurentPolynomial out(n);
    for (const auto& t : enumerate_sst(shape, n)) out.add_term(weight(t).dense(n), 1);
    return out;
}

// N_m(w) by listing every multiset of m positive roots.
std::vector<long> kostant_by_multisets(const std::vector<int>& w, int truncation)
{
    const int n = static_cast<int>(w.size());
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
    std::vector<long> counts(static_cast<std::size_t>(truncation) + 1, 0);
    std::vector<int> sum(static_cast<std::size_t>(n), 0);
    auto walk = [&](auto&& self, std::size_t from, int used) -> void {
        if (sum == w) ++counts[static_cast<std::size_t>(used)];
        if (used == truncation) return;
        for (std::size_t r = from; r < roots.size(); ++r) {
            ++sum[static_cast<std::size_t>(roots[r].first)];
            --sum[static_cast<std::size_t>(roots[r].second)];
            self(self, r, used + 1);
            --sum[static_cast<std::size_t>(roots[r].first)];
            ++sum[static_cast<std::size_t>(roots[r].second)];
        }
    };
    walk(walk, 0, 0);
    return counts;
}

long binomial(long n, long k)
{
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace

TEST(RationalWeight, Examples)
{
    EXPECT_EQ(rational_weight(Partition({1}), Partition({1}), 3), RationalWeight({1, 0, -1}));
    EXPECT_EQ(rational_weight(Partition(), Partition(), 2), RationalWeight({0, 0}));
    EXPECT_EQ(rational_weight(Partition({2, 1}), Partition({1}), 4), RationalWeight({2, 1, 0, -1}));
    EXPECT_EQ(rational_weight(Partition({2}), Partition({3, 1}), 3), RationalWeight({2, -1, -3}));
    EXPECT_THROW(rational_weight(Partition({1, 1}), Partition({1}), 2), PreconditionError);
    EXPECT_THROW(RationalWeight({0, 1}), UsageError);
    auto split = split_rational_weight(RationalWeight({2, 1, 0, -1, -3}));
    EXPECT_EQ(split.plus, Partition({2, 1}));
    EXPECT_EQ(split.minus, Partition({3, 1}));
}

TEST(SchurRational, Examples)
{
    EXPECT_EQ(schur_rational(RationalWeight({1, 0})), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    EXPECT_EQ(schur_rational(RationalWeight({1, -1})), poly(2, {{{1, -1}, 1}, {{0, 0}, 1}, {{-1, 1}, 1}}));
    EXPECT_EQ(schur_rational(RationalWeight({4})), poly(1, {{{4}, 1}}));
    EXPECT_EQ(schur_rational(RationalWeight({-2})), poly(1, {{{-2}, 1}}));
}

TEST(SchurRational, MatchesTableauGeneratingFunction)
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : enumerate_partitions(5)) {
            if (shape.length() > n) continue;
            auto w = rational_weight(shape, Partition(), n);
            ASSERT_EQ(schur_rational(w), schur_by_tableaux(shape, n)) << shape << " n=" << n;
        }
}

TEST(SchurRational, DimensionAndDualityChecks)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& plus : enumerate_partitions(3))
            for (const auto& minus : enumerate_partitions(3)) {
                if (plus.length() + minus.length() > n) continue;
                auto w = rational_weight(plus, minus, n);
                auto s = schur_rational(w);
                EXPECT_EQ(s.evaluate_at_ones(), weyl_dimension(w));
                // The dual representation has the negated character.
                auto dual = schur_rational(rational_weight(minus, plus, n));
                LaurentPolynomial negated(n);
                for (const auto& [e, c] : s.terms()) {
                    Exponent f = e;
                    for (int& x : f) x = -x;
                    negated.add_term(f, c);
                }
                EXPECT_EQ(dual, negated);
            }
}

TEST(GradedCoordinateCharacter, Examples)
{
    QuiverConfig two(2, {1, 1});
    EXPECT_EQ(graded_coordinate_character(two, 0), LaurentPolynomial::constant(2));
    EXPECT_EQ(graded_coordinate_character(two, 1), poly(2, {{{1, -1}, 1}, {{-1, 1}, 1}}));
    EXPECT_EQ(graded_coordinate_character(two, 2), poly(2, {{{2, -2}, 1}, {{0, 0}, 1}, {{-2, 2}, 1}}));
    QuiverConfig three(3, {2, 1, 2});
    EXPECT_EQ(graded_coordinate_character(three, 0), LaurentPolynomial::constant(5));
    EXPECT_EQ(graded_coordinate_character(three, 1).evaluate_at_ones(), three.coordinate_count());
}

TEST(GradedCoordinateCharacter, CapacityGuard)
{
    EXPECT_THROW(graded_coordinate_character(QuiverConfig(2, {3, 3}), 1), CapacityError);
    EXPECT_THROW(graded_coordinate_character(QuiverConfig(2, {1, 1}), 7), CapacityError);
    EXPECT_NO_THROW(graded_coordinate_character(QuiverConfig(1, {3}), 2));
}

TEST(DecomposeIntoKtypes, Examples)
{
    QuiverConfig torus(2, {1, 1});
    auto parts = decompose_into_ktypes(poly(2, {{{1, -1}, 1}, {{-1, 1}, 1}}), torus);
    std::map<KTypeWeights, std::int64_t> expected{{{RationalWeight({1}), RationalWeight({-1})}, 1},
                                                  {{RationalWeight({-1}), RationalWeight({1})}, 1}};
    EXPECT_EQ(parts, expected);

    QuiverConfig gl2(1, {2});
    auto vec = schur_rational(RationalWeight({1, 0}));
    EXPECT_EQ(decompose_into_ktypes(vec, gl2), (std::map<KTypeWeights, std::int64_t>{{{RationalWeight({1, 0})}, 1}}));
    EXPECT_EQ(decompose_into_ktypes(vec * vec, gl2),
              (std::map<KTypeWeights, std::int64_t>{{{RationalWeight({2, 0})}, 1}, {{RationalWeight({1, 1})}, 1}}));
}

TEST(DecomposeIntoKtypes, RejectsNonCharacters)
{
    QuiverConfig gl2(1, {2});
    EXPECT_THROW(decompose_into_ktypes(poly(2, {{{1, 0}, 1}}), gl2), NotACharacterError);
    EXPECT_THROW(decompose_into_ktypes(poly(2, {{{0, 1}, 1}}), gl2), NotACharacterError);
    EXPECT_THROW(decompose_into_ktypes(poly(2, {{{1, 1}, -1}}), gl2), NotACharacterError);
}

TEST(DecomposeIntoKtypes, RecompositionAndDimensionAudit)
{
    for (const auto& cfg : {QuiverConfig(2, {1, 1}), QuiverConfig(2, {2, 2}), QuiverConfig(3, {1, 1, 1}),
                            QuiverConfig(1, {2}), QuiverConfig(1, {3}), QuiverConfig(2, {1, 2})}) {
        int top = cfg.coordinate_count() > 8 ? 3 : 4;
        auto characters = graded_coordinate_characters(cfg, top);
        for (int d = 0; d <= top; ++d) {
            const auto& ch = characters[static_cast<std::size_t>(d)];
            auto parts = decompose_into_ktypes(ch, cfg);
            LaurentPolynomial rebuilt(cfg.total_variables());
            long dimension = 0;
            for (const auto& [weights, mult] : parts) {
                EXPECT_GT(mult, 0);
                rebuilt += ktype_character(weights).scaled(mult);
                long dim = 1;
                for (const auto& w : weights) dim *= weyl_dimension(w);
                dimension += mult * dim;
            }
            EXPECT_EQ(rebuilt, ch);
            EXPECT_EQ(dimension, binomial(cfg.coordinate_count() + d - 1, d));
        }
    }
}

TEST(HarmonicOracle, Examples)
{
    KType arrow(2, {{Partition({1}), Partition()}, {Partition(), Partition({1})}});
    EXPECT_EQ(harmonic_multiplicity_oracle(QuiverConfig(2, {1, 1}), arrow, 1), series(1, {0, 1}));
    for (const auto& cfg : {QuiverConfig(2, {1, 1}), QuiverConfig(2, {2, 2}), QuiverConfig(3, {1, 1, 1})})
        EXPECT_EQ(harmonic_multiplicity_oracle(cfg, KType::trivial(cfg.k()), cfg.n()), QSeries::one(cfg.n()));
}

TEST(HarmonicOracle, Preconditions)
{
    QuiverConfig cfg(2, {1, 1});
    KType wide(2, {{Partition({1}), Partition({1})}, {Partition(), Partition()}});
    EXPECT_THROW(harmonic_multiplicity_oracle(cfg, wide, 1), PreconditionError);
    EXPECT_THROW(harmonic_multiplicity_oracle(cfg, KType::trivial(2), 2), PreconditionError);
    EXPECT_THROW(harmonic_multiplicity_oracle(cfg, KType::trivial(3), 1), PreconditionError);
}

// For k = 1 the oracle computes generalized exponents of GL_n; for the adjoint
// type they are q + ... + q^{n-1}, and they must agree with Hesselink's formula.
TEST(HarmonicOracle, OneNodeMatchesHesselink)
{
    QuiverConfig cfg(1, {3});
    auto table = harmonic_multiplicity_table(cfg, 3);
    for (const auto& [nu, s] : table) {
        auto w = rational_weight(nu.node(1).plus, nu.node(1).minus, 3);
        EXPECT_EQ(s, hesselink_exponent(w, 3)) << w;
    }
    KType adjoint(1, {{Partition({1}), Partition({1})}});
    EXPECT_EQ(table.at(adjoint), series(3, {0, 1, 1, 0}));
}

TEST(QKostant, Examples)
{
    EXPECT_EQ(q_kostant_partition(WeightVector(Basis::epsilon), 3, 4), QSeries::one(4));
    EXPECT_EQ(q_kostant_partition(WeightVector(Basis::epsilon, {1, -1}), 2, 4), series(4, {0, 1}));
    EXPECT_EQ(q_kostant_partition(WeightVector(Basis::epsilon, {1, 0, -1}), 3, 4), series(4, {0, 1, 1}));
    EXPECT_TRUE(q_kostant_partition(WeightVector(Basis::epsilon, {-1, 1}), 2, 4).is_zero());
    EXPECT_TRUE(q_kostant_partition(WeightVector(Basis::epsilon, {1, 0, 0, -1}), 3, 4).is_zero());
}

TEST(QKostant, MatchesRootMultisetEnumeration)
{
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        // All zero-sum vectors with entries in [-2, 2].
        auto visit = [&](auto&& self, int j) -> void {
            if (j == n) {
                int total = 0;
                for (int x : w) total += x;
                if (total != 0) return;
                auto expected = kostant_by_multisets(w, 5);
                auto got = q_kostant_partition(WeightVector::from_dense(Basis::epsilon, w), n, 5);
                for (int d = 0; d <= 5; ++d) ASSERT_EQ(got[d], expected[static_cast<std::size_t>(d)]);
                return;
            }
            for (int v = -2; v <= 2; ++v) {
                w[static_cast<std::size_t>(j)] = v;
                self(self, j + 1);
            }
        };
        visit(visit, 0);
    }
}

TEST(Hesselink, Examples)
{
    EXPECT_EQ(hesselink_exponent(RationalWeight({1, -1}), 4), series(4, {0, 1}));
    EXPECT_EQ(hesselink_exponent(RationalWeight({1, 0, -1}), 4), series(4, {0, 1, 1}));
    EXPECT_EQ(hesselink_exponent(RationalWeight({0, 0, 0}), 4), QSeries::one(4));
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        w.front() = 1;
        w.back() = -1;
        QSeries expected(n + 1);
        for (int d = 1; d < n; ++d) expected[d] = 1;
        EXPECT_EQ(hesselink_exponent(RationalWeight(w), n + 1), expected) << "n=" << n;
    }
}
