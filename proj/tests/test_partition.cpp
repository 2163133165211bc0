#include <cyclic_quiver/partition.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace cyclic_quiver;

namespace {

// Number of partitions of n with parts <= max_part, by the usual two-way recursion.
long count_partitions(int n, int max_part)
{
    if (n == 0) return 1;
    if (n < 0 || max_part == 0) return 0;
    return count_partitions(n - max_part, max_part) + count_partitions(n, max_part - 1);
}

WeightVector eps(std::initializer_list<int> dense) { return WeightVector(Basis::epsilon, dense); }
WeightVector omega(std::initializer_list<int> dense) { return WeightVector(Basis::omega, dense); }

} // namespace

TEST(Partition, RejectsNonPartitions)
{
    EXPECT_THROW(Partition({1, 2}), UsageError);
    EXPECT_THROW(Partition({2, -1}), UsageError);
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_EQ(Partition({3, 1}).size(), 4);
    EXPECT_EQ(Partition({3, 1}).length(), 2);
    EXPECT_TRUE(Partition().empty());
}

TEST(WeightVector, StoresNoZeros)
{
    WeightVector w = eps({0, 2, 0});
    EXPECT_EQ(w.coords().size(), 1u);
    w.add(2, -2);
    EXPECT_TRUE(w.is_zero());
    EXPECT_THROW(w.set(0, 1), UsageError);
}

TEST(WeightVector, MixingBasesIsAUsageError)
{
    EXPECT_THROW(eps({1}) + omega({1}), UsageError);
}

TEST(EpsilonToOmega, Examples)
{
    EXPECT_EQ(epsilon_to_omega(eps({3, 1})), omega({2, 1}));
    EXPECT_EQ(epsilon_to_omega(eps({})), omega({}));
    EXPECT_EQ(epsilon_to_omega(eps({0, 1})), omega({-1, 1}));
    EXPECT_THROW(epsilon_to_omega(omega({1})), UsageError);
}

TEST(OmegaToEpsilon, Examples)
{
    EXPECT_EQ(omega_to_epsilon(omega({2, 1})), eps({3, 1}));
    EXPECT_EQ(omega_to_epsilon(omega({1})), eps({1}));
    EXPECT_EQ(omega_to_epsilon(omega({-1, 1})), eps({0, 1}));
    EXPECT_THROW(omega_to_epsilon(eps({1})), UsageError);
}

TEST(EpsilonOmega, RoundTripOnRandomVectors)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> value(-5, 5), support(0, 20);
    for (int trial = 0; trial < 2000; ++trial) {
        WeightVector w(Basis::epsilon);
        int len = support(rng);
        for (int i = 1; i <= len; ++i) w.set(i, value(rng));
        EXPECT_EQ(omega_to_epsilon(epsilon_to_omega(w)), w);
        WeightVector o(Basis::omega);
        for (int i = 1; i <= len; ++i) o.set(i, value(rng));
        EXPECT_EQ(epsilon_to_omega(omega_to_epsilon(o)), o);
    }
}

TEST(LeqOmega, Examples)
{
    EXPECT_TRUE(leq_omega(Partition({1}).omega_coords(), Partition({2, 1}).omega_coords()));
    EXPECT_FALSE(leq_omega(Partition({2}).omega_coords(), Partition({1, 1}).omega_coords()));
    EXPECT_FALSE(leq_omega(Partition({1, 1}).omega_coords(), Partition({2}).omega_coords()));
    auto v = Partition({3, 1, 1}).omega_coords();
    EXPECT_TRUE(leq_omega(v, v));
    EXPECT_FALSE(leq_omega(omega({0, 1}), omega({-1, 1})));
    EXPECT_THROW(leq_omega(eps({1}), omega({1})), UsageError);
}

// mu <= lambda in the omega product order iff lambda - mu is a partition.
TEST(LeqOmega, AgreesWithPartitionDifference)
{
    auto all = enumerate_partitions(8);
    for (const auto& mu : all)
        for (const auto& lambda : all) {
            bool ordered = leq_omega(mu.omega_coords(), lambda.omega_coords());
            bool difference = as_partition(lambda.epsilon_coords() - mu.epsilon_coords()).has_value();
            ASSERT_EQ(ordered, difference) << mu << " vs " << lambda;
        }
}

TEST(PartitionShift, Examples)
{
    EXPECT_EQ(partition_shift(Partition({1}), WeightVector::unit(2)), eps({1, 1}));
    EXPECT_EQ(partition_shift(Partition(), WeightVector::unit(1)), eps({1}));
    EXPECT_EQ(partition_shift(Partition({1, 1}), -WeightVector::unit(2)), eps({1}));
}

TEST(AsPartition, Examples)
{
    EXPECT_EQ(as_partition(eps({2, 1, 0})), Partition({2, 1}));
    EXPECT_FALSE(as_partition(eps({-1, 1})));
    EXPECT_FALSE(as_partition(eps({1, 2})));
    EXPECT_FALSE(as_partition(eps({1, 0, 1})));
    EXPECT_EQ(as_partition(eps({})), Partition());
}

TEST(EnumeratePartitions, SmallCases)
{
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
    std::vector<Partition> two{Partition(), Partition({1}), Partition({2}), Partition({1, 1})};
    EXPECT_EQ(enumerate_partitions(2), two);
    EXPECT_EQ(enumerate_partitions(4).size(), 12u);
}

TEST(EnumeratePartitions, CountsMatchRecursiveOracle)
{
    for (int d = 0; d <= 15; ++d) {
        long expected = 0;
        for (int n = 0; n <= d; ++n) expected += count_partitions(n, n);
        auto all = enumerate_partitions(d);
        ASSERT_EQ(static_cast<long>(all.size()), expected) << "d = " << d;
        std::set<Partition> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(EnumeratePartitions, OrderedBySizeThenReverseLex)
{
    auto all = enumerate_partitions(7);
    for (std::size_t j = 1; j < all.size(); ++j) {
        const auto& a = all[j - 1];
        const auto& b = all[j];
        if (a.size() == b.size())
            EXPECT_TRUE(b < a) << a << " before " << b;
        else
            EXPECT_LT(a.size(), b.size());
    }
}
