#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpi/partition.hpp"
#include "oracles.hpp"

using lpi::Partition;
using lpi::oracle_genfun;

namespace {

Partition random_partition(std::mt19937& rng, int max_parts, int max_part)
{
    std::uniform_int_distribution<int> count(0, max_parts);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> parts(static_cast<std::size_t>(count(rng)));
    for (auto& p : parts) {
        p = part(rng);
    }
    return Partition(parts);
}

} // namespace

TEST_CASE("construction and literals")
{
    const Partition p{1, 3, 3, 2};
    CHECK(p.to_string() == "3+3+2+1");
    CHECK(p.length() == 4);
    CHECK(p.size() == 9);
    CHECK(p.largest_part() == 3);
    CHECK(p.smallest_part() == 1);
    CHECK(Partition().to_string() == "empty");
    CHECK(Partition().size() == 0);
    CHECK(Partition().length() == 0);

    CHECK(Partition::parse("6+4+1") == Partition{6, 4, 1});
    CHECK(Partition::parse(" 2 + 2 ") == Partition{2, 2});
    CHECK(Partition::parse("empty").empty());
    CHECK_THROWS_AS((void)Partition::parse("1+2"), std::invalid_argument);
    CHECK_THROWS_AS((void)Partition::parse("2+0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS((void)Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
}

TEST_CASE("phi")
{
    CHECK(phi(Partition{5, 3, 3, 2, 1}, 1) == Partition{6, 4, 4, 3, 2});
    CHECK(phi(Partition{}, 7).empty());
    CHECK(phi(Partition{2}, 4) == Partition{6});
}

TEST_CASE("oplus")
{
    CHECK(oplus(Partition{3, 2, 1, 1}, Partition{4, 2, 2, 1, 1}) == Partition{4, 3, 2, 2, 2, 1, 1, 1, 1});
    CHECK(oplus(Partition{5, 1}, Partition{}) == Partition{5, 1});
    CHECK(oplus(Partition{1}, Partition{1}) == Partition{1, 1});
}

TEST_CASE("s_tail")
{
    CHECK(s_tail(Partition{6, 4, 2, 1}, 2) == Partition{2, 1});
    CHECK(s_tail(Partition{}, 3).empty());
    CHECK(s_tail(Partition{3, 3, 1}, 3) == Partition{3, 3, 1});
}

TEST_CASE("satisfies_gap")
{
    CHECK_FALSE(satisfies_gap(Partition{2, 1}, 2, 1));
    CHECK(satisfies_gap(Partition{5, 3, 1}, 2, 1));
    CHECK_FALSE(satisfies_gap(Partition{3, 2, 1}, 3, 2));
    CHECK(satisfies_gap(Partition{}, 2, 1));
    CHECK(satisfies_gap(Partition{4}, 9, 1));
    CHECK_THROWS_AS((void)satisfies_gap(Partition{4}, 2, 0), std::invalid_argument);
}

TEST_CASE("kr_i1_predicate")
{
    CHECK(kr_i1_predicate(Partition{2, 1}));
    CHECK_FALSE(kr_i1_predicate(Partition{1, 1}));
    CHECK(kr_i1_predicate(Partition{3, 1}));
    CHECK(kr_i1_predicate(Partition{3, 3}));
    CHECK_FALSE(kr_i1_predicate(Partition{3, 3, 3}));
    CHECK_FALSE(kr_i1_predicate(Partition{3, 2}));
}

TEST_CASE("partitions_of")
{
    const auto five = lpi::partitions_of(5);
    REQUIRE(five.size() == 7);
    CHECK(five.front() == Partition{1, 1, 1, 1, 1});
    CHECK(five.back() == Partition{5});
    CHECK(lpi::partitions_of(0).size() == 1);
    // p(20) = 627
    CHECK(lpi::partitions_of(20).size() == 627);
}

TEST_CASE("oracle_genfun")
{
    const auto gap = [](const Partition& p) { return satisfies_gap(p, 2, 1); };
    CHECK(oracle_genfun(gap, 6).to_string() ==
          "1 + x*q + x*q^2 + x*q^3 + x*q^4 + x^2*q^4 + x*q^5 + x^2*q^5 + x*q^6 + 2*x^2*q^6");
    const auto brute = oracle::count_partitions(6, [](const std::vector<int>& p) {
        return oracle::gap_at_distance(p, 2, 1);
    });
    CHECK(oracle::matches(oracle_genfun(gap, 6), brute));

    CHECK(oracle_genfun([](const Partition&) { return false; }, 8).to_string() == "1");

    const auto kr = oracle_genfun(lpi::kr_i1_predicate, 3);
    lpi::Integer at_q3 = 0;
    for (int m = 0; m <= 3; ++m) {
        at_q3 += kr.coeff(m, 3);
    }
    CHECK(at_q3 == 2);
    CHECK(oracle::matches(oracle_genfun(lpi::kr_i1_predicate, 14),
                          oracle::count_partitions(14, oracle::kr_i1)));
}

TEST_CASE("gap 2 counts agree with an independent recursive counter")
{
    const int q_max = 24;
    const auto g = oracle_genfun([](const Partition& p) { return satisfies_gap(p, 2, 1); }, q_max);
    for (int n = 0; n <= q_max; ++n) {
        for (int m = 0; m <= q_max; ++m) {
            CHECK(g.coeff(m, n) == oracle::rr_count(n, m, 1));
        }
    }
}

TEST_CASE("phi, oplus and s_tail laws on random partitions")
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_partition(rng, 6, 9);
        const auto b = random_partition(rng, 6, 9);
        const auto c = random_partition(rng, 6, 9);
        const int i = trial % 5;
        const int j = (trial / 5) % 4;
        CHECK(phi(phi(a, i), j) == phi(a, i + j));
        CHECK(phi(a, i).length() == a.length());
        CHECK(phi(a, i).size() == a.size() + i * a.length());
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        CHECK(oplus(a, Partition{}) == a);
        CHECK(oplus(a, b).size() == a.size() + b.size());
        const int S = 1 + trial % 6;
        CHECK(oplus(s_tail(a, S), minus(a, s_tail(a, S))) == a);
    }
}
