#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpi/series.hpp"
#include "oracles.hpp"

using lpi::Integer;
using lpi::Monomial;
using lpi::Series;

TEST_CASE("monomial")
{
    const auto one = Series::monomial(1, 0, 0, 4, 4);
    CHECK(one.to_string() == "1");
    CHECK(one.coeff(0, 0) == 1);
    CHECK(one.term_count() == 1);

    CHECK(Series::monomial(1, 1, 1, 4, 4).to_string() == "x*q");
    CHECK(Series::monomial(1, 2, 6, 4, 10).to_string() == "x^2*q^6");
    CHECK(Series::monomial(-3, 2, 6, 4, 10).to_string() == "-3*x^2*q^6");

    // outside the region the result is empty
    CHECK(Series::monomial(1, 2, 6, 4, 5).is_zero());
    CHECK(Series::monomial(1, 5, 0, 4, 5).is_zero());

    CHECK_THROWS_AS((void)Series::monomial(1, -1, 0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)Series::monomial(1, 0, -2, 4, 4), std::invalid_argument);
}

TEST_CASE("add")
{
    const auto s = Series::monomial(1, 1, 1, 3, 3) + Series::monomial(5, 0, 2, 3, 3);
    CHECK(eq_upto(Series::zero(3, 3) + s, s));
    const auto xq = Series::monomial(1, 1, 1, 3, 3);
    CHECK((xq + xq).to_string() == "2*x*q");
    CHECK((xq - xq).is_zero());
    CHECK((xq - xq).to_string() == "0");
    CHECK((-xq).to_string() == "-x*q");
    CHECK((Series::one(3, 3) - xq).to_string() == "1 - x*q");
}

TEST_CASE("mul")
{
    std::mt19937 rng(7);
    const auto s = oracle::random_series(rng, 3, 5);
    CHECK(eq_upto(Series::one(3, 5) * s, s));

    const auto p = Series::one(4, 4) + Series::monomial(1, 1, 1, 4, 4);
    CHECK((p * p).to_string() == "1 + 2*x*q + x^2*q^2");

    const auto one_minus_q = Series::one(0, 12) - Series::monomial(1, 0, 1, 0, 12);
    CHECK((one_minus_q * Series::geom_inverse(1, 0, 12)).to_string() == "1");
}

TEST_CASE("mixed truncation orders use the intersection")
{
    const auto a = Series::one(2, 9) + Series::monomial(1, 2, 9, 2, 9);
    const auto b = Series::one(5, 4) + Series::monomial(1, 1, 3, 5, 4);
    const auto sum = a + b;
    CHECK(sum.x_max() == 2);
    CHECK(sum.q_max() == 4);
    CHECK(sum.to_string() == "2 + x*q^3");
    const auto prod = a * b;
    CHECK(prod.x_max() == 2);
    CHECK(prod.q_max() == 4);
}

TEST_CASE("shift_x")
{
    CHECK(Series::one(5, 5).shift_x(3).to_string() == "1");
    CHECK(Series::monomial(1, 1, 1, 5, 5).shift_x(2).to_string() == "x*q^3");
    // pushed past q_max and dropped
    CHECK(Series::monomial(1, 2, 2, 5, 5).shift_x(2).is_zero());
}

TEST_CASE("geom_inverse")
{
    CHECK(Series::geom_inverse(1, 0, 3).to_string() == "1 + q + q^2 + q^3");
    CHECK(Series::geom_inverse(3, 0, 7).to_string() == "1 + q^3 + q^6");
    CHECK_THROWS_AS((void)Series::geom_inverse(0, 0, 7), std::invalid_argument);

    // 1/(q;q)_2 counts partitions into parts <= 2
    const auto inv = Series::geom_inverse(1, 0, 4) * Series::geom_inverse(2, 0, 4);
    const auto counts = oracle::count_partitions(4, [](const std::vector<int>& parts) {
        return parts.empty() || parts.front() <= 2;
    });
    for (int n = 0; n <= 4; ++n) {
        Integer total = 0;
        for (const auto& [mn, c] : counts) {
            if (mn.second == n) {
                total += c;
            }
        }
        CHECK(inv.coeff(0, n) == total);
    }
    CHECK(inv.to_string() == "1 + q + 2*q^2 + 2*q^3 + 3*q^4");
}

TEST_CASE("coeff and eq_upto")
{
    CHECK(Series::one(2, 2).coeff(0, 0) == 1);
    CHECK(Series::one(2, 2).coeff(2, 2) == 0);
    CHECK_THROWS_AS((void)Series::one(2, 2).coeff(3, 0), std::out_of_range);
    CHECK_THROWS_AS((void)Series::one(2, 2).coeff(0, 3), std::out_of_range);
    CHECK_THROWS_AS((void)Series::one(2, 2).coeff(-1, 0), std::out_of_range);

    std::mt19937 rng(11);
    const auto s = oracle::random_series(rng, 4, 4);
    CHECK(eq_upto(s, s));
    auto t = s;
    t.add_term(4, 4, 1);
    CHECK_FALSE(eq_upto(s, t));
    CHECK(eq_upto(s, t.truncated(4, 3)));
}

TEST_CASE("coefficients are exact beyond 64 bits")
{
    auto s = Series::monomial(Integer(1) << 62, 0, 0, 0, 0);
    s = s * s * s;
    CHECK(s.coeff(0, 0) == (Integer(1) << 186));
}

TEST_CASE("times_monomial and evaluate_at_one")
{
    const auto p = Series::one(3, 6) + Series::monomial(2, 1, 1, 3, 6);
    CHECK(p.times_monomial({1, 2}).to_string() == "x*q^2 + 2*x^2*q^3");
    CHECK(p.times_monomial({1, 2}, -1).to_string() == "-x*q^2 - 2*x^2*q^3");
    CHECK(p.evaluate_at_one() == 3);
    CHECK(Monomial{0, 0}.to_string() == "1");
    CHECK(Monomial{1, 1}.to_string() == "x*q");
    CHECK(Monomial{0, 4}.to_string() == "q^4");
    CHECK(Monomial{3, 0}.to_string() == "x^3");
}

TEST_CASE("ring laws on random series")
{
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> order(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const int xm = order(rng);
        const int qm = order(rng) + 1;
        const auto a = oracle::random_series(rng, xm, qm);
        const auto b = oracle::random_series(rng, xm, qm);
        const auto c = oracle::random_series(rng, xm, qm);
        CHECK(eq_upto(a * b, b * a));
        CHECK(eq_upto((a * b) * c, a * (b * c)));
        CHECK(eq_upto(a * (b + c), a * b + a * c));
        CHECK(oracle::matches(a * b, oracle::naive_product(a, b, xm, qm)));
    }
}

TEST_CASE("shift_x composes additively")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_series(rng, 4, 12);
        for (int s1 = 1; s1 <= 3; ++s1) {
            for (int s2 = 1; s2 <= 3; ++s2) {
                CHECK(eq_upto(a.shift_x(s1).shift_x(s2), a.shift_x(s1 + s2)));
            }
        }
    }
}

TEST_CASE("(1 - q^j) inverts geom_inverse(j)")
{
    for (int j = 1; j <= 12; ++j) {
        const auto f = Series::one(2, 30) - Series::monomial(1, 0, j, 2, 30);
        CHECK((f * Series::geom_inverse(j, 2, 30)).to_string() == "1");
    }
}
