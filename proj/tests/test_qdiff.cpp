#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpi/ideal.hpp"
#include "lpi/multisum.hpp"
#include "lpi/qdiff.hpp"
#include "oracles.hpp"

using namespace lpi;

namespace {

// sum_n q^{n^2 + c n} x^n / (q;q)_n, built from geometric factors here rather
// than through eval_H.
Series rr_sum(int c, int q_max)
{
    Series total = Series::zero(q_max, q_max);
    Series denom = Series::one(q_max, q_max);
    for (int n = 0; n * n + c * n <= q_max; ++n) {
        if (n > 0) {
            denom = denom * Series::geom_inverse(n, q_max, q_max);
        }
        total += denom.times_monomial({n, n * n + c * n});
    }
    return total;
}

} // namespace

TEST_CASE("validate")
{
    CHECK_NOTHROW(validate(system_from_ideal(rogers_ramanujan_ideal())));
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 1}, {0, 1}}, {{0, 0}, {1, 1}}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 0}, {1, 1}}, {{0, 0}, {1, 1}}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 1}, {1, 1}}, {{0, 1}, {1, 1}}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 1}, {1, 1}}, {{0, 0}, {1, 1}}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QDiffSystem{{{1, 2}, {1, 1}}, {{0, 0}, {1, 1}}, 1}), std::invalid_argument);
}

TEST_CASE("solve the Rogers-Ramanujan system")
{
    const auto sys = system_from_ideal(rogers_ramanujan_ideal());
    CHECK(sys.S == 2);
    const auto F = solve(sys, 20);
    REQUIRE(F.size() == 3);
    CHECK(F[0].coeff(1, 1) == 1);
    CHECK(F[0].coeff(1, 2) == 1);
    CHECK(F[2].coeff(1, 1) == 0);
    CHECK(F[2].coeff(1, 2) == 1);
    CHECK(eq_upto(F[0], rr_sum(0, 20)));
    CHECK(eq_upto(F[1], rr_sum(0, 20)));
    CHECK(eq_upto(F[2], rr_sum(1, 20)));
}

TEST_CASE("solve a one-dimensional system")
{
    const QDiffSystem sys{{{1}}, {{0, 0}}, 2};
    const auto F = solve(sys, 15);
    REQUIRE(F.size() == 1);
    CHECK(F[0].to_string() == "1");
}

TEST_CASE("f_from_g")
{
    const auto rr = rogers_ramanujan_ideal();
    const auto sys = system_from_ideal(rr);
    const int q_max = 20;
    const auto from_g = f_from_g(sys.A, ideal_genfun_vec(rr, q_max));
    const auto solved = solve(sys, q_max);
    for (std::size_t k = 0; k < solved.size(); ++k) {
        CHECK(eq_upto(from_g[k], solved[k]));
    }

    std::vector<Series> unit{Series::one(3, 3), Series::zero(3, 3), Series::zero(3, 3)};
    for (const auto& f : f_from_g(sys.A, unit)) {
        CHECK(f.to_string() == "1");
    }
}

TEST_CASE("KR vector of G matches the multisums")
{
    const auto kr = kanade_russell_i1_ideal();
    const auto sys = system_from_ideal(kr);
    const int q_max = 18;
    const auto F = f_from_g(sys.A, ideal_genfun_vec(kr, q_max));
    const auto p = kanade_russell_profile();
    const std::vector<BetaVector> betas{{1, 3}, {1, 3}, {1, 3}, {2, 6}, {1, 3}, {2, 6}, {3, 6}};
    for (std::size_t k = 0; k < betas.size(); ++k) {
        CHECK(eq_upto(F[k], eval_H(p, betas[k], q_max)));
    }
}

TEST_CASE("check_system")
{
    const auto sys = system_from_ideal(kanade_russell_i1_ideal());
    auto F = solve(sys, 16);
    CHECK(check_system(F, sys));
    F[3].add_term(2, 9, 1);
    CHECK_FALSE(check_system(F, sys));

    const auto p = kanade_russell_profile();
    const std::vector<BetaVector> betas{{1, 3}, {1, 3}, {1, 3}, {2, 6}, {1, 3}, {2, 6}, {3, 6}};
    std::vector<Series> H;
    for (const auto& b : betas) {
        H.push_back(eval_H(p, b, 16));
    }
    CHECK(check_system(H, sys));
}

TEST_CASE("solve agrees with A.G on both fixtures")
{
    for (const auto& ideal : {rogers_ramanujan_ideal(), kanade_russell_i1_ideal()}) {
        const auto sys = system_from_ideal(ideal);
        const auto solved = solve(sys, 20);
        const auto from_g = f_from_g(sys.A, ideal_genfun_vec(ideal, 20));
        for (std::size_t k = 0; k < solved.size(); ++k) {
            CHECK(eq_upto(solved[k], from_g[k]));
            // x^n needs at least q^n
            for (int m = 0; m <= 20; ++m) {
                for (int n = 0; n < m; ++n) {
                    CHECK(solved[k].coeff(m, n) == 0);
                }
            }
        }
        const auto again = solve(sys, 20);
        for (std::size_t k = 0; k < solved.size(); ++k) {
            CHECK(solved[k].to_string() == again[k].to_string());
        }
    }
}

TEST_CASE("residual is zero only for solutions")
{
    const auto sys = system_from_ideal(rogers_ramanujan_ideal());
    const auto F = solve(sys, 12);
    for (const auto& r : residual(F, sys)) {
        CHECK(r.is_zero());
    }
    std::vector<Series> ones(3, Series::one(12, 12));
    CHECK_FALSE(check_system(ones, sys));
}
