#include "lpi/multisum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lpi {

namespace {

void check_beta(const MultisumProfile& p, const BetaVector& beta)
{
    validate(p);
    if (beta.size() != p.rank()) {
        throw std::invalid_argument("beta has " + std::to_string(beta.size()) + " entries, profile rank is " +
                                    std::to_string(p.rank()));
    }
}

// alpha_rr t(t-1)/2 + beta_r t: the contribution of coordinate r alone.
long long axis_exponent(long long alpha_rr, long long beta_r, long long t)
{
    return alpha_rr * t * (t - 1) / 2 + beta_r * t;
}

// 1 / (q^A; q^A)_n for n = 0..n_max, as q-only series.
std::vector<Series> pochhammer_inverses(int A, int n_max, int q_max)
{
    std::vector<Series> out;
    out.reserve(static_cast<std::size_t>(n_max + 1));
    out.push_back(Series::one(0, q_max));
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(out.back() * Series::geom_inverse(n * A, 0, q_max));
    }
    return out;
}

} // namespace

void validate(const MultisumProfile& p)
{
    const std::size_t R = p.rank();
    if (R == 0) {
        throw std::invalid_argument("multisum profile must have rank >= 1");
    }
    if (p.A.size() != R || p.alpha.size() != R) {
        throw std::invalid_argument("multisum profile: alpha, gamma and A must have the same rank");
    }
    for (std::size_t i = 0; i < R; ++i) {
        if (p.alpha[i].size() != R) {
            throw std::invalid_argument("multisum profile: alpha must be square");
        }
        for (std::size_t j = 0; j < R; ++j) {
            if (p.alpha[i][j] < 0) {
                throw std::invalid_argument("multisum profile: alpha entries must be non-negative");
            }
            if (p.alpha[i][j] != p.alpha[j][i]) {
                throw std::invalid_argument("multisum profile: alpha must be symmetric");
            }
        }
        if (p.gamma[i] < 1) {
            throw std::invalid_argument("multisum profile: gamma entries must be positive");
        }
        if (p.A[i] < 1) {
            throw std::invalid_argument("multisum profile: A entries must be positive");
        }
    }
}

MultisumProfile rogers_ramanujan_profile()
{
    return {{{2}}, {1}, {1}};
}

MultisumProfile kanade_russell_profile()
{
    return {{{2, 3}, {3, 6}}, {1, 2}, {1, 3}};
}

MultisumProfile rank3_profile()
{
    return {{{1, 2, 3}, {2, 6, 6}, {3, 6, 9}}, {1, 2, 3}, {1, 2, 3}};
}

std::string BetaVector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << values_[i];
    }
    os << ')';
    return os.str();
}

long long q_exponent(const MultisumProfile& p, const BetaVector& beta, const std::vector<int>& n)
{
    const std::size_t R = p.rank();
    long long e = 0;
    for (std::size_t i = 0; i < R; ++i) {
        const long long ni = n[i];
        e += axis_exponent(p.alpha[i][i], beta[i], ni);
        for (std::size_t j = i + 1; j < R; ++j) {
            e += static_cast<long long>(p.alpha[i][j]) * ni * n[j];
        }
    }
    return e;
}

bool check_positivity(const MultisumProfile& p, const BetaVector& beta)
{
    check_beta(p, beta);
    // n = e_r gives exactly beta_r, and alpha >= 0 makes every other term at
    // least sum_r beta_r n_r.
    return std::all_of(beta.values().begin(), beta.values().end(), [](int b) { return b >= 1; });
}

Series eval_H(const MultisumProfile& p, const BetaVector& beta, int x_max, int q_max)
{
    check_beta(p, beta);
    const std::size_t R = p.rank();

    std::vector<std::vector<Series>> inverses;
    inverses.reserve(R);
    for (std::size_t r = 0; r < R; ++r) {
        inverses.push_back(pochhammer_inverses(p.A[r], x_max / p.gamma[r], q_max));
    }

    Series out(x_max, q_max);
    std::vector<int> n(R, 0);
    std::function<void(std::size_t, int)> visit = [&](std::size_t r, int x_degree) {
        if (r == R) {
            const long long e = q_exponent(p, beta, n);
            if (e < 0) {
                throw std::domain_error("H" + beta.to_string() + " has a term with negative q-exponent");
            }
            if (e > q_max) {
                return;
            }
            Series denominator = Series::one(0, q_max);
            for (std::size_t i = 0; i < R; ++i) {
                if (n[i] > 0) {
                    denominator = denominator * inverses[i][static_cast<std::size_t>(n[i])];
                }
            }
            const auto slice = denominator.x_slice(0);
            for (int k = 0; k + e <= q_max; ++k) {
                if (!slice[static_cast<std::size_t>(k)].is_zero()) {
                    out.add_term(x_degree, static_cast<int>(k + e), slice[static_cast<std::size_t>(k)]);
                }
            }
            return;
        }
        for (int t = 0; x_degree + t * p.gamma[r] <= x_max; ++t) {
            n[r] = t;
            visit(r + 1, x_degree + t * p.gamma[r]);
        }
        n[r] = 0;
    };
    visit(0, 0);
    return out;
}

RecurrenceStep rec_children(const MultisumProfile& p, const BetaVector& beta, std::size_t r)
{
    check_beta(p, beta);
    if (r >= p.rank()) {
        throw std::out_of_range("recurrence coordinate " + std::to_string(r + 1) + " outside 1.." +
                                std::to_string(p.rank()));
    }
    std::vector<int> left = beta.values();
    left[r] += p.A[r];
    std::vector<int> right = beta.values();
    for (std::size_t i = 0; i < p.rank(); ++i) {
        right[i] += p.alpha[r][i];
    }
    return {BetaVector(std::move(left)), Monomial{p.gamma[r], beta[r]}, BetaVector(std::move(right))};
}

BetaVector shift_beta(const MultisumProfile& p, const BetaVector& beta, int S)
{
    check_beta(p, beta);
    if (S < 1) {
        throw std::invalid_argument("shift_beta: S must be positive");
    }
    std::vector<int> out = beta.values();
    for (std::size_t r = 0; r < p.rank(); ++r) {
        out[r] += S * p.gamma[r];
    }
    return BetaVector(std::move(out));
}

bool check_additional(const MultisumProfile& p, int S)
{
    validate(p);
    for (std::size_t s = 0; s < p.rank(); ++s) {
        if ((p.gamma[s] * S) % p.A[s] != 0) {
            return false;
        }
        for (std::size_t r = 0; r < p.rank(); ++r) {
            if (p.alpha[r][s] % p.A[s] != 0) {
                return false;
            }
        }
    }
    return true;
}

bool verify_recurrence_numeric(const MultisumProfile& p, const BetaVector& beta, std::size_t r, int x_max,
                               int q_max)
{
    const auto step = rec_children(p, beta, r);
    const Series lhs = eval_H(p, beta, x_max, q_max);
    if (step.weight.q_exp < 0) {
        throw std::domain_error("verify_recurrence_numeric: weight " + step.weight.to_string() + " of " +
                                beta.to_string() + " has a negative exponent");
    }
    const Series rhs =
        eval_H(p, step.left, x_max, q_max) + eval_H(p, step.right, x_max, q_max).times_monomial(step.weight);
    return eq_upto(lhs, rhs);
}

} // namespace lpi
