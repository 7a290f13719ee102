#ifndef LPI_MULTISUM_HPP
#define LPI_MULTISUM_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lpi/series.hpp"

namespace lpi {

/// Parameters (alpha, gamma, A) of the q-multi-summation
///
///   H(beta) = sum_{n in N^R} q^{sum_r alpha_rr n_r(n_r-1)/2 + sum_{i<j} alpha_ij n_i n_j + sum_r beta_r n_r}
///             x^{sum_r gamma_r n_r} / prod_r (q^{A_r}; q^{A_r})_{n_r}
struct MultisumProfile {
    std::vector<std::vector<int>> alpha;
    std::vector<int> gamma;
    std::vector<int> A;

    [[nodiscard]] std::size_t rank() const noexcept { return gamma.size(); }
};

/// Throws std::invalid_argument unless alpha is a symmetric R x R matrix over
/// N, gamma_r >= 1 and A_r >= 1.
void validate(const MultisumProfile& p);

/// alpha = (2), gamma = (1), A = (1): the Rogers-Ramanujan sum.
[[nodiscard]] MultisumProfile rogers_ramanujan_profile();
/// alpha = ((2,3),(3,6)), gamma = (1,2), A = (1,3).
[[nodiscard]] MultisumProfile kanade_russell_profile();
/// alpha = ((1,2,3),(2,6,6),(3,6,9)), gamma = (1,2,3), A = (1,2,3).
[[nodiscard]] MultisumProfile rank3_profile();

/// Linear exponent vector beta of H(beta).
class BetaVector {
public:
    BetaVector() = default;
    explicit BetaVector(std::vector<int> values) : values_(std::move(values)) {}
    BetaVector(std::initializer_list<int> values) : values_(values) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] int operator[](std::size_t r) const { return values_[r]; }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }

    /// "(1,3)"
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const BetaVector&, const BetaVector&) = default;

private:
    std::vector<int> values_;
};

/// The q-exponent sum_r alpha_rr n_r(n_r-1)/2 + sum_{i<j} alpha_ij n_i n_j + sum_r beta_r n_r.
[[nodiscard]] long long q_exponent(const MultisumProfile& p, const BetaVector& beta, const std::vector<int>& n);

/// True iff q_exponent(n) > 0 for every n in N^R other than 0.
[[nodiscard]] bool check_positivity(const MultisumProfile& p, const BetaVector& beta);

/// H(beta) truncated at (x_max, q_max). Tuples are enumerated by x-degree, so
/// beta does not need to satisfy the positivity condition; a term with a
/// negative q-exponent is rejected with std::domain_error.
[[nodiscard]] Series eval_H(const MultisumProfile& p, const BetaVector& beta, int x_max, int q_max);
[[nodiscard]] inline Series eval_H(const MultisumProfile& p, const BetaVector& beta, int q_max)
{
    return eval_H(p, beta, q_max, q_max);
}

/// One application of H(beta) = H(left) + weight * H(right) along coordinate r
/// (0-based): left = beta + A_r e_r, right = beta + row r of alpha,
/// weight = x^{gamma_r} q^{beta_r}.
struct RecurrenceStep {
    BetaVector left;
    Monomial weight;
    BetaVector right;
};

[[nodiscard]] RecurrenceStep rec_children(const MultisumProfile& p, const BetaVector& beta, std::size_t r);

/// Substitution x -> x q^S: beta + S gamma.
[[nodiscard]] BetaVector shift_beta(const MultisumProfile& p, const BetaVector& beta, int S);

/// A_s divides gamma_s S, and A_s divides alpha_{r,s} for every r.
[[nodiscard]] bool check_additional(const MultisumProfile& p, int S);

/// Evaluates both sides of rec_children's identity and compares them exactly.
[[nodiscard]] bool verify_recurrence_numeric(const MultisumProfile& p, const BetaVector& beta, std::size_t r,
                                             int x_max, int q_max);

} // namespace lpi

#endif
