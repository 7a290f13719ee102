#ifndef LPI_SERIES_HPP
#define LPI_SERIES_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpi {

using Integer = boost::multiprecision::cpp_int;

/// Default q-truncation order when a caller does not pick one.
inline constexpr int default_q_max = 30;

/// A monic monomial x^x_exp q^q_exp. Used as edge weights in proof trees and
/// as the diagonal entries of weight matrices, where the entries must be
/// recognisable as single monomials rather than general series.
struct Monomial {
    int x_exp = 0;
    int q_exp = 0;

    /// The monomial after the substitution x -> x q^S.
    [[nodiscard]] Monomial shifted(int S) const { return {x_exp, q_exp + x_exp * S}; }

    [[nodiscard]] bool is_one() const { return x_exp == 0 && q_exp == 0; }

    friend Monomial operator*(Monomial a, Monomial b) { return {a.x_exp + b.x_exp, a.q_exp + b.q_exp}; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// "1", "x*q", "x^2*q^3", ...
    [[nodiscard]] std::string to_string() const;
};

/// Truncated bivariate power series in x and q with exact integer
/// coefficients. Coefficients are known for 0 <= m <= x_max, 0 <= n <= q_max;
/// everything beyond is unknown, not zero.
///
/// Binary operations on series with different orders work on the
/// intersection of the two truncation regions.
class Series {
public:
    /// The zero series with the given orders.
    Series(int x_max, int q_max);

    static Series zero(int x_max, int q_max) { return Series(x_max, q_max); }
    static Series one(int x_max, int q_max);
    /// c x^m q^n; the result is zero if the monomial lies outside the region.
    static Series monomial(const Integer& c, int m, int n, int x_max, int q_max);
    static Series monomial(Monomial mono, int x_max, int q_max) {
        return monomial(1, mono.x_exp, mono.q_exp, x_max, q_max);
    }
    /// sum_{k >= 0} q^{jk}, the inverse of 1 - q^j.
    static Series geom_inverse(int j, int x_max, int q_max);

    [[nodiscard]] int x_max() const noexcept { return x_max_; }
    [[nodiscard]] int q_max() const noexcept { return q_max_; }

    /// Exact coefficient of x^m q^n. Throws std::out_of_range outside the
    /// truncation region.
    [[nodiscard]] const Integer& coeff(int m, int n) const;

    /// Adds c to the coefficient of x^m q^n; terms outside the region are
    /// dropped. Negative degrees are rejected.
    void add_term(int m, int n, const Integer& c);

    [[nodiscard]] bool is_zero() const;
    /// Number of non-zero coefficients.
    [[nodiscard]] std::size_t term_count() const;

    /// Restrict to a smaller (or equal) truncation region.
    [[nodiscard]] Series truncated(int x_max, int q_max) const;

    /// Substitution x -> x q^S.
    [[nodiscard]] Series shift_x(int S) const;
    /// Multiplication by c x^a q^b without a full Cauchy product.
    [[nodiscard]] Series times_monomial(Monomial mono, const Integer& c = 1) const;
    /// Sum of all stored coefficients, i.e. the value at x = q = 1 of the
    /// truncated polynomial.
    [[nodiscard]] Integer evaluate_at_one() const;

    /// The series restricted to x-degree m, as coefficients of q^0..q^q_max.
    [[nodiscard]] std::vector<Integer> x_slice(int m) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);

    /// Graded-lex rendering by q-degree, then x-degree: "1 + x*q + 2*x^2*q^6".
    [[nodiscard]] std::string to_string() const;

private:
    [[nodiscard]] std::size_t index(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(q_max_ + 1) + static_cast<std::size_t>(n);
    }

    int x_max_;
    int q_max_;
    std::vector<Integer> coeffs_;
};

/// Equality on the shared truncation region.
[[nodiscard]] bool eq_upto(const Series& a, const Series& b);

} // namespace lpi

#endif
