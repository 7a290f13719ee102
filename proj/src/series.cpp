#include "lpi/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpi {

namespace {

void check_orders(int x_max, int q_max)
{
    if (x_max < 0 || q_max < 0) {
        throw std::invalid_argument("series truncation orders must be non-negative");
    }
}

// Appends "x^m*q^n" style factors; returns false if nothing was written.
bool write_power_product(std::ostream& os, int m, int n)
{
    bool wrote = false;
    if (m > 0) {
        os << 'x';
        if (m > 1) {
            os << '^' << m;
        }
        wrote = true;
    }
    if (n != 0) {
        if (wrote) {
            os << '*';
        }
        os << 'q';
        if (n != 1) {
            os << '^' << n;
        }
        wrote = true;
    }
    return wrote;
}

} // namespace

std::string Monomial::to_string() const
{
    std::ostringstream os;
    if (!write_power_product(os, x_exp, q_exp)) {
        os << '1';
    }
    return os.str();
}

Series::Series(int x_max, int q_max) : x_max_(x_max), q_max_(q_max)
{
    check_orders(x_max, q_max);
    coeffs_.resize(static_cast<std::size_t>(x_max + 1) * static_cast<std::size_t>(q_max + 1));
}

Series Series::one(int x_max, int q_max)
{
    return monomial(1, 0, 0, x_max, q_max);
}

Series Series::monomial(const Integer& c, int m, int n, int x_max, int q_max)
{
    Series s(x_max, q_max);
    s.add_term(m, n, c);
    return s;
}

Series Series::geom_inverse(int j, int x_max, int q_max)
{
    if (j <= 0) {
        throw std::invalid_argument("geom_inverse: exponent must be positive");
    }
    Series s(x_max, q_max);
    for (int n = 0; n <= q_max; n += j) {
        s.coeffs_[s.index(0, n)] = 1;
    }
    return s;
}

const Integer& Series::coeff(int m, int n) const
{
    if (m < 0 || n < 0 || m > x_max_ || n > q_max_) {
        std::ostringstream os;
        os << "coefficient (" << m << ", " << n << ") outside truncation region [0.." << x_max_ << "] x [0.."
           << q_max_ << "]";
        throw std::out_of_range(os.str());
    }
    return coeffs_[index(m, n)];
}

void Series::add_term(int m, int n, const Integer& c)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("series terms must have non-negative degrees");
    }
    if (m > x_max_ || n > q_max_) {
        return;
    }
    coeffs_[index(m, n)] += c;
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.is_zero(); });
}

std::size_t Series::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

Series Series::truncated(int x_max, int q_max) const
{
    if (x_max > x_max_ || q_max > q_max_) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    Series out(x_max, q_max);
    for (int m = 0; m <= x_max; ++m) {
        for (int n = 0; n <= q_max; ++n) {
            out.coeffs_[out.index(m, n)] = coeffs_[index(m, n)];
        }
    }
    return out;
}

Series Series::shift_x(int S) const
{
    if (S < 0) {
        throw std::invalid_argument("shift_x: shift must be non-negative");
    }
    Series out(x_max_, q_max_);
    for (int m = 0; m <= x_max_; ++m) {
        const long long offset = static_cast<long long>(m) * S;
        for (int n = 0; n + offset <= q_max_; ++n) {
            out.coeffs_[out.index(m, n + static_cast<int>(offset))] = coeffs_[index(m, n)];
        }
    }
    return out;
}

Series Series::times_monomial(Monomial mono, const Integer& c) const
{
    if (mono.x_exp < 0 || mono.q_exp < 0) {
        throw std::invalid_argument("times_monomial: negative exponent");
    }
    Series out(x_max_, q_max_);
    for (int m = 0; m + mono.x_exp <= x_max_; ++m) {
        for (int n = 0; n + mono.q_exp <= q_max_; ++n) {
            const Integer& a = coeffs_[index(m, n)];
            if (!a.is_zero()) {
                out.coeffs_[out.index(m + mono.x_exp, n + mono.q_exp)] = a * c;
            }
        }
    }
    return out;
}

Integer Series::evaluate_at_one() const
{
    Integer total = 0;
    for (const auto& c : coeffs_) {
        total += c;
    }
    return total;
}

std::vector<Integer> Series::x_slice(int m) const
{
    if (m < 0 || m > x_max_) {
        throw std::out_of_range("x_slice: x-degree outside truncation region");
    }
    return {coeffs_.begin() + static_cast<std::ptrdiff_t>(index(m, 0)),
            coeffs_.begin() + static_cast<std::ptrdiff_t>(index(m, q_max_)) + 1};
}

Series& Series::operator+=(const Series& other)
{
    *this = *this + other;
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    *this = *this - other;
    return *this;
}

Series operator+(const Series& a, const Series& b)
{
    Series out(std::min(a.x_max_, b.x_max_), std::min(a.q_max_, b.q_max_));
    for (int m = 0; m <= out.x_max_; ++m) {
        for (int n = 0; n <= out.q_max_; ++n) {
            out.coeffs_[out.index(m, n)] = a.coeffs_[a.index(m, n)] + b.coeffs_[b.index(m, n)];
        }
    }
    return out;
}

Series operator-(const Series& a)
{
    Series out = a;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Series operator-(const Series& a, const Series& b)
{
    return a + (-b);
}

Series operator*(const Series& a, const Series& b)
{
    Series out(std::min(a.x_max_, b.x_max_), std::min(a.q_max_, b.q_max_));
    for (int m1 = 0; m1 <= out.x_max_; ++m1) {
        for (int n1 = 0; n1 <= out.q_max_; ++n1) {
            const Integer& ca = a.coeffs_[a.index(m1, n1)];
            if (ca.is_zero()) {
                continue;
            }
            for (int m2 = 0; m1 + m2 <= out.x_max_; ++m2) {
                for (int n2 = 0; n1 + n2 <= out.q_max_; ++n2) {
                    const Integer& cb = b.coeffs_[b.index(m2, n2)];
                    if (!cb.is_zero()) {
                        out.coeffs_[out.index(m1 + m2, n1 + n2)] += ca * cb;
                    }
                }
            }
        }
    }
    return out;
}

std::string Series::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= q_max_; ++n) {
        for (int m = 0; m <= x_max_; ++m) {
            const Integer& c = coeffs_[index(m, n)];
            if (c.is_zero()) {
                continue;
            }
            Integer magnitude = abs(c);
            if (first) {
                if (c < 0) {
                    os << '-';
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const bool constant = m == 0 && n == 0;
            if (magnitude != 1 || constant) {
                os << magnitude;
                if (!constant) {
                    os << '*';
                }
            }
            write_power_product(os, m, n);
        }
    }
    if (first) {
        return "0";
    }
    return os.str();
}

bool eq_upto(const Series& a, const Series& b)
{
    const int x_max = std::min(a.x_max(), b.x_max());
    const int q_max = std::min(a.q_max(), b.q_max());
    for (int m = 0; m <= x_max; ++m) {
        for (int n = 0; n <= q_max; ++n) {
            if (a.coeff(m, n) != b.coeff(m, n)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace lpi
