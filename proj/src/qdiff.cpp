#include "lpi/qdiff.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpi {

namespace {

using QSeries = std::vector<Integer>;

// dst += q^shift * src, truncated to dst's length.
void add_shifted(QSeries& dst, const QSeries& src, long long shift)
{
    const auto len = static_cast<long long>(dst.size());
    for (long long n = 0; n + shift < len && n < static_cast<long long>(src.size()); ++n) {
        if (!src[static_cast<std::size_t>(n)].is_zero()) {
            dst[static_cast<std::size_t>(n + shift)] += src[static_cast<std::size_t>(n)];
        }
    }
}

} // namespace

void validate(const QDiffSystem& sys)
{
    const std::size_t K = sys.order();
    if (K == 0) {
        throw std::invalid_argument("q-difference system must have at least one row");
    }
    if (sys.S < 1) {
        throw std::invalid_argument("q-difference system: S must be positive");
    }
    if (sys.A.size() != K) {
        throw std::invalid_argument("q-difference system: A must be K x K with K = number of weights");
    }
    for (std::size_t i = 0; i < K; ++i) {
        if (sys.A[i].size() != K) {
            throw std::invalid_argument("q-difference system: A must be K x K with K = number of weights");
        }
        for (int a : sys.A[i]) {
            if (a != 0 && a != 1) {
                throw std::invalid_argument("q-difference system: A must be a 0/1 matrix");
            }
        }
        if (sys.A[i][0] != 1 || sys.A[0][i] != 1) {
            throw std::invalid_argument("q-difference system: first row and column of A must be all ones");
        }
    }
    if (!sys.weights[0].is_one()) {
        throw std::invalid_argument("q-difference system: the first weight must be 1");
    }
    for (std::size_t j = 1; j < K; ++j) {
        if (sys.weights[j].x_exp < 1 || sys.weights[j].q_exp < 0) {
            throw std::invalid_argument("q-difference system: weight " + std::to_string(j + 1) +
                                        " needs positive x-degree and non-negative q-degree");
        }
    }
}

QDiffSystem system_from_ideal(const SpanOneIdeal& ideal)
{
    const auto g = associated_graph(ideal);
    return {adjacency(g), weight_diag(g), ideal.S};
}

std::vector<Series> solve(const QDiffSystem& sys, int x_max, int q_max)
{
    validate(sys);
    const std::size_t K = sys.order();
    const auto len = static_cast<std::size_t>(q_max + 1);

    // f[k][n] is the coefficient of x^n in F_k, a series in q.
    std::vector<std::vector<QSeries>> f(K, std::vector<QSeries>(static_cast<std::size_t>(x_max + 1), QSeries(len)));
    for (std::size_t k = 0; k < K; ++k) {
        f[k][0][0] = 1;
    }

    for (int n = 1; n <= x_max; ++n) {
        // Contribution of the non-empty columns: A_{k,j} q^{|w_j| + (n - #w_j) S} f_j(n - #w_j).
        std::vector<QSeries> rest(K, QSeries(len));
        for (std::size_t j = 1; j < K; ++j) {
            const int previous = n - sys.weights[j].x_exp;
            if (previous < 0) {
                continue;
            }
            const long long shift =
                static_cast<long long>(sys.weights[j].q_exp) + static_cast<long long>(previous) * sys.S;
            for (std::size_t k = 0; k < K; ++k) {
                if (sys.A[k][j] != 0) {
                    add_shifted(rest[k], f[j][static_cast<std::size_t>(previous)], shift);
                }
            }
        }

        // (1 - q^{nS}) f_1(n) = rest_1, so f_1(n) = rest_1 * sum_i q^{i n S}.
        const long long step = static_cast<long long>(n) * sys.S;
        QSeries& f1 = f[0][static_cast<std::size_t>(n)];
        for (long long shift = 0; shift < static_cast<long long>(len); shift += step) {
            add_shifted(f1, rest[0], shift);
        }
        for (std::size_t k = 1; k < K; ++k) {
            QSeries& fk = f[k][static_cast<std::size_t>(n)];
            fk = rest[k];
            add_shifted(fk, f1, step);
        }
    }

    std::vector<Series> out;
    out.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        Series s(x_max, q_max);
        for (int n = 0; n <= x_max; ++n) {
            const auto& slice = f[k][static_cast<std::size_t>(n)];
            for (int e = 0; e <= q_max; ++e) {
                if (!slice[static_cast<std::size_t>(e)].is_zero()) {
                    s.add_term(n, e, slice[static_cast<std::size_t>(e)]);
                }
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Series> f_from_g(const BinaryMatrix& A, const std::vector<Series>& G)
{
    const std::size_t K = G.size();
    if (K == 0 || A.size() != K) {
        throw std::invalid_argument("f_from_g: dimension mismatch");
    }
    std::vector<Series> out;
    out.reserve(K);
    for (std::size_t i = 0; i < K; ++i) {
        if (A[i].size() != K) {
            throw std::invalid_argument("f_from_g: dimension mismatch");
        }
        Series acc = Series::zero(G[0].x_max(), G[0].q_max());
        for (std::size_t j = 0; j < K; ++j) {
            if (A[i][j] != 0) {
                acc += G[j];
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Series> residual(const std::vector<Series>& F, const QDiffSystem& sys)
{
    validate(sys);
    const std::size_t K = sys.order();
    if (F.size() != K) {
        throw std::invalid_argument("check_system: vector length differs from system order");
    }
    std::vector<Series> weighted;
    weighted.reserve(K);
    for (std::size_t j = 0; j < K; ++j) {
        weighted.push_back(F[j].shift_x(sys.S).times_monomial(sys.weights[j]));
    }
    std::vector<Series> out;
    out.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        Series r = F[k];
        for (std::size_t j = 0; j < K; ++j) {
            if (sys.A[k][j] != 0) {
                r -= weighted[j];
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool check_system(const std::vector<Series>& F, const QDiffSystem& sys)
{
    const auto r = residual(F, sys);
    return std::all_of(r.begin(), r.end(), [](const Series& s) { return s.is_zero(); });
}

} // namespace lpi
