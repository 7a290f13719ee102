// Test-only reference computations. Nothing here calls into the library
// beyond the Series container, so agreement is a real cross-check.
#ifndef LPI_TESTS_ORACLES_HPP
#define LPI_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "lpi/series.hpp"

namespace oracle {

using lpi::Integer;
using lpi::Series;

// Coefficient table keyed by (x-degree, q-degree).
using Table = std::map<std::pair<int, int>, Integer>;

inline Table table_of(const Series& s)
{
    Table t;
    for (int m = 0; m <= s.x_max(); ++m) {
        for (int n = 0; n <= s.q_max(); ++n) {
            if (s.coeff(m, n) != 0) {
                t[{m, n}] = s.coeff(m, n);
            }
        }
    }
    return t;
}

inline bool matches(const Series& s, const Table& t)
{
    for (const auto& [mn, c] : t) {
        if (mn.first <= s.x_max() && mn.second <= s.q_max() && s.coeff(mn.first, mn.second) != c) {
            return false;
        }
    }
    for (int m = 0; m <= s.x_max(); ++m) {
        for (int n = 0; n <= s.q_max(); ++n) {
            if (s.coeff(m, n) != 0 && !t.contains({m, n})) {
                return false;
            }
        }
    }
    return true;
}

inline Table naive_product(const Series& a, const Series& b, int x_max, int q_max)
{
    Table t;
    for (int m = 0; m <= x_max; ++m) {
        for (int n = 0; n <= q_max; ++n) {
            Integer c = 0;
            for (int i = 0; i <= m; ++i) {
                for (int j = 0; j <= n; ++j) {
                    c += a.coeff(i, j) * b.coeff(m - i, n - j);
                }
            }
            if (c != 0) {
                t[{m, n}] = c;
            }
        }
    }
    return t;
}

// Every partition of n with parts at most `cap`, parts listed non-increasing.
inline void each_partition(int n, int cap, std::vector<int>& prefix,
                           const std::function<void(const std::vector<int>&)>& visit)
{
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int part = std::min(n, cap); part >= 1; --part) {
        prefix.push_back(part);
        each_partition(n - part, part, prefix, visit);
        prefix.pop_back();
    }
}

// sum x^{#parts} q^{size} over partitions of size <= q_max accepted by keep.
inline Table count_partitions(int q_max, const std::function<bool(const std::vector<int>&)>& keep)
{
    Table t;
    std::vector<int> prefix;
    for (int n = 0; n <= q_max; ++n) {
        each_partition(n, n, prefix, [&](const std::vector<int>& parts) {
            if (keep(parts)) {
                t[{static_cast<int>(parts.size()), n}] += 1;
            }
        });
    }
    return t;
}

inline bool gap_at_distance(const std::vector<int>& parts, int d, int k)
{
    for (std::size_t j = 0; j + k < parts.size(); ++j) {
        if (parts[j] - parts[j + k] < d) {
            return false;
        }
    }
    return true;
}

inline bool kr_i1(const std::vector<int>& parts)
{
    if (!gap_at_distance(parts, 3, 2)) {
        return false;
    }
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        if (parts[j] - parts[j + 1] <= 1 && (parts[j] + parts[j + 1]) % 3 != 0) {
            return false;
        }
    }
    return true;
}

// Partitions of n into m parts, all >= lo, consecutive parts differing by at
// least 2: choose the smallest part p, then the rest is a partition of n - p
// into m - 1 parts that are all >= p + 2.
inline Integer rr_count(int n, int m, int lo)
{
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    Integer total = 0;
    for (int p = lo; p * m + (m - 1) * m <= n; ++p) {
        total += rr_count(n - p, m - 1, p + 2);
    }
    return total;
}

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix mat_power(const std::vector<std::vector<int>>& A, int M)
{
    const std::size_t K = A.size();
    IntMatrix P(K, std::vector<Integer>(K, 0));
    for (std::size_t i = 0; i < K; ++i) {
        P[i][i] = 1;
    }
    for (int step = 0; step < M; ++step) {
        IntMatrix next(K, std::vector<Integer>(K, 0));
        for (std::size_t i = 0; i < K; ++i) {
            for (std::size_t k = 0; k < K; ++k) {
                for (std::size_t j = 0; j < K; ++j) {
                    next[i][j] += P[i][k] * A[k][j];
                }
            }
        }
        P = std::move(next);
    }
    return P;
}

// Sum over walks v_0 -> ... -> v_M with v_0 = from and v_M = to of
// prod_t x^{len(v_t)} q^{size(v_t) + t S len(v_t)}.
inline Table walk_sum(const std::vector<std::vector<int>>& A, const std::vector<std::pair<int, int>>& weight,
                      std::size_t from, std::size_t to, int M, int S)
{
    Table t;
    std::function<void(std::size_t, int, int, int)> walk = [&](std::size_t v, int step, int xs, int qs) {
        xs += weight[v].first;
        qs += weight[v].second + step * S * weight[v].first;
        if (step == M) {
            if (v == to) {
                t[{xs, qs}] += 1;
            }
            return;
        }
        for (std::size_t w = 0; w < A.size(); ++w) {
            if (A[v][w] != 0) {
                walk(w, step + 1, xs, qs);
            }
        }
    };
    walk(from, 0, 0, 0);
    return t;
}

// A random series with coefficients in [-9, 9] and roughly half the terms set.
inline Series random_series(std::mt19937& rng, int x_max, int q_max)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> value(-9, 9);
    Series s(x_max, q_max);
    for (int m = 0; m <= x_max; ++m) {
        for (int n = 0; n <= q_max; ++n) {
            if (coin(rng) != 0) {
                s.add_term(m, n, value(rng));
            }
        }
    }
    return s;
}

} // namespace oracle

#endif
