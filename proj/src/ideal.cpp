#include "lpi/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lpi {

namespace {

std::string join_violations(const std::vector<std::string>& violations)
{
    std::string out = "invalid span one ideal:";
    for (const auto& v : violations) {
        out += "\n  - " + v;
    }
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n)
{
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

void check_square(const Digraph& g)
{
    if (g.adjacency.size() != g.order()) {
        throw std::invalid_argument("adjacency matrix must be K x K");
    }
    for (const auto& row : g.adjacency) {
        if (row.size() != g.order()) {
            throw std::invalid_argument("adjacency matrix must be K x K");
        }
        for (int a : row) {
            if (a != 0 && a != 1) {
                throw std::invalid_argument("adjacency matrix entries must be 0 or 1");
            }
        }
    }
}

} // namespace

InvalidIdeal::InvalidIdeal(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations))
{
}

bool SpanOneIdeal::links(std::size_t from, std::size_t to) const
{
    const auto& set = linking.at(from);
    return std::find(set.begin(), set.end(), to) != set.end();
}

void validate(const SpanOneIdeal& ideal)
{
    std::vector<std::string> violations;
    const std::size_t K = ideal.order();
    if (K == 0) {
        throw InvalidIdeal({"the alphabet is empty; it must contain the empty partition"});
    }
    if (!ideal.pi[0].empty()) {
        violations.push_back("pi[1] must be the empty partition, found " + ideal.pi[0].to_string());
    }
    std::set<Partition> seen;
    for (std::size_t k = 0; k < K; ++k) {
        if (!seen.insert(ideal.pi[k]).second) {
            violations.push_back("pi[" + std::to_string(k + 1) + "] = " + ideal.pi[k].to_string() +
                                 " occurs more than once");
        }
        if (k > 0 && ideal.pi[k].empty()) {
            violations.push_back("pi[" + std::to_string(k + 1) + "] is a second empty partition");
        }
    }
    if (ideal.S < 1) {
        violations.push_back("S must be a positive integer, found " + std::to_string(ideal.S));
    }
    for (std::size_t k = 0; k < K; ++k) {
        if (ideal.pi[k].largest_part() > ideal.S) {
            violations.push_back("S = " + std::to_string(ideal.S) + " is smaller than the largest part of pi[" +
                                 std::to_string(k + 1) + "] = " + ideal.pi[k].to_string());
        }
    }
    if (ideal.linking.size() != K) {
        violations.push_back("expected " + std::to_string(K) + " linking sets, found " +
                             std::to_string(ideal.linking.size()));
        throw InvalidIdeal(std::move(violations));
    }
    for (std::size_t k = 0; k < K; ++k) {
        const auto& set = ideal.linking[k];
        std::set<std::size_t> distinct;
        for (std::size_t j : set) {
            if (j >= K) {
                violations.push_back("linking set " + std::to_string(k + 1) + " refers to index " +
                                     std::to_string(j + 1) + " outside 1.." + std::to_string(K));
            } else if (!distinct.insert(j).second) {
                violations.push_back("linking set " + std::to_string(k + 1) + " lists index " +
                                     std::to_string(j + 1) + " twice");
            }
        }
        if (!distinct.contains(0)) {
            violations.push_back("the empty partition is missing from the linking set of pi[" +
                                 std::to_string(k + 1) + "] = " + ideal.pi[k].to_string());
        }
        if (k == 0 && distinct.size() != K) {
            violations.push_back("the linking set of the empty partition must be the whole alphabet");
        }
    }
    if (!violations.empty()) {
        throw InvalidIdeal(std::move(violations));
    }
}

SpanOneIdeal rogers_ramanujan_ideal()
{
    return {{Partition{}, Partition{1}, Partition{2}}, {{0, 1, 2}, {0, 1, 2}, {0, 2}}, 2};
}

SpanOneIdeal kanade_russell_i1_ideal()
{
    const auto all = all_indices(7);
    return {{Partition{}, Partition{1}, Partition{2, 1}, Partition{3, 1}, Partition{2}, Partition{3}, Partition{3, 3}},
            {all, all, all, {0, 4, 5, 6}, all, {0, 4, 5, 6}, {0, 5, 6}},
            3};
}

ModifiedDigraph::ModifiedDigraph(Digraph graph) : graph_(std::move(graph))
{
    check_square(graph_);
    if (graph_.order() == 0) {
        throw std::invalid_argument("modified digraph needs an empty vertex");
    }
    if (graph_.vertices[0].length != 0 || graph_.vertices[0].size != 0) {
        throw std::invalid_argument("vertex 1 of a modified digraph must have length and size 0");
    }
    for (std::size_t k = 0; k < graph_.order(); ++k) {
        if (k > 0 && (graph_.vertices[k].length < 1 || graph_.vertices[k].size < 1)) {
            throw std::invalid_argument("vertex " + std::to_string(k + 1) + " must have positive length and size");
        }
        if (graph_.adjacency[k][0] != 1) {
            throw std::invalid_argument("vertex " + std::to_string(k + 1) + " has no edge to the empty vertex");
        }
    }
}

ModifiedDigraph associated_graph(const SpanOneIdeal& ideal)
{
    validate(ideal);
    const std::size_t K = ideal.order();
    Digraph g;
    g.adjacency.assign(K, std::vector<int>(K, 0));
    for (std::size_t i = 0; i < K; ++i) {
        g.vertices.push_back({ideal.pi[i].length(), ideal.pi[i].size()});
        for (std::size_t j : ideal.linking[i]) {
            g.adjacency[i][j] = 1;
        }
    }
    return ModifiedDigraph(std::move(g));
}

const BinaryMatrix& adjacency(const ModifiedDigraph& g)
{
    return g.graph().adjacency;
}

MonomialDiag weight_diag(const Digraph& g)
{
    MonomialDiag out;
    out.reserve(g.order());
    for (const auto& v : g.vertices) {
        out.push_back({v.length, v.size});
    }
    return out;
}

SeriesMatrix walk_genfun_matrix(const Digraph& g, int M, int S, int x_max, int q_max)
{
    if (M < 0 || S < 0) {
        throw std::invalid_argument("walk_genfun_matrix: steps and shift must be non-negative");
    }
    check_square(g);
    const std::size_t K = g.order();
    const auto weights = weight_diag(g);

    SeriesMatrix current(K, std::vector<Series>(K, Series::zero(x_max, q_max)));
    for (std::size_t i = 0; i < K; ++i) {
        current[i][i] = Series::monomial(weights[i], x_max, q_max);
    }
    for (int m = 1; m <= M; ++m) {
        SeriesMatrix next(K, std::vector<Series>(K, Series::zero(x_max, q_max)));
        for (std::size_t i = 0; i < K; ++i) {
            for (std::size_t j = 0; j < K; ++j) {
                Series acc = Series::zero(x_max, q_max);
                for (std::size_t k = 0; k < K; ++k) {
                    if (g.adjacency[k][j] != 0) {
                        acc += current[i][k];
                    }
                }
                next[i][j] = acc.times_monomial(weights[j].shifted(m * S));
            }
        }
        current = std::move(next);
    }
    return current;
}

Monomial walk_degree_bound(const Digraph& g, int M, int S)
{
    Monomial bound;
    for (int m = 0; m <= M; ++m) {
        int x = 0;
        int q = 0;
        for (const auto& v : g.vertices) {
            x = std::max(x, v.length);
            q = std::max(q, v.size + m * S * v.length);
        }
        bound.x_exp += x;
        bound.q_exp += q;
    }
    return bound;
}

std::vector<Series> genfun_vec(const ModifiedDigraph& mg, int S, int levels, int x_max, int q_max)
{
    const auto& g = mg.graph();
    const std::size_t K = g.order();
    const auto weights = weight_diag(g);

    std::vector<Series> v(K, Series::zero(x_max, q_max));
    v[0] = Series::one(x_max, q_max);
    for (int m = levels; m >= 1; --m) {
        std::vector<Series> weighted;
        weighted.reserve(K);
        for (std::size_t j = 0; j < K; ++j) {
            weighted.push_back(v[j].times_monomial(weights[j].shifted(m * S)));
        }
        std::vector<Series> next(K, Series::zero(x_max, q_max));
        for (std::size_t i = 0; i < K; ++i) {
            for (std::size_t j = 0; j < K; ++j) {
                if (g.adjacency[i][j] != 0) {
                    next[i] += weighted[j];
                }
            }
        }
        v = std::move(next);
    }
    for (std::size_t i = 0; i < K; ++i) {
        v[i] = v[i].times_monomial(weights[i]);
    }
    return v;
}

int stable_levels(int S, int q_max)
{
    if (S < 1) {
        throw std::invalid_argument("stable_levels: S must be positive");
    }
    return (q_max + S - 1) / S + 1;
}

std::vector<Series> ideal_genfun_vec(const SpanOneIdeal& ideal, int x_max, int q_max)
{
    const auto g = associated_graph(ideal);
    return genfun_vec(g, ideal.S, stable_levels(ideal.S, q_max), x_max, q_max);
}

Series sum(const std::vector<Series>& terms)
{
    if (terms.empty()) {
        throw std::invalid_argument("sum of no series");
    }
    Series out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        out += terms[i];
    }
    return out;
}

std::optional<std::vector<std::size_t>> contains(const SpanOneIdeal& ideal, const Partition& lambda)
{
    validate(ideal);
    std::vector<std::size_t> chain;
    if (lambda.empty()) {
        return chain;
    }
    const int S = ideal.S;
    const int top = (lambda.largest_part() - 1) / S;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(top + 1));
    for (int p : lambda.parts()) {
        const int m = (p - 1) / S;
        blocks[static_cast<std::size_t>(m)].push_back(p - m * S);
    }
    for (int m = 0; m <= top; ++m) {
        const Partition block(blocks[static_cast<std::size_t>(m)]);
        const auto it = std::find(ideal.pi.begin(), ideal.pi.end(), block);
        if (it == ideal.pi.end()) {
            return std::nullopt;
        }
        const auto index = static_cast<std::size_t>(it - ideal.pi.begin());
        if (m > 0 && !ideal.links(chain.back(), index)) {
            return std::nullopt;
        }
        chain.push_back(index);
    }
    return chain;
}

namespace {

struct MemberSearch {
    const SpanOneIdeal& ideal;
    int q_max;
    std::vector<Partition> found;

    void extend(int level, std::size_t previous, const std::vector<int>& parts, int size)
    {
        const int S = ideal.S;
        for (std::size_t j : ideal.linking[previous]) {
            if (j == 0) {
                // Skipping a level only helps if a later non-empty block still fits.
                if (size + (level + 1) * S + 1 <= q_max) {
                    extend(level + 1, 0, parts, size);
                }
                continue;
            }
            const Partition& block = ideal.pi[j];
            const int added = block.size() + level * S * block.length();
            if (size + added > q_max) {
                continue;
            }
            std::vector<int> next = parts;
            for (int p : block.parts()) {
                next.push_back(p + level * S);
            }
            found.emplace_back(next);
            extend(level + 1, j, next, size + added);
        }
    }
};

} // namespace

Members enumerate_members(const SpanOneIdeal& ideal, int q_max, int x_max)
{
    validate(ideal);
    // Level 0 may start from any element; linking[0] is the whole alphabet.
    MemberSearch search{ideal, q_max, {Partition{}}};
    search.extend(0, 0, {}, 0);

    Members out{Series::zero(x_max, q_max), std::move(search.found)};
    std::sort(out.partitions.begin(), out.partitions.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    for (const auto& lambda : out.partitions) {
        out.genfun.add_term(lambda.length(), lambda.size(), 1);
    }
    return out;
}

} // namespace lpi
