#ifndef LPI_IDEAL_HPP
#define LPI_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpi/partition.hpp"
#include "lpi/series.hpp"

namespace lpi {

/// Dense 0/1 matrix, row-major.
using BinaryMatrix = std::vector<std::vector<int>>;

/// Thrown by validate(); carries every violated constraint, not just the first.
class InvalidIdeal : public std::invalid_argument {
public:
    explicit InvalidIdeal(std::vector<std::string> violations);
    [[nodiscard]] const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// A span one linked partition ideal: the alphabet pi (pi[0] is the empty
/// partition), one linking set per element (0-based indices into pi), and
/// the shift S.
struct SpanOneIdeal {
    std::vector<Partition> pi;
    std::vector<std::vector<std::size_t>> linking;
    int S = 1;

    [[nodiscard]] std::size_t order() const noexcept { return pi.size(); }
    [[nodiscard]] bool links(std::size_t from, std::size_t to) const;
};

/// Throws InvalidIdeal listing each violation: pi[0] not empty, linking of the
/// empty partition not the full alphabet, the empty partition missing from
/// some linking set, S smaller than a part, duplicate or out-of-range entries.
void validate(const SpanOneIdeal& ideal);

/// The Rogers-Ramanujan ideal: pi = {empty, 1, 2}, S = 2.
[[nodiscard]] SpanOneIdeal rogers_ramanujan_ideal();
/// The Kanade-Russell I1 ideal with seven alphabet elements, S = 3.
[[nodiscard]] SpanOneIdeal kanade_russell_i1_ideal();

struct Vertex {
    int length = 0;
    int size = 0;
};

/// A directed graph with per-vertex (length, size) weights. At most one edge
/// per ordered pair; loops are allowed.
struct Digraph {
    std::vector<Vertex> vertices;
    BinaryMatrix adjacency;

    [[nodiscard]] std::size_t order() const noexcept { return vertices.size(); }
};

/// A digraph whose vertex 0 is empty (length = size = 0), every other vertex
/// has positive length and size, and every vertex has an edge to vertex 0.
class ModifiedDigraph {
public:
    /// Throws std::invalid_argument if the invariants do not hold.
    explicit ModifiedDigraph(Digraph graph);

    [[nodiscard]] const Digraph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::size_t order() const noexcept { return graph_.order(); }

private:
    Digraph graph_;
};

using MonomialDiag = std::vector<Monomial>;

[[nodiscard]] ModifiedDigraph associated_graph(const SpanOneIdeal& ideal);
[[nodiscard]] const BinaryMatrix& adjacency(const ModifiedDigraph& g);
[[nodiscard]] MonomialDiag weight_diag(const Digraph& g);
[[nodiscard]] inline MonomialDiag weight_diag(const ModifiedDigraph& g) { return weight_diag(g.graph()); }

using SeriesMatrix = std::vector<std::vector<Series>>;

/// W(x).A.W(xq^S).A. ... .A.W(xq^{MS}); entry (i, j) generates the walks of
/// M steps from vertex i to vertex j.
[[nodiscard]] SeriesMatrix walk_genfun_matrix(const Digraph& g, int M, int S, int x_max, int q_max);

/// Orders large enough that walk_genfun_matrix(g, M, S, ...) is not truncated.
[[nodiscard]] Monomial walk_degree_bound(const Digraph& g, int M, int S);

/// W(x).(prod_{m=1..levels} A.W(xq^{mS})).e_1, evaluated right to left.
[[nodiscard]] std::vector<Series> genfun_vec(const ModifiedDigraph& g, int S, int levels, int x_max, int q_max);

/// Number of product factors after which genfun_vec no longer changes at the
/// given q-order: ceil(q_max / S) + 1.
[[nodiscard]] int stable_levels(int S, int q_max);

/// (G_1, ..., G_K), where G_k generates the members whose S-tail is pi[k].
[[nodiscard]] std::vector<Series> ideal_genfun_vec(const SpanOneIdeal& ideal, int x_max, int q_max);
[[nodiscard]] inline std::vector<Series> ideal_genfun_vec(const SpanOneIdeal& ideal, int q_max)
{
    return ideal_genfun_vec(ideal, q_max, q_max);
}

[[nodiscard]] Series sum(const std::vector<Series>& terms);

/// The chain (as indices into pi) whose shifted blocks make up lambda, or
/// nullopt if lambda is not a member. The chain of the empty partition is
/// empty; otherwise the last element is non-empty.
[[nodiscard]] std::optional<std::vector<std::size_t>> contains(const SpanOneIdeal& ideal, const Partition& lambda);

struct Members {
    Series genfun;
    /// Sorted by size, then lexicographically.
    std::vector<Partition> partitions;
};

/// All members of size <= q_max, found by depth-first search over chains.
[[nodiscard]] Members enumerate_members(const SpanOneIdeal& ideal, int q_max, int x_max);
[[nodiscard]] inline Members enumerate_members(const SpanOneIdeal& ideal, int q_max)
{
    return enumerate_members(ideal, q_max, q_max);
}

} // namespace lpi

#endif
