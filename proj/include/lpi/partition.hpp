#ifndef LPI_PARTITION_HPP
#define LPI_PARTITION_HPP

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpi/series.hpp"

namespace lpi {

/// An integer partition stored as a non-increasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; they are sorted non-increasing.
    /// Non-positive parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "a+b+c" or "empty". Whitespace around parts is ignored.
    static Partition parse(std::string_view text);

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// Number of parts.
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Sum of parts.
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    [[nodiscard]] int smallest_part() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// "a+b+c", or "empty".
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Adds k to every part.
[[nodiscard]] Partition phi(const Partition& lambda, int k);
/// Multiset union of parts.
[[nodiscard]] Partition oplus(const Partition& lambda, const Partition& mu);
/// Parts <= S.
[[nodiscard]] Partition s_tail(const Partition& lambda, int S);
/// Multiset difference; every part of mu must occur in lambda.
[[nodiscard]] Partition minus(const Partition& lambda, const Partition& mu);

/// lambda_j - lambda_{j+k} >= d wherever both parts exist.
[[nodiscard]] bool satisfies_gap(const Partition& lambda, int d, int k);
/// Difference at least 3 at distance 2, and any two consecutive parts that
/// differ by at most 1 have a sum divisible by 3.
[[nodiscard]] bool kr_i1_predicate(const Partition& lambda);

using PartitionPredicate = std::function<bool(const Partition&)>;

/// All partitions of n, in lexicographic order of their part lists.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// sum over partitions with |lambda| <= q_max satisfying pred of
/// x^{#lambda} q^{|lambda|}, by exhaustive enumeration.
[[nodiscard]] Series oracle_genfun(const PartitionPredicate& pred, int q_max, int x_max);
[[nodiscard]] inline Series oracle_genfun(const PartitionPredicate& pred, int q_max)
{
    return oracle_genfun(pred, q_max, q_max);
}

} // namespace lpi

#endif
