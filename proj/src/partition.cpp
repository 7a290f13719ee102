#include "lpi/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lpi {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; })) {
        throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text)
{
    text = trim(text);
    if (text == "empty" || text == "0") {
        return {};
    }
    if (text.empty()) {
        throw std::invalid_argument("empty partition literal (use \"empty\")");
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto plus = text.find('+', pos);
        const auto token = trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value <= 0) {
            throw std::invalid_argument("malformed partition literal \"" + std::string(text) + "\"");
        }
        parts.push_back(value);
        if (plus == std::string_view::npos) {
            break;
        }
        pos = plus + 1;
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        throw std::invalid_argument("partition literal \"" + std::string(text) + "\" is not non-increasing");
    }
    return Partition(std::move(parts));
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
    if (parts_.empty()) {
        return "empty";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += '+';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition phi(const Partition& lambda, int k)
{
    if (k < 0) {
        throw std::invalid_argument("phi: shift must be non-negative");
    }
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (auto& p : parts) {
        p += k;
    }
    return Partition(std::move(parts));
}

Partition oplus(const Partition& lambda, const Partition& mu)
{
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

Partition s_tail(const Partition& lambda, int S)
{
    std::vector<int> parts;
    std::copy_if(lambda.parts().begin(), lambda.parts().end(), std::back_inserter(parts),
                 [S](int p) { return p <= S; });
    return Partition(std::move(parts));
}

Partition minus(const Partition& lambda, const Partition& mu)
{
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (int p : mu.parts()) {
        auto it = std::find(parts.begin(), parts.end(), p);
        if (it == parts.end()) {
            throw std::invalid_argument("minus: part " + std::to_string(p) + " not present");
        }
        parts.erase(it);
    }
    return Partition(std::move(parts));
}

bool satisfies_gap(const Partition& lambda, int d, int k)
{
    if (k <= 0) {
        throw std::invalid_argument("satisfies_gap: distance must be positive");
    }
    const auto parts = lambda.parts();
    for (std::size_t j = 0; j + static_cast<std::size_t>(k) < parts.size(); ++j) {
        if (parts[j] - parts[j + static_cast<std::size_t>(k)] < d) {
            return false;
        }
    }
    return true;
}

bool kr_i1_predicate(const Partition& lambda)
{
    if (!satisfies_gap(lambda, 3, 2)) {
        return false;
    }
    const auto parts = lambda.parts();
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        if (parts[j] - parts[j + 1] <= 1 && (parts[j] + parts[j + 1]) % 3 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) {
        throw std::invalid_argument("partitions_of: negative size");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, prefix, out);
    return out;
}

Series oracle_genfun(const PartitionPredicate& pred, int q_max, int x_max)
{
    // The empty partition belongs to every ideal.
    Series out = Series::one(x_max, q_max);
    for (int n = 1; n <= q_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            if (pred(lambda)) {
                out.add_term(lambda.length(), n, 1);
            }
        }
    }
    return out;
}

} // namespace lpi
