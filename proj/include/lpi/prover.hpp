#ifndef LPI_PROVER_HPP
#define LPI_PROVER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lpi/ideal.hpp"
#include "lpi/multisum.hpp"
#include "lpi/series.hpp"

namespace lpi {

struct ProofNode;

/// Binary-tree certificate. Subtrees are shared: a beta reached twice during
/// the search gets the same subtree object.
using ProofTree = std::shared_ptr<const ProofNode>;

/// A node H(beta). Leaves are shifted targets. An expanded node applies the
/// recurrence along `coordinate`: left child weighted 1, right child weighted
/// `weight`.
struct ProofNode {
    BetaVector beta;
    std::optional<std::size_t> coordinate;
    Monomial weight;
    ProofTree left;
    ProofTree right;

    [[nodiscard]] bool is_leaf() const noexcept { return !coordinate.has_value(); }
};

[[nodiscard]] ProofTree make_leaf(BetaVector beta);
[[nodiscard]] ProofTree make_expansion(BetaVector beta, std::size_t coordinate, Monomial weight, ProofTree left,
                                       ProofTree right);

/// Number of expanded nodes, counting shared subtrees once per occurrence.
[[nodiscard]] int expansion_count(const ProofTree& tree);

inline constexpr int default_max_expansions = 64;

/// The search ran out of its expansion budget. This is not a refutation.
class SearchExhausted : public std::runtime_error {
public:
    SearchExhausted(const BetaVector& root, int budget);
};

struct SearchOptions {
    int max_expansions = default_max_expansions;
    bool memoize = true;
};

/// Finds a certificate for H(root) whose leaves all lie in `targets`, with the
/// fewest expansions. Target-matching nodes are always leaves; coordinates
/// are tried in order and ties go to the smallest coordinate. A beta that
/// exceeds every target in some coordinate is abandoned, since expansions
/// never decrease coordinates.
[[nodiscard]] ProofTree derive_row(const MultisumProfile& p, const BetaVector& root,
                                   const std::set<BetaVector>& targets, const SearchOptions& options = {});

struct LeafTerm {
    BetaVector beta;
    Monomial weight;

    friend auto operator<=>(const LeafTerm&, const LeafTerm&) = default;
};

/// Each leaf with the product of the edge weights on its root path, sorted.
[[nodiscard]] std::vector<LeafTerm> leaf_combination(const ProofTree& tree);

/// Every expanded node's children are the recurrence children of its beta
/// along its coordinate, edge weights agree, and every leaf is a target.
[[nodiscard]] bool check_certificate(const MultisumProfile& p, const ProofTree& tree,
                                     const std::set<BetaVector>& targets);

/// H(root) = sum of weight * H(leaf) over the leaf combination, as series.
[[nodiscard]] bool verify_certificate_numeric(const MultisumProfile& p, const ProofTree& tree, int x_max, int q_max);

/// Instance of F(x) = U.V.F(xq^S) with F_k = H(betas[k]).
struct FactorizationSystem {
    MultisumProfile profile;
    int S = 1;
    std::vector<BetaVector> betas;
    BinaryMatrix U;
    MonomialDiag V;
    /// One certificate per distinct beta, in order of first appearance.
    std::vector<std::pair<BetaVector, ProofTree>> certificates;

    [[nodiscard]] std::size_t order() const noexcept { return betas.size(); }
};

/// The certificates do not fit together into a (U, V) pair.
class NotFactorizable : public std::runtime_error {
public:
    NotFactorizable(std::size_t row, const std::string& reason);
    /// 0-based row that failed.
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// The distinct shifted betas beta + S gamma.
[[nodiscard]] std::set<BetaVector> shifted_targets(const MultisumProfile& p, int S,
                                                   const std::vector<BetaVector>& betas);

/// Derives a certificate for each distinct beta and reads off U and V: row 1's
/// leaves fix V (within a group of equal shifted betas, monomials sorted by
/// x-degree then q-degree go to indices in order), and every other row's
/// leaves are matched into the same groups to fill U.
[[nodiscard]] FactorizationSystem assemble_system(const MultisumProfile& p, int S, const std::vector<BetaVector>& betas,
                                                  const SearchOptions& options = {});

struct RowCheck {
    std::size_t row;
    bool holds;
};

/// Row by row: H(beta_k) = sum_j U_kj V_j H(beta_j)(x q^S), with the shift done
/// on the series. Does not look at the certificates.
[[nodiscard]] std::vector<RowCheck> verify_rows(const FactorizationSystem& sys, int x_max, int q_max);
[[nodiscard]] bool verify_numeric(const FactorizationSystem& sys, int x_max, int q_max);

enum class ExportFormat { dot, json };

/// "dot" or "json"; throws std::invalid_argument otherwise.
[[nodiscard]] ExportFormat parse_export_format(const std::string& name);

[[nodiscard]] nlohmann::json tree_to_json(const ProofTree& tree);
[[nodiscard]] ProofTree tree_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json system_to_json(const FactorizationSystem& sys);
/// Reads {"profile", "S", "betas"} and, when present, "U", "V", "certificates".
[[nodiscard]] FactorizationSystem system_from_json(const nlohmann::json& j);

[[nodiscard]] std::string export_tree(const ProofTree& tree, ExportFormat format);
[[nodiscard]] std::string export_system(const FactorizationSystem& sys, ExportFormat format);

} // namespace lpi

#endif
