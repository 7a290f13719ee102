#include "lpi/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lpi/io.hpp"

namespace lpi {

namespace {

class CertificateSearch {
public:
    CertificateSearch(const MultisumProfile& p, const std::set<BetaVector>& targets, bool memoize)
        : profile_(p), targets_(targets), memoize_(memoize)
    {
    }

    struct Found {
        ProofTree tree;
        int cost;
    };

    // Cheapest certificate for H(beta) using at most `budget` expansions.
    std::optional<Found> best(const BetaVector& beta, int budget)
    {
        if (targets_.contains(beta)) {
            return Found{leaf(beta), 0};
        }
        if (abandoned(beta)) {
            return std::nullopt;
        }
        if (memoize_) {
            const auto it = memo_.find(beta);
            if (it != memo_.end()) {
                if (it->second.found) {
                    return it->second.found->cost <= budget ? it->second.found : std::nullopt;
                }
                if (it->second.failed_budget >= budget) {
                    return std::nullopt;
                }
            }
        }

        std::optional<Found> result;
        if (budget > 0) {
            for (std::size_t r = 0; r < profile_.rank(); ++r) {
                const auto step = rec_children(profile_, beta, r);
                const auto left = best(step.left, budget - 1);
                if (!left) {
                    continue;
                }
                const auto right = best(step.right, budget - 1 - left->cost);
                if (!right) {
                    continue;
                }
                const int cost = 1 + left->cost + right->cost;
                if (!result || cost < result->cost) {
                    result = Found{make_expansion(beta, r, step.weight, left->tree, right->tree), cost};
                }
            }
        }

        if (memoize_) {
            auto& entry = memo_[beta];
            if (result) {
                entry.found = result;
            } else {
                entry.failed_budget = std::max(entry.failed_budget, budget);
            }
        }
        return result;
    }

private:
    struct MemoEntry {
        std::optional<Found> found;
        int failed_budget = -1;
    };

    // Exceeds every target in some coordinate; no expansion can come back.
    bool abandoned(const BetaVector& beta) const
    {
        return std::all_of(targets_.begin(), targets_.end(), [&](const BetaVector& t) {
            for (std::size_t i = 0; i < beta.size(); ++i) {
                if (beta[i] > t[i]) {
                    return true;
                }
            }
            return false;
        });
    }

    ProofTree leaf(const BetaVector& beta)
    {
        auto& slot = leaves_[beta];
        if (!slot) {
            slot = make_leaf(beta);
        }
        return slot;
    }

    const MultisumProfile& profile_;
    const std::set<BetaVector>& targets_;
    bool memoize_;
    std::map<BetaVector, MemoEntry> memo_;
    std::map<BetaVector, ProofTree> leaves_;
};

void collect_leaves(const ProofTree& node, Monomial weight, std::vector<LeafTerm>& out)
{
    if (node->is_leaf()) {
        out.push_back({node->beta, weight});
        return;
    }
    collect_leaves(node->left, weight, out);
    collect_leaves(node->right, weight * node->weight, out);
}

std::string dot_weight(Monomial m)
{
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    if (m.x_exp != 0) {
        out += m.x_exp == 1 ? "x" : "x^" + std::to_string(m.x_exp);
    }
    if (m.q_exp != 0) {
        if (!out.empty()) {
            out += ' ';
        }
        out += m.q_exp == 1 ? "q" : "q^" + std::to_string(m.q_exp);
    }
    return out;
}

void write_dot_nodes(std::ostream& os, const ProofTree& node, const std::string& prefix, int& counter,
                     const std::string& indent)
{
    const std::string id = prefix + std::to_string(counter++);
    os << indent << id << " [label=\"H" << node->beta.to_string() << "\"];\n";
    if (node->is_leaf()) {
        return;
    }
    const std::string left_id = prefix + std::to_string(counter);
    os << indent << id << " -> " << left_id << " [label=\"1\"];\n";
    write_dot_nodes(os, node->left, prefix, counter, indent);
    const std::string right_id = prefix + std::to_string(counter);
    os << indent << id << " -> " << right_id << " [label=\"" << dot_weight(node->weight) << "\"];\n";
    write_dot_nodes(os, node->right, prefix, counter, indent);
}

nlohmann::json beta_json(const BetaVector& beta)
{
    return beta.values();
}

} // namespace

ProofTree make_leaf(BetaVector beta)
{
    return std::make_shared<const ProofNode>(ProofNode{std::move(beta), std::nullopt, {}, nullptr, nullptr});
}

ProofTree make_expansion(BetaVector beta, std::size_t coordinate, Monomial weight, ProofTree left, ProofTree right)
{
    if (!left || !right) {
        throw std::invalid_argument("make_expansion: both children are required");
    }
    return std::make_shared<const ProofNode>(
        ProofNode{std::move(beta), coordinate, weight, std::move(left), std::move(right)});
}

int expansion_count(const ProofTree& tree)
{
    if (tree->is_leaf()) {
        return 0;
    }
    return 1 + expansion_count(tree->left) + expansion_count(tree->right);
}

SearchExhausted::SearchExhausted(const BetaVector& root, int budget)
    : std::runtime_error("no certificate for H" + root.to_string() + " within " + std::to_string(budget) +
                         " expansions")
{
}

ProofTree derive_row(const MultisumProfile& p, const BetaVector& root, const std::set<BetaVector>& targets,
                     const SearchOptions& options)
{
    validate(p);
    for (const auto& t : targets) {
        if (t.size() != p.rank()) {
            throw std::invalid_argument("target " + t.to_string() + " does not match the profile rank");
        }
    }
    CertificateSearch search(p, targets, options.memoize);
    // Iterative deepening on the number of expansions.
    for (int budget = 0; budget <= options.max_expansions; ++budget) {
        if (auto found = search.best(root, budget)) {
            return found->tree;
        }
    }
    throw SearchExhausted(root, options.max_expansions);
}

std::vector<LeafTerm> leaf_combination(const ProofTree& tree)
{
    std::vector<LeafTerm> out;
    collect_leaves(tree, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool check_certificate(const MultisumProfile& p, const ProofTree& tree, const std::set<BetaVector>& targets)
{
    if (tree->is_leaf()) {
        return targets.contains(tree->beta);
    }
    if (*tree->coordinate >= p.rank() || tree->beta.size() != p.rank()) {
        return false;
    }
    const auto step = rec_children(p, tree->beta, *tree->coordinate);
    return step.left == tree->left->beta && step.right == tree->right->beta && step.weight == tree->weight &&
           check_certificate(p, tree->left, targets) && check_certificate(p, tree->right, targets);
}

bool verify_certificate_numeric(const MultisumProfile& p, const ProofTree& tree, int x_max, int q_max)
{
    const Series lhs = eval_H(p, tree->beta, x_max, q_max);
    std::map<BetaVector, Series> evaluated;
    Series rhs = Series::zero(x_max, q_max);
    for (const auto& term : leaf_combination(tree)) {
        auto it = evaluated.find(term.beta);
        if (it == evaluated.end()) {
            it = evaluated.emplace(term.beta, eval_H(p, term.beta, x_max, q_max)).first;
        }
        rhs += it->second.times_monomial(term.weight);
    }
    return eq_upto(lhs, rhs);
}

NotFactorizable::NotFactorizable(std::size_t row, const std::string& reason)
    : std::runtime_error("not factorizable with this beta list: row " + std::to_string(row + 1) + ": " + reason),
      row_(row)
{
}

std::set<BetaVector> shifted_targets(const MultisumProfile& p, int S, const std::vector<BetaVector>& betas)
{
    std::set<BetaVector> out;
    for (const auto& beta : betas) {
        out.insert(shift_beta(p, beta, S));
    }
    return out;
}

FactorizationSystem assemble_system(const MultisumProfile& p, int S, const std::vector<BetaVector>& betas,
                                    const SearchOptions& options)
{
    validate(p);
    if (betas.empty()) {
        throw std::invalid_argument("assemble_system: empty beta list");
    }
    const std::size_t K = betas.size();
    const auto targets = shifted_targets(p, S, betas);

    FactorizationSystem sys{p, S, betas, BinaryMatrix(K, std::vector<int>(K, 0)), MonomialDiag(K), {}};
    std::map<BetaVector, std::vector<LeafTerm>> leaves_by_root;
    for (const auto& beta : betas) {
        if (leaves_by_root.contains(beta)) {
            continue;
        }
        auto tree = derive_row(p, beta, targets, options);
        leaves_by_root.emplace(beta, leaf_combination(tree));
        sys.certificates.emplace_back(beta, std::move(tree));
    }

    // Indices j grouped by beta_j + S gamma, in index order.
    std::map<BetaVector, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < K; ++j) {
        groups[shift_beta(p, betas[j], S)].push_back(j);
    }

    const auto& first = leaves_by_root.at(betas[0]);
    if (first.size() != K) {
        throw NotFactorizable(0, "certificate has " + std::to_string(first.size()) + " leaves, expected " +
                                     std::to_string(K));
    }
    for (const auto& [target, indices] : groups) {
        std::vector<Monomial> weights;
        for (const auto& term : first) {
            if (term.beta == target) {
                weights.push_back(term.weight);
            }
        }
        if (weights.size() != indices.size()) {
            throw NotFactorizable(0, "H" + target.to_string() + " occurs " + std::to_string(weights.size()) +
                                         " times among the leaves, expected " + std::to_string(indices.size()));
        }
        std::sort(weights.begin(), weights.end());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            sys.V[indices[i]] = weights[i];
        }
    }
    if (!sys.V[0].is_one()) {
        throw NotFactorizable(0, "no leaf H" + shift_beta(p, betas[0], S).to_string() + " with weight 1");
    }
    std::fill(sys.U[0].begin(), sys.U[0].end(), 1);

    for (std::size_t k = 1; k < K; ++k) {
        for (const auto& term : leaves_by_root.at(betas[k])) {
            const auto& indices = groups.at(term.beta);
            const auto match = std::find_if(indices.begin(), indices.end(), [&](std::size_t j) {
                return sys.U[k][j] == 0 && sys.V[j] == term.weight;
            });
            if (match == indices.end()) {
                throw NotFactorizable(k, "leaf " + term.weight.to_string() + "*H" + term.beta.to_string() +
                                             " has no matching column");
            }
            sys.U[k][*match] = 1;
        }
        if (sys.U[k][0] != 1) {
            throw NotFactorizable(k, "no leaf H" + shift_beta(p, betas[0], S).to_string() + " with weight 1");
        }
    }
    return sys;
}

std::vector<RowCheck> verify_rows(const FactorizationSystem& sys, int x_max, int q_max)
{
    const std::size_t K = sys.order();
    if (sys.U.size() != K || sys.V.size() != K) {
        throw std::invalid_argument("verify_numeric: U and V must match the number of betas");
    }
    std::map<BetaVector, Series> values;
    for (const auto& beta : sys.betas) {
        if (!values.contains(beta)) {
            values.emplace(beta, eval_H(sys.profile, beta, x_max, q_max));
        }
    }
    std::vector<Series> shifted;
    shifted.reserve(K);
    for (std::size_t j = 0; j < K; ++j) {
        shifted.push_back(values.at(sys.betas[j]).shift_x(sys.S).times_monomial(sys.V[j]));
    }
    std::vector<RowCheck> out;
    for (std::size_t k = 0; k < K; ++k) {
        if (sys.U[k].size() != K) {
            throw std::invalid_argument("verify_numeric: U must be square");
        }
        Series rhs = Series::zero(x_max, q_max);
        for (std::size_t j = 0; j < K; ++j) {
            if (sys.U[k][j] != 0) {
                rhs += shifted[j];
            }
        }
        out.push_back({k, eq_upto(values.at(sys.betas[k]), rhs)});
    }
    return out;
}

bool verify_numeric(const FactorizationSystem& sys, int x_max, int q_max)
{
    const auto rows = verify_rows(sys, x_max, q_max);
    return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.holds; });
}

ExportFormat parse_export_format(const std::string& name)
{
    if (name == "dot") {
        return ExportFormat::dot;
    }
    if (name == "json") {
        return ExportFormat::json;
    }
    throw std::invalid_argument("unknown export format \"" + name + "\" (expected dot or json)");
}

nlohmann::json tree_to_json(const ProofTree& tree)
{
    nlohmann::json j{{"beta", beta_json(tree->beta)}};
    if (!tree->is_leaf()) {
        j["coordinate"] = *tree->coordinate + 1;
        j["weight"] = {tree->weight.x_exp, tree->weight.q_exp};
        j["left"] = tree_to_json(tree->left);
        j["right"] = tree_to_json(tree->right);
    }
    return j;
}

namespace {

ProofTree tree_from_json_at(const nlohmann::json& j, const std::string& where)
{
    using namespace json_fields;
    BetaVector beta(integer_array(member(j, "beta", where), where + ".beta"));
    if (!j.contains("coordinate")) {
        return make_leaf(std::move(beta));
    }
    const int coordinate = integer(j["coordinate"], where + ".coordinate");
    if (coordinate < 1 || static_cast<std::size_t>(coordinate) > beta.size()) {
        throw FormatError(where + ".coordinate: " + std::to_string(coordinate) + " outside 1.." +
                          std::to_string(beta.size()));
    }
    const auto weight = integer_array(member(j, "weight", where), where + ".weight");
    if (weight.size() != 2) {
        throw FormatError(where + ".weight: expected [x-degree, q-degree]");
    }
    return make_expansion(std::move(beta), static_cast<std::size_t>(coordinate - 1), {weight[0], weight[1]},
                          tree_from_json_at(member(j, "left", where), where + ".left"),
                          tree_from_json_at(member(j, "right", where), where + ".right"));
}

} // namespace

ProofTree tree_from_json(const nlohmann::json& j)
{
    return tree_from_json_at(j, "tree");
}

nlohmann::json system_to_json(const FactorizationSystem& sys)
{
    nlohmann::json betas = nlohmann::json::array();
    for (const auto& beta : sys.betas) {
        betas.push_back(beta_json(beta));
    }
    nlohmann::json V = nlohmann::json::array();
    for (const auto& m : sys.V) {
        V.push_back({m.x_exp, m.q_exp});
    }
    nlohmann::json certificates = nlohmann::json::array();
    for (const auto& [root, tree] : sys.certificates) {
        certificates.push_back({{"root", beta_json(root)}, {"tree", tree_to_json(tree)}});
    }
    return {{"profile", profile_to_json(sys.profile)},
            {"S", sys.S},
            {"betas", betas},
            {"U", sys.U},
            {"V", V},
            {"certificates", certificates}};
}

FactorizationSystem system_from_json(const nlohmann::json& j)
{
    using namespace json_fields;
    FactorizationSystem sys;
    sys.profile = profile_from_json(member(j, "profile", "system"));
    sys.S = integer(member(j, "S", "system"), "system.S");
    if (sys.S < 1) {
        throw FormatError("system.S: must be a positive integer");
    }
    const auto betas = integer_matrix(member(j, "betas", "system"), "system.betas");
    if (betas.empty()) {
        throw FormatError("system.betas: at least one beta is required");
    }
    for (std::size_t k = 0; k < betas.size(); ++k) {
        if (betas[k].size() != sys.profile.rank()) {
            throw FormatError("system.betas[" + std::to_string(k) + "]: expected " +
                              std::to_string(sys.profile.rank()) + " entries");
        }
        sys.betas.emplace_back(betas[k]);
    }
    const std::size_t K = sys.betas.size();
    if (j.contains("U")) {
        sys.U = integer_matrix(j["U"], "system.U");
        if (sys.U.size() != K ||
            std::any_of(sys.U.begin(), sys.U.end(), [K](const auto& row) { return row.size() != K; })) {
            throw FormatError("system.U: expected a " + std::to_string(K) + " x " + std::to_string(K) + " matrix");
        }
    }
    if (j.contains("V")) {
        const auto V = integer_matrix(j["V"], "system.V");
        if (V.size() != K) {
            throw FormatError("system.V: expected " + std::to_string(K) + " monomials");
        }
        for (std::size_t k = 0; k < K; ++k) {
            if (V[k].size() != 2) {
                throw FormatError("system.V[" + std::to_string(k) + "]: expected [x-degree, q-degree]");
            }
            sys.V.push_back({V[k][0], V[k][1]});
        }
    }
    if (j.contains("certificates")) {
        const auto& certs = j["certificates"];
        if (!certs.is_array()) {
            throw FormatError("system.certificates: expected an array");
        }
        for (std::size_t i = 0; i < certs.size(); ++i) {
            const std::string where = "system.certificates[" + std::to_string(i) + "]";
            BetaVector root(integer_array(member(certs[i], "root", where), where + ".root"));
            sys.certificates.emplace_back(std::move(root), tree_from_json_at(member(certs[i], "tree", where),
                                                                             where + ".tree"));
        }
    }
    return sys;
}

std::string export_tree(const ProofTree& tree, ExportFormat format)
{
    if (format == ExportFormat::json) {
        return tree_to_json(tree).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "digraph proof {\n  node [shape=plaintext];\n";
    int counter = 0;
    write_dot_nodes(os, tree, "n", counter, "  ");
    os << "}\n";
    return os.str();
}

std::string export_system(const FactorizationSystem& sys, ExportFormat format)
{
    if (format == ExportFormat::json) {
        return system_to_json(sys).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "digraph certificates {\n  node [shape=plaintext];\n";
    for (std::size_t c = 0; c < sys.certificates.size(); ++c) {
        os << "  subgraph cluster_" << c << " {\n";
        os << "    label=\"H" << sys.certificates[c].first.to_string() << "\";\n";
        int counter = 0;
        write_dot_nodes(os, sys.certificates[c].second, "c" + std::to_string(c) + "_n", counter, "    ");
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace lpi
