#include "lpi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpi/ideal.hpp"
#include "lpi/io.hpp"
#include "lpi/multisum.hpp"
#include "lpi/partition.hpp"
#include "lpi/prover.hpp"
#include "lpi/qdiff.hpp"

namespace lpi {

namespace {

struct Options {
    int q_max = cli_default_q_max;
    std::optional<int> x_max;
    std::string input;
    std::string out;
    std::string format;
    int max_expansions = default_max_expansions;

    // command specific
    std::string predicate;
    int d = 2;
    int k = 1;
    std::string partition;
    std::string beta;
    int coordinate = 1;
    int S = 0;
    std::string multisum_system;

    [[nodiscard]] int x() const { return x_max.value_or(q_max); }
};

void add_orders(CLI::App* cmd, Options& o)
{
    cmd->add_option("--qmax", o.q_max, "q-truncation order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--xmax", o.x_max, "x-truncation order (default: qmax)")->check(CLI::NonNegativeNumber);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path);
    }
    file << text;
}

std::string render_row(const std::vector<int>& row)
{
    std::string out;
    for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j == 0 ? "" : " ") + std::to_string(row[j]);
    }
    return out;
}

std::string render_combination(const std::vector<LeafTerm>& terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        if (!terms[i].weight.is_one()) {
            out += terms[i].weight.to_string() + "*";
        }
        out += "H" + terms[i].beta.to_string();
    }
    return out;
}

// A profile may come from a profile file or from a system file embedding one.
MultisumProfile load_profile(const std::string& path)
{
    const auto j = load_json(path);
    if (j.is_object() && j.contains("profile")) {
        return profile_from_json(j["profile"]);
    }
    return profile_from_json(j);
}

QDiffSystem load_qdiff_system(const nlohmann::json& j, std::optional<SpanOneIdeal>& ideal)
{
    if (j.is_object() && j.contains("pi")) {
        ideal = ideal_from_json(j);
        return system_from_ideal(*ideal);
    }
    return qdiff_system_from_json(j);
}

void print_system(std::ostream& out, const FactorizationSystem& sys)
{
    out << "U =\n";
    for (const auto& row : sys.U) {
        out << "  " << render_row(row) << "\n";
    }
    out << "V = diag(";
    for (std::size_t j = 0; j < sys.V.size(); ++j) {
        out << (j == 0 ? "" : ", ") << sys.V[j].to_string();
    }
    out << ")\n";
}

nlohmann::json matrix_report(const FactorizationSystem& sys)
{
    nlohmann::json V = nlohmann::json::array();
    for (const auto& m : sys.V) {
        V.push_back({m.x_exp, m.q_exp});
    }
    return {{"U", sys.U}, {"V", V}};
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    PartitionPredicate pred;
    if (o.predicate == "gap") {
        const int d = o.d;
        const int k = o.k;
        pred = [d, k](const Partition& p) { return satisfies_gap(p, d, k); };
    } else if (o.predicate == "kr-i1") {
        pred = kr_i1_predicate;
    } else if (o.predicate == "all") {
        pred = [](const Partition&) { return true; };
    } else {
        throw CLI::ValidationError("predicate", "unknown predicate \"" + o.predicate + "\" (gap, kr-i1, all)");
    }
    out << oracle_genfun(pred, o.q_max, o.x()).to_string() << "\n";
    return exit_ok;
}

int cmd_ideal_genfun(const Options& o, std::ostream& out)
{
    const auto ideal = ideal_from_json(load_json(o.input));
    const auto G = ideal_genfun_vec(ideal, o.x(), o.q_max);
    for (std::size_t k = 0; k < G.size(); ++k) {
        out << "G_" << k + 1 << " [" << ideal.pi[k].to_string() << "] = " << G[k].to_string() << "\n";
    }
    out << "G = " << sum(G).to_string() << "\n";
    return exit_ok;
}

int cmd_ideal_members(const Options& o, std::ostream& out)
{
    const auto ideal = ideal_from_json(load_json(o.input));
    const auto members = enumerate_members(ideal, o.q_max, o.x());
    for (const auto& lambda : members.partitions) {
        out << lambda.to_string() << "\n";
    }
    out << "count = " << members.partitions.size() << "\n";
    out << "G = " << members.genfun.to_string() << "\n";
    return exit_ok;
}

int cmd_ideal_contains(const Options& o, std::ostream& out)
{
    const auto ideal = ideal_from_json(load_json(o.input));
    Partition lambda;
    try {
        lambda = Partition::parse(o.partition);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("partition", e.what());
    }
    const auto chain = contains(ideal, lambda);
    if (!chain) {
        out << lambda.to_string() << " is not a member\n";
        return exit_false;
    }
    out << lambda.to_string() << " is a member; chain:";
    if (chain->empty()) {
        out << " (empty)";
    }
    for (std::size_t i = 0; i < chain->size(); ++i) {
        out << (i == 0 ? " " : " -> ") << ideal.pi[(*chain)[i]].to_string();
    }
    out << "\n";
    return exit_ok;
}

int cmd_qdiff_solve(const Options& o, std::ostream& out)
{
    std::optional<SpanOneIdeal> ideal;
    const auto sys = load_qdiff_system(load_json(o.input), ideal);
    const auto F = solve(sys, o.x(), o.q_max);
    for (std::size_t k = 0; k < F.size(); ++k) {
        out << "F_" << k + 1 << " = " << F[k].to_string() << "\n";
    }
    return exit_ok;
}

int cmd_qdiff_check(const Options& o, std::ostream& out)
{
    std::optional<SpanOneIdeal> ideal;
    const auto sys = load_qdiff_system(load_json(o.input), ideal);
    const auto solved = solve(sys, o.x(), o.q_max);
    nlohmann::json report{{"q_max", o.q_max}, {"x_max", o.x()}};
    bool all = true;

    const bool solved_ok = check_system(solved, sys);
    out << "solve() satisfies F(x) = A.W(x).F(xq^S): " << (solved_ok ? "true" : "false") << "\n";
    report["solve_satisfies_system"] = solved_ok;
    all = all && solved_ok;

    if (ideal) {
        const auto F = f_from_g(sys.A, ideal_genfun_vec(*ideal, o.x(), o.q_max));
        bool agree = true;
        for (std::size_t k = 0; k < F.size(); ++k) {
            agree = agree && eq_upto(F[k], solved[k]);
        }
        const bool holds = check_system(F, sys);
        out << "A.G satisfies the system: " << (holds ? "true" : "false") << "\n";
        out << "A.G equals solve(): " << (agree ? "true" : "false") << "\n";
        report["genfun_satisfies_system"] = holds;
        report["genfun_equals_solution"] = agree;
        all = all && holds && agree;
    }
    if (!o.multisum_system.empty()) {
        const auto ms = system_from_json(load_json(o.multisum_system));
        if (ms.order() != sys.order()) {
            throw FormatError(o.multisum_system + ": " + std::to_string(ms.order()) + " betas for a system of order " +
                              std::to_string(sys.order()));
        }
        std::vector<Series> H;
        for (const auto& beta : ms.betas) {
            H.push_back(eval_H(ms.profile, beta, o.x(), o.q_max));
        }
        bool agree = true;
        for (std::size_t k = 0; k < H.size(); ++k) {
            agree = agree && eq_upto(H[k], solved[k]);
        }
        const bool holds = check_system(H, sys);
        out << "multisum vector satisfies the system: " << (holds ? "true" : "false") << "\n";
        out << "multisum vector equals solve(): " << (agree ? "true" : "false") << "\n";
        report["multisum_satisfies_system"] = holds;
        report["multisum_equals_solution"] = agree;
        all = all && holds && agree;
    }
    report["result"] = all;
    out << "\n" << report.dump() << "\n";
    return all ? exit_ok : exit_false;
}

int cmd_multisum_eval(const Options& o, std::ostream& out)
{
    const auto p = load_profile(o.input);
    out << eval_H(p, parse_beta(o.beta), o.x(), o.q_max).to_string() << "\n";
    return exit_ok;
}

int cmd_multisum_rec(const Options& o, std::ostream& out)
{
    const auto p = load_profile(o.input);
    const auto beta = parse_beta(o.beta);
    if (o.coordinate < 1 || static_cast<std::size_t>(o.coordinate) > p.rank()) {
        throw CLI::ValidationError("--coord", "coordinate outside 1.." + std::to_string(p.rank()));
    }
    const auto r = static_cast<std::size_t>(o.coordinate - 1);
    const auto step = rec_children(p, beta, r);
    const bool holds = verify_recurrence_numeric(p, beta, r, o.x(), o.q_max);
    out << "H" << beta.to_string() << " = H" << step.left.to_string() << " + " << step.weight.to_string() << "*H"
        << step.right.to_string() << "\n";
    out << "numeric check: " << (holds ? "true" : "false") << "\n";
    const nlohmann::json report{{"beta", beta.values()},
                                {"coordinate", o.coordinate},
                                {"left", step.left.values()},
                                {"weight", {step.weight.x_exp, step.weight.q_exp}},
                                {"right", step.right.values()},
                                {"q_max", o.q_max},
                                {"x_max", o.x()},
                                {"result", holds}};
    out << "\n" << report.dump() << "\n";
    return holds ? exit_ok : exit_false;
}

int cmd_multisum_shift(const Options& o, std::ostream& out)
{
    const auto p = load_profile(o.input);
    out << "H" << shift_beta(p, parse_beta(o.beta), o.S).to_string() << "\n";
    return exit_ok;
}

int cmd_multisum_check(const Options& o, std::ostream& out)
{
    const auto p = load_profile(o.input);
    const auto beta = parse_beta(o.beta);
    const bool positive = check_positivity(p, beta);
    out << "positivity: " << (positive ? "true" : "false") << "\n";
    nlohmann::json report{{"beta", beta.values()}, {"positivity", positive}};
    bool all = positive;
    if (o.S > 0) {
        const bool additional = check_additional(p, o.S);
        out << "additional conditions (S = " << o.S << "): " << (additional ? "true" : "false") << "\n";
        report["S"] = o.S;
        report["additional"] = additional;
        all = all && additional;
    }
    report["result"] = all;
    out << "\n" << report.dump() << "\n";
    return all ? exit_ok : exit_false;
}

int cmd_prove(const Options& o, std::ostream& out)
{
    const auto input = system_from_json(load_json(o.input));
    const auto sys = assemble_system(input.profile, input.S, input.betas, {o.max_expansions, true});
    const auto targets = shifted_targets(sys.profile, sys.S, sys.betas);

    out << "S = " << sys.S << ", K = " << sys.order() << "\n";
    bool sound = true;
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& [root, tree] : sys.certificates) {
        const bool nodes_ok = check_certificate(sys.profile, tree, targets);
        const bool telescoped = verify_certificate_numeric(sys.profile, tree, o.x(), o.q_max);
        sound = sound && nodes_ok && telescoped;
        out << "H" << root.to_string() << " = " << render_combination(leaf_combination(tree)) << "\n";
        out << "  expansions: " << expansion_count(tree) << ", node check: " << (nodes_ok ? "true" : "false")
            << ", telescoped check: " << (telescoped ? "true" : "false") << "\n";
        certs.push_back({{"root", root.values()},
                         {"expansions", expansion_count(tree)},
                         {"node_check", nodes_ok},
                         {"telescoped_check", telescoped}});
    }
    print_system(out, sys);

    if (!o.out.empty()) {
        write_file(o.out + ".dot", export_system(sys, ExportFormat::dot));
        write_file(o.out + ".cert.json", export_system(sys, ExportFormat::json));
        out << "wrote " << o.out << ".dot and " << o.out << ".cert.json\n";
    }
    if (!o.format.empty()) {
        out << export_system(sys, parse_export_format(o.format));
    }
    auto report = matrix_report(sys);
    report["certificates"] = certs;
    report["q_max"] = o.q_max;
    report["x_max"] = o.x();
    report["result"] = sound;
    out << "\n" << report.dump() << "\n";
    return sound ? exit_ok : exit_false;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    auto sys = system_from_json(load_json(o.input));
    std::string source = "file";
    if (sys.U.empty() || sys.V.empty()) {
        sys = assemble_system(sys.profile, sys.S, sys.betas, {o.max_expansions, true});
        source = "derived";
    }
    const auto rows = verify_rows(sys, o.x(), o.q_max);
    out << "checking F(x) = U.V.F(xq^" << sys.S << ") with U, V from " << source << ", truncated at x^" << o.x()
        << ", q^" << o.q_max << "\n";
    print_system(out, sys);
    bool all = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& row : rows) {
        std::vector<LeafTerm> rhs;
        for (std::size_t j = 0; j < sys.order(); ++j) {
            if (sys.U[row.row][j] != 0) {
                rhs.push_back({shift_beta(sys.profile, sys.betas[j], sys.S), sys.V[j]});
            }
        }
        out << "row " << row.row + 1 << ": H" << sys.betas[row.row].to_string() << " = " << render_combination(rhs)
            << " : " << (row.holds ? "true" : "false") << "\n";
        checks.push_back({{"row", row.row + 1}, {"holds", row.holds}});
        all = all && row.holds;
    }
    out << "result: " << (all ? "true" : "false") << "\n";
    auto report = matrix_report(sys);
    report["rows"] = checks;
    report["source"] = source;
    report["q_max"] = o.q_max;
    report["x_max"] = o.x();
    report["result"] = all;
    out << "\n" << report.dump() << "\n";
    return all ? exit_ok : exit_false;
}

int cmd_export(const Options& o, std::ostream& out)
{
    const auto j = load_json(o.input);
    const auto format = parse_export_format(o.format.empty() ? "dot" : o.format);
    std::string text;
    if (j.is_object() && j.contains("profile")) {
        text = export_system(system_from_json(j), format);
    } else {
        text = export_tree(tree_from_json(j), format);
    }
    if (o.out.empty()) {
        out << text;
    } else {
        write_file(o.out, text);
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Linked partition ideals, q-multi-summations and binary-tree certificates", "lpi"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&, std::ostream&) = nullptr;

    auto* oracle = app.add_subcommand("oracle", "brute-force generating function of a partition predicate");
    oracle->add_option("predicate", o.predicate, "gap | kr-i1 | all")->required();
    oracle->add_option("--d", o.d, "minimal difference for gap");
    oracle->add_option("--k", o.k, "distance for gap")->check(CLI::PositiveNumber);
    add_orders(oracle, o);
    oracle->callback([&] { action = cmd_oracle; });

    auto* ideal = app.add_subcommand("ideal", "span one linked partition ideals");
    ideal->require_subcommand(1);
    auto* genfun = ideal->add_subcommand("genfun", "generating functions G_k by the matrix product");
    genfun->add_option("file", o.input, "ideal JSON")->required()->check(CLI::ExistingFile);
    add_orders(genfun, o);
    genfun->callback([&] { action = cmd_ideal_genfun; });
    auto* members = ideal->add_subcommand("members", "enumerate members by chain search");
    members->add_option("file", o.input, "ideal JSON")->required()->check(CLI::ExistingFile);
    add_orders(members, o);
    members->callback([&] { action = cmd_ideal_members; });
    auto* contains_cmd = ideal->add_subcommand("contains", "decompose a partition into a chain");
    contains_cmd->add_option("file", o.input, "ideal JSON")->required()->check(CLI::ExistingFile);
    contains_cmd->add_option("partition", o.partition, "partition literal, e.g. 6+4+1")->required();
    contains_cmd->callback([&] { action = cmd_ideal_contains; });

    auto* qdiff = app.add_subcommand("qdiff", "the q-difference system F(x) = A.W(x).F(xq^S)");
    qdiff->require_subcommand(1);
    auto* qsolve = qdiff->add_subcommand("solve", "solve with F_k(0) = 1");
    qsolve->add_option("file", o.input, "ideal JSON or system JSON")->required()->check(CLI::ExistingFile);
    add_orders(qsolve, o);
    qsolve->callback([&] { action = cmd_qdiff_solve; });
    auto* qcheck = qdiff->add_subcommand("check", "check solutions against the system");
    qcheck->add_option("file", o.input, "ideal JSON or system JSON")->required()->check(CLI::ExistingFile);
    qcheck->add_option("--multisum", o.multisum_system, "prover system file whose H(beta) vector is checked too")
        ->check(CLI::ExistingFile);
    add_orders(qcheck, o);
    qcheck->callback([&] { action = cmd_qdiff_check; });

    auto* multisum = app.add_subcommand("multisum", "the q-multi-summation H(beta)");
    multisum->require_subcommand(1);
    auto* meval = multisum->add_subcommand("eval", "truncated series of H(beta)");
    auto* mrec = multisum->add_subcommand("rec", "one recurrence step, checked numerically");
    auto* mshift = multisum->add_subcommand("shift", "beta after x -> xq^S");
    auto* mcheck = multisum->add_subcommand("check", "positivity and additional conditions");
    for (auto* cmd : {meval, mrec, mshift, mcheck}) {
        cmd->add_option("profile", o.input, "profile JSON (or system JSON)")->required()->check(CLI::ExistingFile);
        cmd->add_option("--beta", o.beta, "beta vector, e.g. 1,3")->required();
    }
    add_orders(meval, o);
    add_orders(mrec, o);
    mrec->add_option("--coord", o.coordinate, "1-based coordinate")->required();
    mshift->add_option("--S", o.S, "shift")->required()->check(CLI::PositiveNumber);
    mcheck->add_option("--S", o.S, "shift for the additional conditions")->check(CLI::PositiveNumber);
    meval->callback([&] { action = cmd_multisum_eval; });
    mrec->callback([&] { action = cmd_multisum_rec; });
    mshift->callback([&] { action = cmd_multisum_shift; });
    mcheck->callback([&] { action = cmd_multisum_check; });

    auto* prove = app.add_subcommand("prove", "search certificates and extract U, V");
    prove->add_option("file", o.input, "system JSON")->required()->check(CLI::ExistingFile);
    prove->add_option("--out", o.out, "write <out>.dot and <out>.cert.json");
    prove->add_option("--format", o.format, "also print the certificates as dot or json");
    prove->add_option("--max-expansions", o.max_expansions, "expansion budget per root")
        ->check(CLI::NonNegativeNumber);
    add_orders(prove, o);
    prove->callback([&] { action = cmd_prove; });

    auto* verify = app.add_subcommand("verify", "check F(x) = U.V.F(xq^S) on truncated series");
    verify->add_option("file", o.input, "system JSON (U and V optional)")->required()->check(CLI::ExistingFile);
    verify->add_option("--max-expansions", o.max_expansions, "expansion budget when U, V must be derived")
        ->check(CLI::NonNegativeNumber);
    add_orders(verify, o);
    verify->callback([&] { action = cmd_verify; });

    auto* exporter = app.add_subcommand("export", "render a certificate file");
    exporter->add_option("file", o.input, "certificate JSON (tree or system)")->required()->check(CLI::ExistingFile);
    exporter->add_option("--format", o.format, "dot | json")->required();
    exporter->add_option("--out", o.out, "output path (default: stdout)");
    exporter->callback([&] { action = cmd_export; });

    std::vector<const char*> argv{"lpi"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return action(o, out);
    } catch (const SearchExhausted& e) {
        err << "search exhausted: " << e.what() << "\n";
        return exit_exhausted;
    } catch (const NotFactorizable& e) {
        err << e.what() << "\n";
        return exit_false;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace lpi
