#include "lpi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lpi {

namespace json_fields {

const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object()) {
        throw FormatError(where + ": expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw FormatError(where + ": missing field \"" + key + "\"");
    }
    return *it;
}

int integer(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_number_integer()) {
        throw FormatError(where + ": expected an integer, found " + j.dump());
    }
    return j.get<int>();
}

std::vector<int> integer_array(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array()) {
        throw FormatError(where + ": expected an array of integers, found " + j.dump());
    }
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(integer(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::vector<int>> integer_matrix(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array()) {
        throw FormatError(where + ": expected an array of integer arrays, found " + j.dump());
    }
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(integer_array(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

} // namespace json_fields

using namespace json_fields;

nlohmann::json load_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError(path.string() + ": cannot open file");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

SpanOneIdeal ideal_from_json(const nlohmann::json& j)
{
    SpanOneIdeal ideal;
    ideal.S = integer(member(j, "S", "ideal"), "ideal.S");
    const auto& pi = member(j, "pi", "ideal");
    if (!pi.is_array()) {
        throw FormatError("ideal.pi: expected an array of partition literals");
    }
    for (std::size_t k = 0; k < pi.size(); ++k) {
        const std::string where = "ideal.pi[" + std::to_string(k) + "]";
        if (!pi[k].is_string()) {
            throw FormatError(where + ": expected a partition literal such as \"2+1\" or \"empty\"");
        }
        try {
            ideal.pi.push_back(Partition::parse(pi[k].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw FormatError(where + ": " + e.what());
        }
    }
    const auto linking = integer_matrix(member(j, "linking", "ideal"), "ideal.linking");
    for (std::size_t k = 0; k < linking.size(); ++k) {
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < linking[k].size(); ++i) {
            const int index = linking[k][i];
            if (index < 1 || static_cast<std::size_t>(index) > ideal.pi.size()) {
                throw FormatError("ideal.linking[" + std::to_string(k) + "][" + std::to_string(i) + "]: index " +
                                  std::to_string(index) + " outside 1.." + std::to_string(ideal.pi.size()));
            }
            set.push_back(static_cast<std::size_t>(index - 1));
        }
        ideal.linking.push_back(std::move(set));
    }
    validate(ideal);
    return ideal;
}

nlohmann::json ideal_to_json(const SpanOneIdeal& ideal)
{
    nlohmann::json pi = nlohmann::json::array();
    for (const auto& p : ideal.pi) {
        pi.push_back(p.to_string());
    }
    nlohmann::json linking = nlohmann::json::array();
    for (const auto& set : ideal.linking) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t i : set) {
            row.push_back(i + 1);
        }
        linking.push_back(row);
    }
    return {{"S", ideal.S}, {"pi", pi}, {"linking", linking}};
}

MultisumProfile profile_from_json(const nlohmann::json& j)
{
    MultisumProfile p{integer_matrix(member(j, "alpha", "profile"), "profile.alpha"),
                      integer_array(member(j, "gamma", "profile"), "profile.gamma"),
                      integer_array(member(j, "A", "profile"), "profile.A")};
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("profile: ") + e.what());
    }
    return p;
}

nlohmann::json profile_to_json(const MultisumProfile& p)
{
    return {{"alpha", p.alpha}, {"gamma", p.gamma}, {"A", p.A}};
}

QDiffSystem qdiff_system_from_json(const nlohmann::json& j)
{
    QDiffSystem sys;
    sys.A = integer_matrix(member(j, "A", "system"), "system.A");
    sys.S = integer(member(j, "S", "system"), "system.S");
    const auto weights = integer_matrix(member(j, "weights", "system"), "system.weights");
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k].size() != 2) {
            throw FormatError("system.weights[" + std::to_string(k) + "]: expected [x-degree, q-degree]");
        }
        sys.weights.push_back({weights[k][0], weights[k][1]});
    }
    try {
        validate(sys);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return sys;
}

BetaVector parse_beta(std::string_view text)
{
    std::string cleaned;
    for (char c : text) {
        if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') {
            cleaned += c;
        }
    }
    std::vector<int> values;
    std::istringstream in(cleaned);
    std::string token;
    while (std::getline(in, token, ',')) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw FormatError("malformed beta vector \"" + std::string(text) + "\"");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw FormatError("empty beta vector");
    }
    return BetaVector(std::move(values));
}

} // namespace lpi
