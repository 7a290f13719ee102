#ifndef LPI_IO_HPP
#define LPI_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lpi/ideal.hpp"
#include "lpi/multisum.hpp"
#include "lpi/qdiff.hpp"

namespace lpi {

/// A fixture file is malformed. The message names the offending field, e.g.
/// "rr.json: linking[3][1]: index 4 outside 1..3".
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON document; parse errors become FormatError.
[[nodiscard]] nlohmann::json load_json(const std::filesystem::path& path);

/// {"S": int, "pi": ["empty", "1", "2+1", ...], "linking": [[1, 2, 3], ...]},
/// linking indices 1-based. The result is validated.
[[nodiscard]] SpanOneIdeal ideal_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json ideal_to_json(const SpanOneIdeal& ideal);

/// {"alpha": [[...]], "gamma": [...], "A": [...]}, validated.
[[nodiscard]] MultisumProfile profile_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json profile_to_json(const MultisumProfile& p);

/// {"A": [[...]], "weights": [[m, n], ...], "S": int}, validated.
[[nodiscard]] QDiffSystem qdiff_system_from_json(const nlohmann::json& j);

/// "1,3" or "[1,3]" or "(1,3)".
[[nodiscard]] BetaVector parse_beta(std::string_view text);

namespace json_fields {

/// Accessors that throw FormatError naming `where`.
const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& where);
int integer(const nlohmann::json& j, const std::string& where);
std::vector<int> integer_array(const nlohmann::json& j, const std::string& where);
std::vector<std::vector<int>> integer_matrix(const nlohmann::json& j, const std::string& where);

} // namespace json_fields

} // namespace lpi

#endif
