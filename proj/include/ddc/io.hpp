#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ddc/bose_chowla.hpp"
#include "ddc/configuration.hpp"
#include "ddc/coverage.hpp"
#include "ddc/key_grid.hpp"
#include "ddc/welch.hpp"

namespace ddc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

/// Malformed configuration file; the message names the line or field.
class ConfigFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"grid": "square" | "hexagonal", "dots": [[a, b], ...]}
Configuration parse_configuration(std::string_view text);
Configuration load_configuration(const std::string& path);
Json configuration_to_json(const Configuration& config);
std::string serialize_configuration(const Configuration& config);

Json to_json(Vec2 v);
Json to_json(const BigInt& value);
Json to_json(const CoverageReport& report, bool include_reachable = false);
Json to_json(const MaximalCoverageVerdict& verdict);
Json to_json(const CompleteCoverageCertificate& certificate);
Json to_json(const PathReport& report, bool include_nodes = false);

struct RenderWindow {
    std::int64_t x0, y0, x1, y1;  // inclusive corners
};

RenderWindow bounding_window(const Configuration& config);

/// Rows from top (y1) to bottom (y0); '●' dot, '·' empty. Hexagonal
/// configurations get a trailing note about the axial layout.
std::string render(const Configuration& config, const RenderWindow& window,
                   const Limits& limits = Limits::defaults());

}  // namespace ddc
