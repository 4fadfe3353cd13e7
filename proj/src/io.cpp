#include "ddc/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace ddc {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::int64_t coordinate(const Json& value, std::size_t index, int axis) {
    const auto field = "dots[" + std::to_string(index) + "][" + std::to_string(axis) + "]";
    if (!value.is_number_integer()) throw ConfigFormatError(field + ": expected an integer");
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ConfigFormatError(field + ": integer out of range");
    return value.get<std::int64_t>();
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ConfigFormatError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                                ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) throw ConfigFormatError("top level: expected an object");
    if (!doc.contains("grid")) throw ConfigFormatError("grid: missing field");
    if (!doc["grid"].is_string()) throw ConfigFormatError("grid: expected \"square\" or \"hexagonal\"");
    GridKind kind;
    try {
        kind = parse_grid_kind(doc["grid"].get<std::string>());
    } catch (const std::invalid_argument&) {
        throw ConfigFormatError("grid: expected \"square\" or \"hexagonal\", got \"" + doc["grid"].get<std::string>() + "\"");
    }
    if (!doc.contains("dots")) throw ConfigFormatError("dots: missing field");
    const auto& dots = doc["dots"];
    if (!dots.is_array()) throw ConfigFormatError("dots: expected an array of [a, b] pairs");
    if (dots.empty()) throw ConfigFormatError("dots: at least one dot is required");

    std::vector<Vec2> points;
    points.reserve(dots.size());
    for (std::size_t i = 0; i < dots.size(); ++i) {
        const auto& d = dots[i];
        if (!d.is_array() || d.size() != 2)
            throw ConfigFormatError("dots[" + std::to_string(i) + "]: expected an [a, b] pair");
        points.push_back({coordinate(d[0], i, 0), coordinate(d[1], i, 1)});
    }
    try {
        return {kind, points};
    } catch (const DuplicateDotError& e) {
        throw ConfigFormatError(e.what());
    }
}

Configuration load_configuration(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigFormatError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_configuration(buf.str());
    } catch (const ConfigFormatError& e) {
        throw ConfigFormatError(path + ": " + e.what());
    }
}

Json configuration_to_json(const Configuration& config) {
    Json dots = Json::array();
    for (auto v : config.dots()) dots.push_back({v.x, v.y});
    return Json{{"grid", std::string(to_string(config.kind()))}, {"dots", std::move(dots)}};
}

std::string serialize_configuration(const Configuration& config) {
    return configuration_to_json(config).dump(2) + "\n";
}

Json to_json(Vec2 v) { return Json::array({v.x, v.y}); }

Json to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
    return value.str();
}

Json to_json(const CoverageReport& report, bool include_reachable) {
    Json j{{"k", report.k},
           {"coverage", report.coverage},
           {"max_bound", to_json(report.max_bound)},
           {"min_bound", to_json(report.min_bound)},
           {"is_maximal", report.is_maximal},
           {"is_minimal", report.is_minimal}};
    if (include_reachable) {
        Json r = Json::array();
        for (auto v : report.reachable) r.push_back(to_json(v));
        j["reachable"] = std::move(r);
    }
    return j;
}

Json to_json(const MaximalCoverageVerdict& verdict) {
    Json j{{"maximal", verdict.maximal}, {"b_2k", verdict.bh_verdict}};
    j["vanishing_combination_free"] = verdict.tuple_verdict ? Json(*verdict.tuple_verdict) : Json(nullptr);
    j["fallback"] = verdict.fallback;
    if (verdict.collision) j["collision"] = {{"first", verdict.collision->first}, {"second", verdict.collision->second}};
    if (verdict.vanishing_tuple) j["vanishing_tuple"] = *verdict.vanishing_tuple;
    return j;
}

Json to_json(const CompleteCoverageCertificate& certificate) {
    Json entries = Json::array();
    for (const auto& e : certificate.entries) {
        Json row{{"target", to_json(e.target)}, {"first", to_json(e.first)}};
        row["second"] = e.second ? to_json(*e.second) : Json(nullptr);
        entries.push_back(std::move(row));
    }
    return Json{{"half_width", certificate.half_width},
                {"half_height", certificate.half_height},
                {"entries", std::move(entries)}};
}

Json to_json(const PathReport& report, bool include_nodes) {
    Json j{{"source", to_json(report.source)},
           {"k", report.k},
           {"coverage", report.coverage},
           {"hop_counts", report.hop_counts},
           {"boundary_safe", report.boundary_safe}};
    if (include_nodes) {
        Json hops = Json::array();
        for (const auto& layer : report.hop_nodes) {
            Json nodes = Json::array();
            for (auto v : layer) nodes.push_back(to_json(v));
            hops.push_back(std::move(nodes));
        }
        j["hop_nodes"] = std::move(hops);
    }
    return j;
}

RenderWindow bounding_window(const Configuration& config) {
    RenderWindow w{config[0].x, config[0].y, config[0].x, config[0].y};
    for (auto v : config.dots()) {
        w.x0 = std::min(w.x0, v.x);
        w.x1 = std::max(w.x1, v.x);
        w.y0 = std::min(w.y0, v.y);
        w.y1 = std::max(w.y1, v.y);
    }
    return w;
}

std::string render(const Configuration& config, const RenderWindow& window, const Limits& limits) {
    if (window.x1 < window.x0 || window.y1 < window.y0)
        throw std::invalid_argument("render window corners must satisfy x0 <= x1 and y0 <= y1");
    const auto cells = static_cast<unsigned __int128>(window.x1 - window.x0 + 1) *
                       static_cast<unsigned __int128>(window.y1 - window.y0 + 1);
    if (cells > limits.render_cells)
        throw ResourceLimitError("render window has more than " + std::to_string(limits.render_cells) + " cells");

    std::string out;
    for (auto y = window.y1; y >= window.y0; --y) {
        for (auto x = window.x0; x <= window.x1; ++x) {
            if (x != window.x0) out += ' ';
            out += config.contains({x, y}) ? "●" : "·";
        }
        out += '\n';
    }
    if (config.kind() == GridKind::Hexagonal)
        out += "(axial coordinates: column = lambda, row = mu; each row up shifts half a cell left in the plane)\n";
    return out;
}

}  // namespace ddc
