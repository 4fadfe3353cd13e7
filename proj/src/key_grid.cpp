#include "ddc/key_grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ddc {

namespace {
const std::vector<Vec2> kNoHolders;
}

KeyGrid::KeyGrid(Configuration config, std::int64_t width, std::int64_t height, std::optional<Rational> range,
                 Metric metric, const Limits& limits)
    : config_(std::move(config)), width_(width), height_(height), range_(range), metric_(metric) {
    if (width_ < 1 || height_ < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (!metric_compatible(metric_, config_.kind()))
        throw std::invalid_argument(std::string(to_string(metric_)) + " metric is not defined on the " +
                                    std::string(to_string(config_.kind())) + " grid");
    const auto entries = static_cast<unsigned __int128>(width_) * height_ * config_.size();
    if (entries > limits.grid_entries) throw ResourceLimitError("key grid exceeds the grid_entries cap");
    is_ddc_ = is_distinct_difference(config_).distinct;

    holders_.reserve(static_cast<std::size_t>(width_ * height_) + config_.size());
    for (std::int64_t y = 0; y < height_; ++y)
        for (std::int64_t x = 0; x < width_; ++x)
            for (auto v : config_.dots()) holders_[Vec2{x, y} - v].push_back({x, y});
    for (auto& [key, nodes] : holders_) std::ranges::sort(nodes);
}

bool KeyGrid::in_bounds(Vec2 node) const {
    return node.x >= 0 && node.y >= 0 && node.x < width_ && node.y < height_;
}

std::vector<KeyId> KeyGrid::keys_of(Vec2 node) const {
    if (!in_bounds(node)) throw std::out_of_range("node (" + std::to_string(node.x) + "," + std::to_string(node.y) + ") is outside the grid");
    std::vector<KeyId> keys;
    keys.reserve(config_.size());
    for (auto v : config_.dots()) keys.push_back(node - v);
    std::ranges::sort(keys);
    return keys;
}

const std::vector<Vec2>& KeyGrid::holders(KeyId key) const {
    const auto it = holders_.find(key);
    return it == holders_.end() ? kNoHolders : it->second;
}

std::vector<Vec2> KeyGrid::neighbours(Vec2 node) const {
    std::vector<Vec2> out;
    for (auto key : keys_of(node)) {
        for (auto other : holders(key)) {
            if (other == node) continue;
            if (range_ && !within_range(other - node, config_.kind(), metric_, *range_)) continue;
            out.push_back(other);
        }
    }
    std::ranges::sort(out);
    const auto [first, last] = std::ranges::unique(out);
    out.erase(first, last);
    return out;
}

KeyGrid build_key_grid(const Configuration& config, std::int64_t width, std::int64_t height,
                       std::optional<Rational> range, Metric metric, const Limits& limits) {
    return {config, width, height, range, metric, limits};
}

std::vector<KeyId> shared_keys(const KeyGrid& grid, Vec2 n1, Vec2 n2) {
    const auto a = grid.keys_of(n1);
    const auto b = grid.keys_of(n2);
    std::vector<KeyId> out;
    std::ranges::set_intersection(a, b, std::back_inserter(out));
    return out;
}

bool is_boundary_safe(const KeyGrid& grid, Vec2 source, int k) {
    const auto margin = std::min({source.x, source.y, grid.width() - 1 - source.x, grid.height() - 1 - source.y});
    if (margin < 0) return false;
    const auto& config = grid.config();
    if (config.kind() == GridKind::Square) {
        const auto sq = squared_diameter(config);
        return static_cast<__int128>(margin) * margin >= static_cast<__int128>(k) * k * sq;
    }
    std::int64_t extent = 0;
    for (auto d : difference_vectors(config).vectors) extent = std::max({extent, abs64(d.x), abs64(d.y)});
    return margin >= static_cast<std::int64_t>(k) * extent;
}

PathReport k_hop_reachable(const KeyGrid& grid, Vec2 source, int k) {
    if (k < 1) throw std::invalid_argument("hop count k must be positive");
    if (!grid.in_bounds(source)) throw std::out_of_range("source node is outside the grid");
    PathReport report;
    report.source = source;
    report.k = k;
    report.boundary_safe = is_boundary_safe(grid, source, k);

    std::unordered_set<Vec2, Vec2Hash> visited{source};
    std::vector<Vec2> frontier{source};
    for (int hop = 1; hop <= k; ++hop) {
        std::vector<Vec2> next;
        for (auto node : frontier)
            for (auto nb : grid.neighbours(node))
                if (visited.insert(nb).second) next.push_back(nb);
        std::ranges::sort(next);
        report.hop_counts.push_back(next.size());
        report.coverage += next.size();
        report.hop_nodes.push_back(next);
        frontier = std::move(next);
    }
    return report;
}

}  // namespace ddc
