#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ddc/configuration.hpp"
#include "ddc/limits.hpp"
#include "ddc/rational.hpp"

namespace ddc {

/// Key identifier: the shift u of the translate u + D.
using KeyId = Vec2;

/// Finite W x H sensor grid keyed by translates of a configuration. Node (x, y)
/// holds k_u exactly when (x, y) - u is a dot. Nodes use the configuration's native
/// coordinates, so a hexagonal configuration simulates an axial hexagonal grid.
class KeyGrid {
public:
    KeyGrid(Configuration config, std::int64_t width, std::int64_t height,
            std::optional<Rational> range = std::nullopt, Metric metric = Metric::Euclidean,
            const Limits& limits = Limits::defaults());

    const Configuration& config() const { return config_; }
    std::int64_t width() const { return width_; }
    std::int64_t height() const { return height_; }
    const std::optional<Rational>& range() const { return range_; }
    Metric metric() const { return metric_; }
    bool is_ddc() const { return is_ddc_; }

    bool in_bounds(Vec2 node) const;
    std::size_t key_count() const { return holders_.size(); }

    /// Sorted keys held by a node. Throws std::out_of_range off-grid.
    std::vector<KeyId> keys_of(Vec2 node) const;
    /// Sorted nodes inside the grid holding k_u; empty for an unknown key.
    const std::vector<Vec2>& holders(KeyId key) const;
    const std::unordered_map<KeyId, std::vector<Vec2>, Vec2Hash>& key_table() const { return holders_; }

    /// Secure-link neighbours: share a key and, when a range is set, lie within it.
    std::vector<Vec2> neighbours(Vec2 node) const;

private:
    Configuration config_;
    std::int64_t width_;
    std::int64_t height_;
    std::optional<Rational> range_;
    Metric metric_;
    bool is_ddc_;
    std::unordered_map<KeyId, std::vector<Vec2>, Vec2Hash> holders_;
};

KeyGrid build_key_grid(const Configuration& config, std::int64_t width, std::int64_t height,
                       std::optional<Rational> range = std::nullopt, Metric metric = Metric::Euclidean,
                       const Limits& limits = Limits::defaults());

std::vector<KeyId> shared_keys(const KeyGrid& grid, Vec2 n1, Vec2 n2);

struct PathReport {
    Vec2 source;
    int k = 0;
    /// hop_nodes[l - 1] = nodes first reached after exactly l hops, sorted.
    std::vector<std::vector<Vec2>> hop_nodes;
    std::vector<std::size_t> hop_counts;
    std::size_t coverage = 0;
    bool boundary_safe = false;
};

PathReport k_hop_reachable(const KeyGrid& grid, Vec2 source, int k);

/// Whether boundary truncation cannot affect a k-hop BFS from this node.
bool is_boundary_safe(const KeyGrid& grid, Vec2 source, int k);

}  // namespace ddc
