#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddc/grid.hpp"
#include "ddc/rational.hpp"

namespace ddc {

/// Thrown when a dot list contains the same point twice. `index` refers to the
/// input order, `first_index` to the earlier occurrence.
class DuplicateDotError : public std::invalid_argument {
public:
    DuplicateDotError(std::size_t index, std::size_t first_index);
    std::size_t index;
    std::size_t first_index;
};

/// m >= 1 distinct dots on one grid, stored sorted by (b, a).
class Configuration {
public:
    Configuration(GridKind kind, std::span<const Vec2> dots);
    Configuration(GridKind kind, std::initializer_list<Vec2> dots)
        : Configuration(kind, std::span<const Vec2>(dots.begin(), dots.size())) {}
    explicit Configuration(std::span<const GridPoint> points);

    static Configuration square(std::initializer_list<Vec2> dots) { return {GridKind::Square, dots}; }
    static Configuration hexagonal(std::initializer_list<Vec2> dots) { return {GridKind::Hexagonal, dots}; }

    GridKind kind() const { return kind_; }
    std::size_t size() const { return dots_.size(); }
    const std::vector<Vec2>& dots() const { return dots_; }
    Vec2 operator[](std::size_t i) const { return dots_[i]; }
    GridPoint point(std::size_t i) const { return {dots_[i].x, dots_[i].y, kind_}; }

    Configuration translated(Vec2 offset) const;
    bool contains(Vec2 v) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    GridKind kind_;
    std::vector<Vec2> dots_;
};

/// Sorted, duplicate-free set of signed differences v_i - v_j (i != j).
struct DifferenceSet {
    std::vector<Vec2> vectors;
    std::size_t source_m = 0;

    std::size_t size() const { return vectors.size(); }
    bool contains(Vec2 v) const;
};

enum class Metric { Euclidean, Manhattan, Hexagonal };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);
bool metric_compatible(Metric metric, GridKind kind);

/// Distance of a native difference vector in the given metric, as the value
/// compared against r: squared for Euclidean, plain otherwise.
std::int64_t metric_measure(Vec2 v, GridKind kind, Metric metric);
bool within_range(Vec2 v, GridKind kind, Metric metric, const Rational& r);

DifferenceSet difference_vectors(const Configuration& config);

/// v_i - v_j = v_k - v_l with {i,j} != {k,l}, indices into the normalized order.
struct DifferenceWitness {
    std::size_t i, j, k, l;
};

struct DistinctnessVerdict {
    bool distinct = true;
    std::optional<DifferenceWitness> witness;
    explicit operator bool() const { return distinct; }
};

DistinctnessVerdict is_distinct_difference(const Configuration& config);

bool check_range(const Configuration& config, const Rational& r, Metric metric);

/// Largest squared Euclidean distance between two dots (0 for m = 1).
std::int64_t squared_diameter(const Configuration& config);

/// xi applied dot-wise; flips the grid kind.
Configuration map_configuration(const Configuration& config);

}  // namespace ddc
