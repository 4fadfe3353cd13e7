#include "ddc/configuration.hpp"

#include <algorithm>
#include <unordered_map>

namespace ddc {

DuplicateDotError::DuplicateDotError(std::size_t index_, std::size_t first_index_)
    : std::invalid_argument("dots[" + std::to_string(index_) + "] duplicates dots[" +
                            std::to_string(first_index_) + "]"),
      index(index_),
      first_index(first_index_) {}

Configuration::Configuration(GridKind kind, std::span<const Vec2> dots) : kind_(kind) {
    if (dots.empty()) throw std::invalid_argument("a configuration needs at least one dot");
    std::unordered_map<Vec2, std::size_t, Vec2Hash> seen;
    seen.reserve(dots.size());
    for (std::size_t i = 0; i < dots.size(); ++i) {
        auto [it, inserted] = seen.emplace(dots[i], i);
        if (!inserted) throw DuplicateDotError(i, it->second);
    }
    dots_.assign(dots.begin(), dots.end());
    std::ranges::sort(dots_, [](Vec2 p, Vec2 q) { return std::pair(p.y, p.x) < std::pair(q.y, q.x); });
}

namespace {
std::vector<Vec2> coords_of(std::span<const GridPoint> points) {
    if (points.empty()) throw std::invalid_argument("a configuration needs at least one dot");
    std::vector<Vec2> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.kind != points.front().kind) throw std::invalid_argument("configuration mixes grid kinds");
        out.push_back(p.coords());
    }
    return out;
}
}  // namespace

Configuration::Configuration(std::span<const GridPoint> points)
    : Configuration(points.empty() ? GridKind::Square : points.front().kind, coords_of(points)) {}

Configuration Configuration::translated(Vec2 offset) const {
    std::vector<Vec2> moved;
    moved.reserve(dots_.size());
    for (auto v : dots_) moved.push_back(v + offset);
    return {kind_, moved};
}

bool Configuration::contains(Vec2 v) const {
    return std::ranges::find(dots_, v) != dots_.end();
}

bool DifferenceSet::contains(Vec2 v) const {
    return std::ranges::binary_search(vectors, v);
}

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::Euclidean: return "euclidean";
        case Metric::Manhattan: return "manhattan";
        case Metric::Hexagonal: return "hexagonal";
    }
    return "euclidean";
}

Metric parse_metric(std::string_view text) {
    if (text == "euclidean") return Metric::Euclidean;
    if (text == "manhattan") return Metric::Manhattan;
    if (text == "hexagonal") return Metric::Hexagonal;
    throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

bool metric_compatible(Metric metric, GridKind kind) {
    switch (metric) {
        case Metric::Euclidean: return true;
        case Metric::Manhattan: return kind == GridKind::Square;
        case Metric::Hexagonal: return kind == GridKind::Hexagonal;
    }
    return false;
}

std::int64_t metric_measure(Vec2 v, GridKind kind, Metric metric) {
    if (!metric_compatible(metric, kind))
        throw std::invalid_argument(std::string(to_string(metric)) + " metric is not defined on the " +
                                    std::string(to_string(kind)) + " grid");
    switch (metric) {
        case Metric::Euclidean: return squared_norm(v, kind);
        case Metric::Manhattan: return manhattan_norm(v);
        case Metric::Hexagonal: return hexagonal_norm(v);
    }
    return 0;
}

bool within_range(Vec2 v, GridKind kind, Metric metric, const Rational& r) {
    const auto measure = metric_measure(v, kind, metric);
    return metric == Metric::Euclidean ? r.admits_squared(measure) : r.admits(measure);
}

DifferenceSet difference_vectors(const Configuration& config) {
    DifferenceSet out;
    out.source_m = config.size();
    const auto& dots = config.dots();
    out.vectors.reserve(dots.size() * (dots.size() - 1));
    for (std::size_t i = 0; i < dots.size(); ++i)
        for (std::size_t j = 0; j < dots.size(); ++j)
            if (i != j) out.vectors.push_back(dots[i] - dots[j]);
    std::ranges::sort(out.vectors);
    const auto [first, last] = std::ranges::unique(out.vectors);
    out.vectors.erase(first, last);
    return out;
}

DistinctnessVerdict is_distinct_difference(const Configuration& config) {
    const auto& dots = config.dots();
    std::unordered_map<Vec2, std::pair<std::size_t, std::size_t>, Vec2Hash> seen;
    seen.reserve(dots.size() * dots.size());
    for (std::size_t i = 0; i < dots.size(); ++i) {
        for (std::size_t j = 0; j < dots.size(); ++j) {
            if (i == j) continue;
            auto [it, inserted] = seen.emplace(dots[i] - dots[j], std::pair(i, j));
            if (!inserted) {
                return {false, DifferenceWitness{i, j, it->second.first, it->second.second}};
            }
        }
    }
    return {true, std::nullopt};
}

bool check_range(const Configuration& config, const Rational& r, Metric metric) {
    if (!metric_compatible(metric, config.kind()))
        throw std::invalid_argument(std::string(to_string(metric)) + " metric is not defined on the " +
                                    std::string(to_string(config.kind())) + " grid");
    const auto& dots = config.dots();
    for (std::size_t i = 0; i < dots.size(); ++i)
        for (std::size_t j = i + 1; j < dots.size(); ++j)
            if (!within_range(dots[j] - dots[i], config.kind(), metric, r)) return false;
    return true;
}

std::int64_t squared_diameter(const Configuration& config) {
    std::int64_t best = 0;
    const auto& dots = config.dots();
    for (std::size_t i = 0; i < dots.size(); ++i)
        for (std::size_t j = i + 1; j < dots.size(); ++j)
            best = std::max(best, squared_norm(dots[j] - dots[i], config.kind()));
    return best;
}

Configuration map_configuration(const Configuration& config) {
    const auto target = config.kind() == GridKind::Square ? GridKind::Hexagonal : GridKind::Square;
    return {target, config.dots()};
}

}  // namespace ddc
