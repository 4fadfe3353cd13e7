#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ddc {

enum class GridKind { Square, Hexagonal };

std::string_view to_string(GridKind kind);
GridKind parse_grid_kind(std::string_view text);

/// Integer vector in native lattice coordinates: (x, y) on the square grid,
/// axial (lambda, mu) on the hexagonal grid. Ordered lexicographically by (x, y).
struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(std::int64_t s, Vec2 a) { return {s * a.x, s * a.y}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
    friend constexpr auto operator<=>(Vec2, Vec2) = default;

    constexpr bool is_zero() const { return x == 0 && y == 0; }
};

struct Vec2Hash {
    std::size_t operator()(Vec2 v) const noexcept {
        auto h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(v.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Lattice point tagged with its grid. For hexagonal points (a, b) are the axial
/// integers whose planar position is a*(1,0) + b*(-1/2, sqrt(3)/2).
struct GridPoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    GridKind kind = GridKind::Square;

    static constexpr GridPoint square(std::int64_t x, std::int64_t y) { return {x, y, GridKind::Square}; }
    static constexpr GridPoint hex(std::int64_t l, std::int64_t m) { return {l, m, GridKind::Hexagonal}; }

    constexpr Vec2 coords() const { return {a, b}; }
    friend constexpr bool operator==(const GridPoint&, const GridPoint&) = default;
};

GridPoint xi_map(const GridPoint& p);
GridPoint xi_inverse(const GridPoint& p);

/// Squared Euclidean length of a native-coordinate vector on the given grid.
constexpr std::int64_t squared_norm(Vec2 v, GridKind kind) {
    return kind == GridKind::Square ? v.x * v.x + v.y * v.y
                                    : v.x * v.x - v.x * v.y + v.y * v.y;
}

constexpr std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

constexpr std::int64_t manhattan_norm(Vec2 v) { return abs64(v.x) + abs64(v.y); }

/// Shortest-path length in the axial 6-neighbour graph {±(1,0), ±(0,1), ±(1,1)}.
constexpr std::int64_t hexagonal_norm(Vec2 v) {
    const auto ax = abs64(v.x);
    const auto ay = abs64(v.y);
    if ((v.x >= 0 && v.y >= 0) || (v.x <= 0 && v.y <= 0)) return ax > ay ? ax : ay;
    return ax + ay;
}

std::int64_t squared_euclidean(const GridPoint& p, const GridPoint& q);
std::int64_t manhattan_distance(const GridPoint& p, const GridPoint& q);
std::int64_t hexagonal_distance(const GridPoint& p, const GridPoint& q);

std::string to_string(const GridPoint& p);

}  // namespace ddc
