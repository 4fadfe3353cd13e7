#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "ddc/coverage.hpp"
#include "ddc/key_grid.hpp"
#include "ddc/welch.hpp"
#include "oracles.hpp"

using namespace ddc;

namespace {

const Configuration kIntro = Configuration::square({{0, 0}, {1, 2}, {2, 1}});

std::vector<Vec2> all_nodes(const KeyGrid& g) {
    std::vector<Vec2> out;
    for (std::int64_t y = 0; y < g.height(); ++y)
        for (std::int64_t x = 0; x < g.width(); ++x) out.push_back({x, y});
    return out;
}

}  // namespace

TEST_CASE("key assignment") {
    const KeyGrid g(kIntro, 8, 8);
    CHECK(g.is_ddc());
    for (auto n : all_nodes(g)) {
        const auto keys = g.keys_of(n);
        CHECK(keys.size() == 3);
        for (auto u : keys) CHECK(kIntro.contains(n - u));
    }
    std::size_t full = 0;
    for (const auto& [u, holders] : g.key_table()) {
        bool inside = true;
        for (auto v : kIntro.dots()) inside = inside && g.in_bounds(u + v);
        if (inside) {
            CHECK(holders.size() == 3);
            ++full;
        }
        CHECK(!holders.empty());
        CHECK(holders.size() <= 3);
        for (auto h : holders) CHECK(kIntro.contains(h - u));
    }
    CHECK(full == 6 * 6);
    CHECK(g.holders({100, 100}).empty());

    const KeyGrid tiny(Configuration::square({{0, 0}}), 1, 1);
    CHECK(tiny.key_count() == 1);
    CHECK(tiny.keys_of({0, 0}).size() == 1);

    CHECK_THROWS_AS(g.keys_of({8, 0}), std::out_of_range);
    CHECK_THROWS_AS(KeyGrid(kIntro, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(KeyGrid(kIntro, 5, 5, Rational(2), Metric::Hexagonal), std::invalid_argument);
    Limits tight;
    tight.grid_entries = 100;
    CHECK_THROWS_AS(KeyGrid(kIntro, 10, 10, std::nullopt, Metric::Euclidean, tight), ResourceLimitError);
}

TEST_CASE("shared keys") {
    const KeyGrid g(kIntro, 8, 8);
    CHECK(shared_keys(g, {3, 3}, {4, 5}).size() == 1);
    CHECK(shared_keys(g, {3, 3}, {4, 3}).empty());
    CHECK(shared_keys(g, {3, 3}, {3, 3}) == g.keys_of({3, 3}));
    CHECK_THROWS_AS(shared_keys(g, {3, 3}, {-1, 0}), std::out_of_range);

    const auto diffs = difference_vectors(kIntro);
    for (auto a : all_nodes(g))
        for (auto b : all_nodes(g)) {
            if (a == b) continue;
            const auto s = shared_keys(g, a, b);
            CHECK(s.size() <= 1);
            CHECK(s.empty() == !diffs.contains(b - a));
        }
}

TEST_CASE("a configuration with a repeated difference lets nodes share two keys") {
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 20) {
        const auto pts = oracle::random_points(rng, 4, 4, 4);
        if (oracle::distinct_differences(pts)) continue;
        const KeyGrid g(Configuration(GridKind::Square, pts), 9, 9);
        CHECK_FALSE(g.is_ddc());
        bool found = false;
        for (auto a : all_nodes(g))
            for (auto b : all_nodes(g))
                if (a != b && shared_keys(g, a, b).size() >= 2) found = true;
        CHECK(found);
        ++tested;
    }
}

TEST_CASE("path reports in the intro grid") {
    const KeyGrid g(kIntro, 41, 41);
    const auto centre = k_hop_reachable(g, {20, 20}, 2);
    CHECK(centre.coverage == 18);
    CHECK(centre.boundary_safe);
    CHECK(centre.hop_counts == std::vector<std::size_t>{6, 12});

    const auto one = k_hop_reachable(g, {20, 20}, 1);
    CHECK(one.coverage == 6);

    const auto corner = k_hop_reachable(g, {0, 0}, 1);
    CHECK(corner.coverage < 6);
    CHECK_FALSE(corner.boundary_safe);

    CHECK_THROWS_AS(k_hop_reachable(g, {41, 0}, 1), std::out_of_range);
    CHECK_THROWS_AS(k_hop_reachable(g, {1, 1}, 0), std::invalid_argument);
}

TEST_CASE("boundary-safe sources see exactly the k-hop coverage") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        const auto kind = trial % 3 == 2 ? GridKind::Hexagonal : GridKind::Square;
        const Configuration c(kind, oracle::random_ddc(rng, 2 + trial % 4, 5, 5));
        const KeyGrid g(c, 31, 31);
        for (int k = 1; k <= 3; ++k) {
            const auto expected = k_hop_set(c, k);
            for (auto src : {Vec2{15, 15}, Vec2{12, 17}, Vec2{3, 3}, Vec2{0, 30}}) {
                const auto r = k_hop_reachable(g, src, k);
                std::set<Vec2> reached;
                for (const auto& layer : r.hop_nodes)
                    for (auto n : layer) CHECK(reached.insert(n - src).second);
                CHECK(reached.size() == r.coverage);
                CHECK(r.hop_counts.size() == static_cast<std::size_t>(k));
                if (r.boundary_safe) {
                    CHECK(r.coverage == expected.size());
                    CHECK(std::vector<Vec2>(reached.begin(), reached.end()) == expected);
                } else {
                    CHECK(r.coverage <= expected.size());
                }
            }
        }
    }
}

TEST_CASE("a range at least the diameter keeps every one-hop link") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Configuration c(GridKind::Square, oracle::random_ddc(rng, 3 + trial % 3, 6, 6));
        const auto diam = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(squared_diameter(c)))));
        const KeyGrid open(c, 15, 15);
        const KeyGrid ranged(c, 15, 15, Rational(diam));
        const KeyGrid manhattan(c, 15, 15, Rational(2 * diam), Metric::Manhattan);
        const KeyGrid short_range(c, 15, 15, Rational(1), Metric::Euclidean);
        bool pruned = false;
        for (auto n : all_nodes(open)) {
            CHECK(open.neighbours(n) == ranged.neighbours(n));
            CHECK(open.neighbours(n) == manhattan.neighbours(n));
            for (auto nb : short_range.neighbours(n)) CHECK(squared_norm(nb - n, GridKind::Square) <= 1);
            pruned = pruned || short_range.neighbours(n).size() < open.neighbours(n).size();
        }
        CHECK(pruned);
    }
}

TEST_CASE("Welch configuration on a finite grid") {
    const auto w = construct_complete_two_hop(5).config;
    const KeyGrid g(w, 41, 41);
    for (int k = 1; k <= 3; ++k) {
        const auto expected = k_hop_coverage(w, k).coverage;
        const auto r = k_hop_reachable(g, {20, 20}, k);
        CHECK(r.boundary_safe == (k <= 2));
        if (r.boundary_safe) CHECK(r.coverage == expected);
    }
    // Every node keeps m keys even where translates leave the grid.
    for (auto n : all_nodes(g)) CHECK(g.keys_of(n).size() == w.size());
}
