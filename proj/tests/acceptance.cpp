// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ddc/bose_chowla.hpp"
#include "ddc/coverage.hpp"
#include "ddc/key_grid.hpp"
#include "ddc/number_theory.hpp"
#include "ddc/welch.hpp"
#include "oracles.hpp"

using namespace ddc;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) detail << "first failure: " << what;
        ok = ok && condition;
    }
};

const Configuration kIntro = Configuration::square({{0, 0}, {1, 2}, {2, 1}});

std::vector<Vec2> as_vector(const std::set<Vec2>& s) { return {s.begin(), s.end()}; }

std::vector<Vec2> on_x_axis(const std::vector<std::uint64_t>& xs) {
    std::vector<Vec2> out;
    for (auto x : xs) out.push_back({static_cast<std::int64_t>(x), 0});
    return out;
}

std::vector<std::uint64_t> primitive_roots(std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) out.push_back(g);
    return out;
}

void intro_example(Check& c) {
    c.expect(is_distinct_difference(kIntro).distinct, "intro configuration is a DDC");
    c.expect(difference_vectors(kIntro).size() == 6, "six difference vectors");
    c.expect(k_hop_coverage(kIntro, 1).coverage == 6, "C_1 = 6");
    const auto two = k_hop_coverage(kIntro, 2);
    c.expect(two.coverage == 18, "C_2 = 18");
    c.expect(two.coverage == 3 * 2 * (9 - 3 + 6) / 4, "C_2 equals the closed-form maximum");
    c.expect(two.reachable == as_vector(oracle::coverage_by_walks(kIntro.dots(), 2)), "C_2 set matches walk oracle");
    c.expect(is_maximal_coverage(kIntro, 2).maximal, "is_maximal(k = 2)");
    c.detail << "C_1 = 6, C_2 = 18, maximal";
}

void h_machinery(Check& c) {
    for (int m = 2; m <= 12; ++m)
        c.expect(h_set_size(m, 2) == oracle::h2_closed_form(m), "|H_2| closed form at m = " + std::to_string(m));
    int pairs = 0;
    for (int m = 1; m <= 6; ++m)
        for (int k = 0; k <= 4; ++k) {
            const auto listed = enumerate_h(m, k);
            c.expect(h_set_size(m, k) == listed.size(), "|H_k| vs enumeration");
            c.expect(listed.size() == oracle::h_tuples(m, k).size(), "enumeration vs box filter");
            ++pairs;
        }
    c.detail << "closed form m in [2,12]; " << pairs << " (m, k) enumerations";
}

void minimal_coverage(Check& c) {
    const auto ruler = Configuration::square({{0, 0}, {1, 0}, {3, 0}});
    for (int k = 1; k <= 5; ++k)
        c.expect(k_hop_coverage(ruler, k).coverage == 6u * k, "ruler C_k = 6k at k = " + std::to_string(k));

    std::vector<Vec2> box;
    for (std::int64_t y = 0; y < 6; ++y)
        for (std::int64_t x = 0; x < 6; ++x) box.push_back({x, y});
    std::size_t checked = 0, minimal = 0;
    std::vector<Vec2> pick;
    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t m) {
        if (pick.size() == m) {
            if (!oracle::distinct_differences(pick)) return;
            const Configuration cfg(GridKind::Square, pick);
            const bool is_min = k_hop_coverage(cfg, 2).coverage == 2 * m * (m - 1);
            c.expect(is_min == is_perfect_golomb_equivalent(cfg), "minimal coverage <=> perfect Golomb equivalent");
            ++checked;
            minimal += is_min;
            return;
        }
        for (auto i = start; i < box.size(); ++i) {
            pick.push_back(box[i]);
            visit(i + 1, m);
            pick.pop_back();
        }
    };
    for (std::size_t m = 2; m <= 4; ++m) visit(0, m);
    c.detail << checked << " DDCs with m <= 4 in a 6x6 box, " << minimal << " minimal";
}

void bose_chowla(Check& c) {
    int sets = 0;
    for (std::uint64_t q : {2, 3, 4, 5, 7})
        for (unsigned h : {2u, 3u, 4u}) {
            const auto s = bose_chowla_set(q, h);
            const auto label = "q = " + std::to_string(q) + ", h = " + std::to_string(h);
            c.expect(s.residues.size() == q, label + " has q elements");
            c.expect(is_b_h_sequence(on_x_axis(s.residues), static_cast<int>(h),
                                     AmbientGroup::z_mod(static_cast<std::int64_t>(s.modulus_n)))
                         .is_bh,
                     label + " is B_h");
            ++sets;
        }
    c.detail << sets << " sets verified";
}

void construction_one(Check& c) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> d(-10'000, 10'000);
    const auto three = crt_periodic_array(3, 2, 5, 16);
    for (int t = 0; t < 5; ++t) {
        const auto w = three.window({d(rng), d(rng)});
        c.expect(w.size() == 3 && is_distinct_difference(w).distinct, "q = 3 window is a DD(3)");
        c.expect(k_hop_coverage(w, 2).coverage == 18, "q = 3 window C_2 = 18");
        c.expect(k_hop_set(w, 2) == as_vector(oracle::coverage_by_walks(w.dots(), 2)), "q = 3 walk oracle");
    }
    const auto five = crt_periodic_array(5, 2, 13, 48).window({d(rng), d(rng)});
    c.expect(five.size() == 5 && is_distinct_difference(five).distinct, "q = 5 window is a DD(5)");
    const auto cov = k_hop_coverage(five, 2).coverage;
    c.expect(cov == 130, "q = 5 window C_2 = 130");
    c.expect(max_coverage_bound(5, 2) == 130, "max bound (5, 2) = 130");
    c.expect(enumerate_h(5, 1).size() + enumerate_h(5, 2).size() == 130, "bound vs enumerate_h");
    c.expect(k_hop_set(five, 2) == as_vector(oracle::coverage_by_walks(five.dots(), 2)), "q = 5 walk oracle");
    c.detail << "5 windows of (5,16) with C_2 = 18; (13,48) window with C_2 = " << cov;
}

void maximal_in_disc(Check& c) {
    for (std::int64_t r : {4, 8, 16}) {
        const auto m = construct_dd_m_r_maximal(2, r);
        const auto label = "r = " + std::to_string(r);
        c.expect(squared_diameter(m.config) <= r * r, label + " diameter <= r");
        c.expect(is_distinct_difference(m.config).distinct, label + " is a DDC");
        c.expect(is_maximal_coverage(m.config, 2).maximal, label + " has maximal coverage");
        c.detail << "r=" << r << ": q=" << m.q << " (a,b)=(" << m.a << "," << m.b << ") m=" << m.config.size() << "; ";
    }
}

void welch_complete(Check& c) {
    int configs = 0;
    for (std::uint64_t p : {5, 7, 11, 13}) {
        const auto roots = primitive_roots(p);
        c.expect(roots.size() >= 2, "two primitive roots");
        for (auto g : roots) {
            const auto b = construct_complete_two_hop(p, g);
            const auto label = "p = " + std::to_string(p) + ", alpha = " + std::to_string(g);
            c.expect(b.config.size() == p + 2 && is_distinct_difference(b.config).distinct, label + " is a DD(p+2)");
            const auto hw = static_cast<std::int64_t>(p) - 1, hh = static_cast<std::int64_t>(p) - 2;
            c.expect(verify_complete_two_hop(b.config, hw, hh).complete, label + " complete two-hop coverage");
            const auto reach = oracle::two_hop_reach(b.config.dots());
            for (std::int64_t dx = -hw; dx <= hw; ++dx)
                for (std::int64_t dy = -hh; dy <= hh; ++dy) c.expect(reach.contains({dx, dy}), label + " oracle reach");
            ++configs;
        }
    }
    c.detail << configs << " (p, alpha) pairs";
}

void simulation_equivalence(Check& c) {
    const Configuration welch = construct_complete_two_hop(5).config;
    std::int64_t ext_x = 0, ext_y = 0;
    for (auto d : difference_vectors(welch).vectors) ext_x = std::max(ext_x, abs64(d.x)), ext_y = std::max(ext_y, abs64(d.y));
    struct Item {
        const char* name;
        const Configuration* config;
    };
    for (auto [name, config] : {Item{"intro", &kIntro}, Item{"welch5", &welch}}) {
        const KeyGrid grid(*config, 41, 41);
        std::int64_t ex = 0, ey = 0;
        for (auto d : difference_vectors(*config).vectors) ex = std::max(ex, abs64(d.x)), ey = std::max(ey, abs64(d.y));
        for (int k = 1; k <= 3; ++k) {
            const auto expected = k_hop_coverage(*config, k).coverage;
            std::size_t safe = 0, contained = 0;
            for (std::int64_t y = 0; y < 41; ++y)
                for (std::int64_t x = 0; x < 41; ++x) {
                    const auto r = k_hop_reachable(grid, {x, y}, k);
                    // Any k-hop walk stays inside the box of half-sizes k*ex, k*ey.
                    const bool box_inside = x >= k * ex && y >= k * ey && x + k * ex <= 40 && y + k * ey <= 40;
                    if (r.boundary_safe) {
                        ++safe;
                        c.expect(r.coverage == expected, std::string(name) + " boundary-safe node");
                    }
                    if (box_inside) {
                        ++contained;
                        c.expect(r.coverage == expected, std::string(name) + " contained node");
                    }
                }
            c.expect(safe + contained > 0, std::string(name) + " has comparable nodes");
            c.detail << name << " k=" << k << ": " << safe << " safe/" << contained << " contained; ";
        }
    }
}

void grid_metrics(Check& c) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const Configuration cfg(GridKind::Hexagonal, oracle::random_points(rng, 2 + t % 6, 8, 8));
        const auto img = map_configuration(cfg);
        c.expect(is_distinct_difference(cfg).distinct == is_distinct_difference(img).distinct, "xi preserves DDC status");
        for (int k = 1; k <= 3; ++k)
            c.expect(k_hop_coverage(cfg, k).coverage == k_hop_coverage(img, k).coverage, "xi preserves coverage");
    }
    std::size_t vectors = 0;
    for (std::int64_t x = -42; x <= 42; ++x)
        for (std::int64_t y = -42; y <= 42; ++y) {
            const Vec2 v{x, y};
            const auto sq = squared_norm(v, GridKind::Square);
            const auto hx = squared_norm(v, GridKind::Hexagonal);
            if (hx > 0 && hx <= 400) {
                c.expect(2 * hx <= 3 * sq && sq <= 2 * hx, "xi distortion in [2/3, 2]");
                const auto h = hexagonal_norm(v);
                c.expect(hx <= h * h && 3 * h * h <= 4 * hx, "hexagonal metric sandwich");
                ++vectors;
            }
            if (sq > 0 && sq <= 400) {
                const auto l1 = manhattan_norm(v);
                c.expect(sq <= l1 * l1 && l1 * l1 <= 2 * sq, "Manhattan metric sandwich");
                ++vectors;
            }
        }
    c.detail << "100 random configurations; " << vectors << " lattice vectors";
}

bool decomposes(std::vector<std::int64_t> v, int k) {
    if (k == 0) return std::ranges::all_of(v, [](auto x) { return x == 0; });
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[i] > 0 && v[j] < 0) {
                auto rest = v;
                --rest[i];
                ++rest[j];
                if (h_level(rest) == k - 1 && decomposes(rest, k - 1)) return true;
            }
    return false;
}

void property_suites(Check& c) {
    // H-tuple algebra.
    for (int m = 1; m <= 4; ++m) {
        std::vector<std::vector<HTuple>> lv;
        for (int k = 0; k <= 3; ++k) lv.push_back(enumerate_h(m, k));
        for (int k1 = 0; k1 <= 3; ++k1)
            for (int k2 = 0; k2 <= 3; ++k2)
                for (const auto& a : lv[k1])
                    for (const auto& b : lv[k2]) {
                        std::vector<std::int64_t> s(m), d(m);
                        for (int i = 0; i < m; ++i) s[i] = a.coeffs[i] + b.coeffs[i], d[i] = a.coeffs[i] - b.coeffs[i];
                        const auto ls = h_level(s), ld = h_level(d);
                        c.expect(ls && *ls <= k1 + k2, "sum level");
                        if (a.coeffs != b.coeffs) c.expect(ld && *ld >= 1 && *ld <= k1 + k2, "difference level");
                    }
        for (int k = 1; k <= 3; ++k)
            for (const auto& t : lv[k]) c.expect(decomposes(t.coeffs, k), "H_k splits into k H_1 tuples");
    }

    // Vanishing-combination test against the B_2k test.
    std::mt19937_64 rng(77);
    for (int t = 0; t < 150; ++t) {
        const Configuration cfg(GridKind::Square, oracle::random_ddc(rng, 2 + t % 4, 12, 12));
        const auto v = is_maximal_coverage(cfg, 2);
        c.expect(v.tuple_verdict.has_value() && *v.tuple_verdict == v.bh_verdict, "both maximality tests agree");
        c.expect(v.maximal == k_hop_coverage(cfg, 2).is_maximal, "maximality matches coverage count");
    }

    // Non-parallel differences force coverage above k m (m - 1).
    for (int t = 0; t < 100; ++t) {
        const auto m = 2 + t % 5;
        const Configuration cfg(GridKind::Square, oracle::random_ddc(rng, m, 10, 10));
        bool non_parallel = false;
        const auto d = difference_vectors(cfg).vectors;
        for (auto u : d)
            for (auto w : d) non_parallel = non_parallel || u.x * w.y != u.y * w.x;
        if (!non_parallel) continue;
        for (int k = 2; k <= 4; ++k)
            c.expect(k_hop_coverage(cfg, k).coverage > static_cast<std::uint64_t>(k * m * (m - 1)), "strict excess");
    }

    // Welch window differences off the period lattice are unique.
    for (std::uint64_t p : {5, 7, 11, 13}) {
        const auto pi = static_cast<std::int64_t>(p);
        for (auto g : primitive_roots(p)) {
            const WelchArray arr(p, g);
            for (std::int64_t x0 : {0, 3}) {
                std::vector<Vec2> dots;
                for (std::int64_t y = x0; y < x0 + pi - 1; ++y)
                    for (std::int64_t x = x0; x < x0 + pi; ++x)
                        if (arr.contains(x, y)) dots.push_back({x, y});
                for (auto [v, n] : oracle::difference_multiset(dots))
                    if (mod_floor(v.x, pi) != 0 && mod_floor(v.y, pi - 1) != 0) c.expect(n == 1, "window difference unique");
            }
        }
    }

    // Difference sets of the restricted integer families.
    std::size_t families = 0;
    for (int t = 3; t <= 7; ++t) {
        std::vector<int> universe;
        for (int i = -(t - 1); i <= t - 1; ++i)
            if (i != 0) universe.push_back(i);
        universe.push_back(t + 1);
        const std::set<int> fixed{1, -(t - 1), t + 1};
        for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
            if (std::popcount(mask) != t + 1) continue;
            std::set<int> f;
            for (std::size_t b = 0; b < universe.size(); ++b)
                if (mask >> b & 1u) f.insert(universe[b]);
            if (!std::ranges::includes(f, fixed)) continue;
            bool neg = false, ok = true;
            for (int i : f) {
                if (fixed.contains(i)) continue;
                neg = neg || i < 0;
                ok = ok && !(i > 0 && f.contains(i - t));
            }
            if (!neg || !ok) continue;
            ++families;
            for (int gamma = 1; gamma <= t - 1; ++gamma) {
                bool found = false;
                for (int i : f) found = found || f.contains(i + gamma);
                c.expect(found, "gamma representable");
            }
        }
    }
    c.detail << families << " integer families";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*run)(Check&);
    };
    const Criterion criteria[] = {
        {"intro DD(3): six differences, C_1 = 6, C_2 = 18, maximal", intro_example},
        {"H_k counts: closed form and enumeration agree", h_machinery},
        {"minimal coverage and perfect Golomb equivalence", minimal_coverage},
        {"Bose-Chowla sets are B_h", bose_chowla},
        {"periodic-array windows have maximal coverage", construction_one},
        {"maximal coverage within diameter r", maximal_in_disc},
        {"Welch configuration: complete two-hop coverage", welch_complete},
        {"key-grid simulation matches C_k", simulation_equivalence},
        {"xi invariance and metric bounds", grid_metrics},
        {"property suites", property_suites},
    };
    int failures = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "exception: " << e.what();
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::printf("[%s] %2d  %s (%.2f s) -- %s\n", check.ok ? "PASS" : "FAIL", index, criterion.name, took.count(),
                    check.detail.str().c_str());
        failures += !check.ok;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
