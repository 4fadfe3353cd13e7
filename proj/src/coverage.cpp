#include "ddc/coverage.hpp"
#include "ddc/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ddc {

namespace {

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

void require_positive(int value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::optional<int> h_level(std::span<const std::int64_t> coeffs) {
    std::int64_t total = 0;
    std::int64_t positive = 0;
    for (auto c : coeffs) {
        total += c;
        if (c > 0) positive += c;
    }
    if (total != 0) return std::nullopt;
    return static_cast<int>(positive);
}

std::vector<Vec2> k_hop_set(const Configuration& config, int k) {
    require_positive(k, "hop count k");
    const auto diffs = difference_vectors(config);
    std::unordered_set<Vec2, Vec2Hash> reached{Vec2{}};
    std::vector<Vec2> frontier{Vec2{}};
    for (int layer = 1; layer <= k && !frontier.empty(); ++layer) {
        std::vector<Vec2> next;
        for (auto base : frontier)
            for (auto d : diffs.vectors)
                if (reached.insert(base + d).second) next.push_back(base + d);
        frontier = std::move(next);
    }
    reached.erase(Vec2{});
    std::vector<Vec2> out(reached.begin(), reached.end());
    std::ranges::sort(out);
    return out;
}

CoverageReport k_hop_coverage(const Configuration& config, int k) {
    CoverageReport report;
    report.k = k;
    report.reachable = k_hop_set(config, k);
    report.coverage = report.reachable.size();
    const int m = static_cast<int>(config.size());
    report.max_bound = max_coverage_bound(m, k);
    report.min_bound = min_coverage_bound(m, k);
    report.is_maximal = BigInt(report.coverage) == report.max_bound;
    report.is_minimal = BigInt(report.coverage) == report.min_bound;
    return report;
}

// s positive entries forming a composition of k, t negative entries forming a
// composition of k, placed on disjoint supports.
BigInt h_set_size(int m, int k) {
    require_positive(m, "tuple length m");
    if (k < 0) throw std::invalid_argument("level k must be non-negative");
    if (k == 0) return 1;
    BigInt total = 0;
    for (int s = 1; s <= std::min(k, m); ++s)
        for (int t = 1; t <= std::min(k, m - s); ++t)
            total += binomial(m, s) * binomial(m - s, t) * binomial(k - 1, s - 1) * binomial(k - 1, t - 1);
    return total;
}

bool for_each_h_tuple(int m, int k, const std::function<bool(std::span<const std::int64_t>)>& visit) {
    require_positive(m, "tuple length m");
    if (k < 0) throw std::invalid_argument("level k must be non-negative");
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(m), 0);

    // pos/neg: remaining positive and negative mass to place in positions [i, m).
    auto recurse = [&](auto&& self, int i, std::int64_t pos, std::int64_t neg) -> bool {
        const int remaining = m - i;
        if (remaining == 0) return pos == 0 && neg == 0 ? visit(tuple) : true;
        if ((pos > 0) + (neg > 0) > remaining) return true;
        for (std::int64_t v = -neg; v <= pos; ++v) {
            tuple[static_cast<std::size_t>(i)] = v;
            const auto next_pos = v > 0 ? pos - v : pos;
            const auto next_neg = v < 0 ? neg + v : neg;
            if (!self(self, i + 1, next_pos, next_neg)) return false;
        }
        tuple[static_cast<std::size_t>(i)] = 0;
        return true;
    };
    return recurse(recurse, 0, k, k);
}

std::vector<HTuple> enumerate_h(int m, int k, const Limits& limits) {
    const auto expected = h_set_size(m, k);
    if (expected > limits.h_tuples)
        throw ResourceLimitError("|H_" + std::to_string(k) + "| = " + expected.str() + " for m = " +
                                 std::to_string(m) + " exceeds the h_tuples cap");
    std::vector<HTuple> out;
    out.reserve(static_cast<std::size_t>(expected));
    for_each_h_tuple(m, k, [&](std::span<const std::int64_t> c) {
        out.push_back({std::vector<std::int64_t>(c.begin(), c.end()), k});
        return true;
    });
    return out;
}

BigInt max_coverage_bound(int m, int k) {
    require_positive(k, "hop count k");
    BigInt total = 0;
    for (int i = 1; i <= k; ++i) total += h_set_size(m, i);
    return total;
}

BigInt min_coverage_bound(int m, int k) {
    require_positive(m, "tuple length m");
    require_positive(k, "hop count k");
    return BigInt(k) * m * (m - 1);
}

AmbientGroup AmbientGroup::z_mod(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("Z_n needs n >= 2");
    return {Kind::ZMod, n, 0, 0};
}

AmbientGroup AmbientGroup::z_mod_pair(std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 2) throw std::invalid_argument("Z_a x Z_b needs a, b >= 2");
    return {Kind::ZModPair, 0, a, b};
}

Vec2 AmbientGroup::reduce(Vec2 v) const {
    switch (kind) {
        case Kind::ZSquared: return v;
        case Kind::ZMod: return {mod_floor(v.x, n), 0};
        case Kind::ZModPair: return {mod_floor(v.x, a), mod_floor(v.y, b)};
    }
    return v;
}

namespace {

// Non-decreasing index lists of length h over [0, m), in lexicographic order.
class MultisetCursor {
public:
    MultisetCursor(std::size_t m, int h) : m_(m), idx_(static_cast<std::size_t>(h), 0) {}
    const std::vector<std::size_t>& indices() const { return idx_; }
    bool advance() {
        for (std::size_t pos = idx_.size(); pos-- > 0;) {
            if (idx_[pos] + 1 < m_) {
                const auto v = idx_[pos] + 1;
                for (std::size_t q = pos; q < idx_.size(); ++q) idx_[q] = v;
                return true;
            }
        }
        return false;
    }

private:
    std::size_t m_;
    std::vector<std::size_t> idx_;
};

std::vector<std::size_t> multiset_at(std::size_t m, int h, std::uint64_t ordinal) {
    MultisetCursor cursor(m, h);
    for (std::uint64_t i = 0; i < ordinal; ++i) cursor.advance();
    return cursor.indices();
}

}  // namespace

BhVerdict is_b_h_sequence(std::span<const Vec2> elements, int h, const AmbientGroup& group, const Limits& limits) {
    require_positive(h, "h");
    if (elements.empty()) return {};
    const auto m = elements.size();
    const auto sums = binomial(static_cast<std::int64_t>(m) + h - 1, h);
    if (sums > limits.bh_sums)
        throw ResourceLimitError("B_" + std::to_string(h) + " check needs " + sums.str() +
                                 " multiset sums, above the bh_sums cap");

    std::vector<Vec2> reduced;
    reduced.reserve(m);
    for (auto e : elements) reduced.push_back(group.reduce(e));
    {
        std::unordered_set<Vec2, Vec2Hash> distinct(reduced.begin(), reduced.end());
        if (distinct.size() != m) throw std::invalid_argument("B_h test needs pairwise distinct group elements");
    }

    std::unordered_map<Vec2, std::uint64_t, Vec2Hash> seen;
    seen.reserve(static_cast<std::size_t>(sums));
    MultisetCursor cursor(m, h);
    std::uint64_t ordinal = 0;
    do {
        Vec2 total{};
        for (auto i : cursor.indices()) total += reduced[i];
        total = group.reduce(total);
        auto [it, inserted] = seen.emplace(total, ordinal);
        if (!inserted) return {false, BhCollision{multiset_at(m, h, it->second), cursor.indices()}};
        ++ordinal;
    } while (cursor.advance());
    return {};
}

bool no_vanishing_combination(const Configuration& config, int k, const Limits& limits,
                              std::vector<std::int64_t>* witness) {
    require_positive(k, "hop count k");
    const int m = static_cast<int>(config.size());
    BigInt total = 0;
    for (int level = 1; level <= 2 * k; ++level) total += h_set_size(m, level);
    if (total > limits.h_tuples)
        throw ResourceLimitError("H_1..H_" + std::to_string(2 * k) + " hold " + total.str() +
                                 " tuples, above the h_tuples cap");
    const auto& dots = config.dots();
    for (int level = 1; level <= 2 * k; ++level) {
        const bool clean = for_each_h_tuple(m, level, [&](std::span<const std::int64_t> c) {
            Vec2 sum{};
            for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] * dots[i];
            if (sum.is_zero()) {
                if (witness) witness->assign(c.begin(), c.end());
                return false;
            }
            return true;
        });
        if (!clean) return false;
    }
    return true;
}

MaximalCoverageVerdict is_maximal_coverage(const Configuration& config, int k, const Limits& limits) {
    require_positive(k, "hop count k");
    MaximalCoverageVerdict verdict;
    const auto bh = is_b_h_sequence(config.dots(), 2 * k, AmbientGroup::z_squared(), limits);
    verdict.bh_verdict = bh.is_bh;
    verdict.collision = bh.collision;
    try {
        std::vector<std::int64_t> witness;
        const bool clean = no_vanishing_combination(config, k, limits, &witness);
        verdict.tuple_verdict = clean;
        if (!clean) verdict.vanishing_tuple = std::move(witness);
    } catch (const ResourceLimitError&) {
        verdict.fallback = true;
    }
    if (verdict.tuple_verdict && *verdict.tuple_verdict != verdict.bh_verdict)
        throw std::logic_error("B_2k test and vanishing-combination test disagree");
    verdict.maximal = verdict.bh_verdict;
    return verdict;
}

bool is_perfect_golomb_ruler(std::span<const std::int64_t> marks) {
    std::set<std::int64_t> diffs;
    for (auto x : marks)
        for (auto y : marks) diffs.insert(x - y);
    const auto m = static_cast<std::int64_t>(marks.size());
    const auto half = m * (m - 1) / 2;
    return static_cast<std::int64_t>(diffs.size()) == 2 * half + 1 && *diffs.begin() == -half &&
           *diffs.rbegin() == half;
}

bool is_perfect_golomb_equivalent(const Configuration& config) {
    if (config.size() < 2) throw std::invalid_argument("Golomb equivalence needs m >= 2");
    const auto& dots = config.dots();
    const auto base = dots[0];
    const auto dir = dots[1] - base;
    const auto g = std::gcd(abs64(dir.x), abs64(dir.y));
    const Vec2 step{dir.x / g, dir.y / g};  // shortest lattice vector along the line

    std::vector<std::int64_t> marks;
    marks.reserve(dots.size());
    for (auto v : dots) {
        const auto rel = v - base;
        if (rel.x * step.y - rel.y * step.x != 0) return false;
        marks.push_back(step.x != 0 ? rel.x / step.x : rel.y / step.y);
    }
    const auto lowest = *std::ranges::min_element(marks);
    std::int64_t scale = 0;
    for (auto& t : marks) {
        t -= lowest;
        scale = std::gcd(scale, t);
    }
    for (auto& t : marks) t /= scale;
    return is_perfect_golomb_ruler(marks);
}

}  // namespace ddc
