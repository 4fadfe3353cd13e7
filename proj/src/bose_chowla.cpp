#include "ddc/bose_chowla.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ddc/number_theory.hpp"

namespace ddc {

BoseChowlaSet bose_chowla_set(std::uint64_t q, unsigned h, const Limits& limits) {
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (h < 2) throw std::invalid_argument("Bose-Chowla sets need h >= 2");
    std::uint64_t order = 0;
    try {
        order = ipow(q, h);
    } catch (const std::overflow_error&) {
        throw ResourceLimitError("q^h overflows");
    }
    if (order > limits.dlog_table)
        throw ResourceLimitError("q^h = " + std::to_string(order) + " exceeds the dlog_table cap");

    const FiniteField field(pp->p, pp->e * h, limits);
    const auto n = order - 1;
    const auto& alpha = field.primitive();

    constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> log(order, kUnset);
    auto power = field.one();
    for (std::uint64_t t = 0; t < n; ++t) {
        log[field.index_of(power)] = t;
        power = field.mul(power, alpha);
    }

    // GF(q) is {0} together with the powers of alpha^{(q^h - 1)/(q - 1)}.
    std::vector<FieldElement> subfield{field.zero()};
    const auto beta = field.pow(alpha, n / (q - 1));
    auto cur = field.one();
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
        subfield.push_back(cur);
        cur = field.mul(cur, beta);
    }

    BoseChowlaSet out;
    out.q = q;
    out.h = h;
    out.modulus_n = n;
    out.p = pp->p;
    out.field_degree = pp->e * h;
    out.field_modulus = field.modulus();
    out.alpha = alpha.coeffs;
    for (const auto& c : subfield) {
        const auto a = log[field.index_of(field.add(alpha, c))];
        if (a == kUnset) throw std::logic_error("alpha + c vanished");
        out.residues.push_back(a);
    }
    std::ranges::sort(out.residues);
    return out;
}

PeriodicDotArray::PeriodicDotArray(std::int64_t period_x, std::int64_t period_y, std::vector<Vec2> residues)
    : a_(period_x), b_(period_y), residues_(std::move(residues)) {
    if (a_ < 1 || b_ < 1) throw std::invalid_argument("periods must be positive");
    mask_.assign(static_cast<std::size_t>(a_ * b_), false);
    for (auto& r : residues_) {
        r = {mod_floor(r.x, a_), mod_floor(r.y, b_)};
        mask_[static_cast<std::size_t>(r.x * b_ + r.y)] = true;
    }
    std::ranges::sort(residues_);
}

bool PeriodicDotArray::contains(std::int64_t x, std::int64_t y) const {
    return mask_[static_cast<std::size_t>(mod_floor(x, a_) * b_ + mod_floor(y, b_))];
}

Configuration PeriodicDotArray::window(Vec2 origin) const {
    std::vector<Vec2> dots;
    dots.reserve(residues_.size());
    for (auto r : residues_)
        dots.push_back({origin.x + mod_floor(r.x - origin.x, a_), origin.y + mod_floor(r.y - origin.y, b_)});
    return {GridKind::Square, dots};
}

PeriodicDotArray crt_lift(const BoseChowlaSet& set, std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("periods must be positive");
    if (static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) != set.modulus_n)
        throw std::invalid_argument("a * b = " + std::to_string(a * b) + " differs from q^h - 1 = " +
                                    std::to_string(set.modulus_n));
    if (gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) != 1)
        throw std::invalid_argument("periods a and b must be coprime");
    std::vector<Vec2> residues;
    for (auto s : set.residues) {
        const auto v = static_cast<std::int64_t>(s);
        residues.push_back({v % a, v % b});
    }
    return {a, b, std::move(residues)};
}

PeriodicDotArray crt_periodic_array(std::uint64_t q, unsigned k, std::int64_t a, std::int64_t b,
                                    const Limits& limits) {
    if (k < 2) throw std::invalid_argument("Construction needs k >= 2");
    return crt_lift(bose_chowla_set(q, 2 * k, limits), a, b);
}

std::pair<std::int64_t, std::int64_t> coprime_split(std::uint64_t q, unsigned k) {
    const auto qk = ipow(q, k);
    const auto q2k = ipow(q, 2 * k);
    std::uint64_t a = 0;
    if (q % 2 == 0) a = qk - 1;
    else if (qk % 4 == 3) a = (qk - 1) / 2;
    else a = (qk + 1) / 2;
    return {static_cast<std::int64_t>(a), static_cast<std::int64_t>((q2k - 1) / a)};
}

std::uint64_t smallest_prime_power_above_root(std::uint64_t bound, unsigned k) {
    for (std::uint64_t q = 2;; ++q) {
        if (!as_prime_power(q)) continue;
        if (ipow(q, k) > bound) return q;
    }
}

MaximalConstruction construct_dd_m_r_maximal(unsigned k, std::int64_t r, const Limits& limits) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (r < 1) throw std::invalid_argument("r must be positive");

    MaximalConstruction out{.config = Configuration::square({{0, 0}})};
    out.k = k;
    out.r = r;
    try {
        out.q = smallest_prime_power_above_root(2 * static_cast<std::uint64_t>(r), k);
        std::tie(out.a, out.b) = coprime_split(out.q, k);
    } catch (const std::overflow_error&) {
        throw ResourceLimitError("q^{2k} overflows");
    }
    const auto set = bose_chowla_set(out.q, 2 * k, limits);
    const auto array = crt_lift(set, out.a, out.b);
    out.field_modulus = set.field_modulus;
    out.alpha = set.alpha;

    out.disc_radius = r / 2;
    const auto radius = out.disc_radius;
    std::vector<Vec2> disc;
    for (std::int64_t x = -radius; x <= radius; ++x)
        for (std::int64_t y = -radius; y <= radius; ++y)
            if (x * x + y * y <= radius * radius) disc.push_back({x, y});
    out.disc_points = disc.size();
    out.average_dots = static_cast<double>(disc.size()) * static_cast<double>(out.q) /
                       (static_cast<double>(out.a) * static_cast<double>(out.b));
    out.asymptotic_constant = std::numbers::pi / 16.0 * std::pow(2.0, 1.0 / k);

    const auto probes = static_cast<unsigned __int128>(out.a) * out.b * disc.size();
    if (probes > limits.shift_search) throw ResourceLimitError("shift search exceeds the shift_search cap");

    std::size_t best = 0;
    Vec2 best_shift{};
    for (std::int64_t sx = 0; sx < out.a; ++sx) {
        for (std::int64_t sy = 0; sy < out.b; ++sy) {
            std::size_t count = 0;
            for (auto d : disc) count += array.contains(sx + d.x, sy + d.y);
            if (count > best) {
                best = count;
                best_shift = {sx, sy};
            }
        }
    }
    std::vector<Vec2> dots;
    for (auto d : disc)
        if (array.contains(best_shift + d)) dots.push_back(best_shift + d);
    out.shift = best_shift;
    out.config = Configuration(GridKind::Square, dots);
    out.degenerate = dots.size() < 2;
    return out;
}

}  // namespace ddc
