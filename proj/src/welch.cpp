#include "ddc/welch.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ddc/number_theory.hpp"

namespace ddc {

WelchArray::WelchArray(std::uint64_t p, std::uint64_t alpha) : p_(p), alpha_(alpha) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    if (!is_primitive_root(alpha, p))
        throw std::invalid_argument(std::to_string(alpha) + " is not a primitive root mod " + std::to_string(p));
    const auto pi = static_cast<std::int64_t>(p);
    powers_.resize(p - 1);
    logs_.assign(p, -1);
    std::int64_t cur = 1;
    for (std::int64_t j = 0; j < pi - 1; ++j) {
        powers_[static_cast<std::size_t>(j)] = cur;
        logs_[static_cast<std::size_t>(cur)] = j;
        cur = cur * static_cast<std::int64_t>(alpha % p) % pi;
    }
}

bool WelchArray::contains(std::int64_t i, std::int64_t j) const {
    const auto pi = static_cast<std::int64_t>(p_);
    return powers_[static_cast<std::size_t>(mod_floor(j, pi - 1))] == mod_floor(i, pi);
}

std::int64_t WelchArray::log(std::int64_t residue) const {
    const auto r = mod_floor(residue, static_cast<std::int64_t>(p_));
    if (r == 0) throw std::invalid_argument("zero has no discrete logarithm");
    return logs_[static_cast<std::size_t>(r)];
}

bool welch_dot(std::uint64_t p, std::uint64_t alpha, std::int64_t i, std::int64_t j) {
    if (!is_primitive_root(alpha, p))
        throw std::invalid_argument(std::to_string(alpha) + " is not a primitive root mod " + std::to_string(p));
    const auto pi = static_cast<std::int64_t>(p);
    const auto e = static_cast<std::uint64_t>(mod_floor(j, pi - 1));
    return static_cast<std::int64_t>(powmod(alpha, e, p)) == mod_floor(i, pi);
}

WelchConstruction construct_complete_two_hop(std::uint64_t p, std::optional<std::uint64_t> alpha) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("complete two-hop construction needs a prime p >= 5");
    const auto g = alpha.value_or(smallest_primitive_root(p));
    const WelchArray array(p, g);
    const auto pi = static_cast<std::int64_t>(p);

    // alpha^j = i = 1/(alpha - 1): dots at (i, j) and (i + 1, j + 1).
    const auto i = static_cast<std::int64_t>(inverse_mod_prime((g % p + p - 1) % p, p));
    const auto j = array.log(i);

    std::vector<Vec2> dots;
    dots.reserve(p + 2);
    for (std::int64_t y = j; y <= j + pi - 2; ++y) {
        const auto residue = static_cast<std::int64_t>(powmod(g, static_cast<std::uint64_t>(y), p));
        dots.push_back({i + mod_floor(residue - i, pi), y});
    }
    dots.push_back({i, j + pi - 1});
    dots.push_back({i + pi, j});
    dots.push_back({i + pi + 1, j + pi});

    WelchConstruction out{.p = p,
                          .alpha = g,
                          .anchor = {i, j},
                          .config = Configuration::square({{0, 0}}),
                          .untranslated = Configuration(GridKind::Square, dots)};
    out.config = out.untranslated.translated(-out.anchor);
    return out;
}

CompleteCoverageVerdict verify_complete_two_hop(const Configuration& config, std::int64_t half_width,
                                                std::int64_t half_height) {
    if (config.kind() != GridKind::Square) throw std::invalid_argument("complete coverage is checked on the square grid");
    if (half_width < 0 || half_height < 0) throw std::invalid_argument("rectangle half-extents must be non-negative");

    const auto diffs = difference_vectors(config);
    const std::unordered_set<Vec2, Vec2Hash> one_hop(diffs.vectors.begin(), diffs.vectors.end());

    auto decompose = [&](Vec2 target) -> std::optional<TwoHopDecomposition> {
        if (one_hop.contains(target)) return TwoHopDecomposition{target, target, std::nullopt};
        for (auto u : diffs.vectors)
            if (one_hop.contains(target - u)) return TwoHopDecomposition{target, u, target - u};
        return std::nullopt;
    };

    CompleteCoverageVerdict verdict;
    CompleteCoverageCertificate certificate{half_width, half_height, {}};
    for (std::int64_t d = -half_width; d <= half_width; ++d) {
        for (std::int64_t e = -half_height; e <= half_height; ++e) {
            const Vec2 target{d, e};
            if (target.is_zero()) continue;
            if (auto entry = decompose(target)) certificate.entries.push_back(*entry);
            else ++verdict.uncovered_count;
        }
    }
    if (verdict.uncovered_count == 0) {
        verdict.complete = true;
        verdict.certificate = std::move(certificate);
        return verdict;
    }
    for (std::int64_t e = 0; e <= half_height && !verdict.first_uncovered; ++e) {
        for (std::int64_t d = e == 0 ? 1 : -half_width; d <= half_width; ++d) {
            if (!decompose({d, e})) {
                verdict.first_uncovered = Vec2{d, e};
                break;
            }
        }
    }
    return verdict;
}

}  // namespace ddc
