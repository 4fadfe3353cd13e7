#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ddc/configuration.hpp"

namespace ddc {

/// Welch periodic array R_p = {(i, j) : alpha^j = i mod p}; periods (p, p - 1).
class WelchArray {
public:
    WelchArray(std::uint64_t p, std::uint64_t alpha);

    std::uint64_t p() const { return p_; }
    std::uint64_t alpha() const { return alpha_; }

    bool contains(std::int64_t i, std::int64_t j) const;
    /// Discrete log of a non-zero residue, in [0, p - 2].
    std::int64_t log(std::int64_t residue) const;

private:
    std::uint64_t p_;
    std::uint64_t alpha_;
    std::vector<std::int64_t> powers_;  // alpha^j mod p, j in [0, p-2]
    std::vector<std::int64_t> logs_;
};

bool welch_dot(std::uint64_t p, std::uint64_t alpha, std::int64_t i, std::int64_t j);

struct WelchConstruction {
    std::uint64_t p = 0;
    std::uint64_t alpha = 0;
    /// (i, j) with alpha^j = i = 1/(alpha - 1) mod p, i in [1, p], j in [0, p - 2].
    Vec2 anchor;
    /// p + 2 dots translated so their bounding box starts at (0, 0).
    Configuration config;
    /// The same dots at their position in R_p.
    Configuration untranslated;
};

/// Requires p >= 5 prime; alpha defaults to the smallest primitive root.
WelchConstruction construct_complete_two_hop(std::uint64_t p, std::optional<std::uint64_t> alpha = std::nullopt);

struct TwoHopDecomposition {
    Vec2 target;
    Vec2 first;
    std::optional<Vec2> second;  // absent for a one-hop vector
};

struct CompleteCoverageCertificate {
    std::int64_t half_width = 0;
    std::int64_t half_height = 0;
    std::vector<TwoHopDecomposition> entries;  // sorted by target
};

struct CompleteCoverageVerdict {
    bool complete = false;
    std::optional<CompleteCoverageCertificate> certificate;
    /// First uncovered vector in the half-plane scan {e > 0} u {e = 0, d > 0},
    /// rows from e = 0 upward, left to right. Coverage is symmetric under negation.
    std::optional<Vec2> first_uncovered;
    std::size_t uncovered_count = 0;
    explicit operator bool() const { return complete; }
};

/// Every (d, e) != 0 with |d| <= half_width, |e| <= half_height is a sum of at most two
/// difference vectors of the configuration.
CompleteCoverageVerdict verify_complete_two_hop(const Configuration& config, std::int64_t half_width,
                                                std::int64_t half_height);

}  // namespace ddc
