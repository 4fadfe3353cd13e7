#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ddc/configuration.hpp"
#include "ddc/finite_field.hpp"
#include "ddc/limits.hpp"

namespace ddc {

/// {a in Z_{q^h - 1} : alpha^a - alpha in GF(q)} for the canonical GF(q^h).
struct BoseChowlaSet {
    std::uint64_t q = 0;
    unsigned h = 0;
    std::uint64_t modulus_n = 0;  // q^h - 1
    std::vector<std::uint64_t> residues;  // sorted, |residues| = q
    std::vector<std::uint32_t> field_modulus{};
    std::vector<std::uint32_t> alpha{};
    std::uint64_t p = 0;
    unsigned field_degree = 0;
};

BoseChowlaSet bose_chowla_set(std::uint64_t q, unsigned h, const Limits& limits = Limits::defaults());

/// Dot set in Z^2 with periods a (x) and b (y): (x,y) is a dot iff
/// (x mod a, y mod b) is one of the residues.
class PeriodicDotArray {
public:
    PeriodicDotArray(std::int64_t period_x, std::int64_t period_y, std::vector<Vec2> residues);

    std::int64_t period_x() const { return a_; }
    std::int64_t period_y() const { return b_; }
    const std::vector<Vec2>& residues() const { return residues_; }

    bool contains(std::int64_t x, std::int64_t y) const;
    bool contains(Vec2 v) const { return contains(v.x, v.y); }

    /// Dots in [x0, x0 + a) x [y0, y0 + b).
    Configuration window(Vec2 origin) const;

private:
    std::int64_t a_;
    std::int64_t b_;
    std::vector<Vec2> residues_;
    std::vector<bool> mask_;
};

/// Image of a set in Z_{ab} under x -> (x mod a, x mod b); needs gcd(a, b) = 1.
PeriodicDotArray crt_lift(const BoseChowlaSet& set, std::int64_t a, std::int64_t b);

/// Lifts bose_chowla_set(q, 2k) through Z_{ab} -> Z_a x Z_b.
PeriodicDotArray crt_periodic_array(std::uint64_t q, unsigned k, std::int64_t a, std::int64_t b,
                                    const Limits& limits = Limits::defaults());

/// Coprime split q^{2k} - 1 = a * b with r <= a <= b used by the maximal-range procedure:
/// a = q^k - 1 (q even), (q^k - 1)/2 (q^k = 3 mod 4), (q^k + 1)/2 (q^k = 1 mod 4).
std::pair<std::int64_t, std::int64_t> coprime_split(std::uint64_t q, unsigned k);

/// Smallest prime power q with q^k > bound.
std::uint64_t smallest_prime_power_above_root(std::uint64_t bound, unsigned k);

struct MaximalConstruction {
    Configuration config;
    std::uint64_t q = 0;
    unsigned k = 0;
    std::int64_t r = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t disc_radius = 0;
    Vec2 shift{};
    std::size_t disc_points = 0;
    /// |disc| * q / (a b): the pigeonhole guarantee on the best shift.
    double average_dots = 0.0;
    std::vector<std::uint32_t> field_modulus{};
    std::vector<std::uint32_t> alpha{};
    /// Reference constant (pi/16) 2^{1/k} for m ~ c r^{1/k}; reported only.
    double asymptotic_constant = 0.0;
    bool degenerate = false;  // fewer than two dots captured
};

/// Disc of radius floor(r/2) shifted to the position holding the most dots of the
/// Bose-Chowla periodic array; the tie-break is the lexicographically smallest shift (sx, sy).
MaximalConstruction construct_dd_m_r_maximal(unsigned k, std::int64_t r,
                                             const Limits& limits = Limits::defaults());

}  // namespace ddc
