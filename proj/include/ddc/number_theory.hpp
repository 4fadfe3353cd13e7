#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ddc {

bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Exact power; throws std::overflow_error past 2^63.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

struct PrimePower {
    std::uint64_t p = 0;
    unsigned e = 0;
};

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Multiplicative inverse modulo a prime.
std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p);

bool is_primitive_root(std::uint64_t alpha, std::uint64_t p);
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Least non-negative residue.
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
    const auto r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace ddc
