#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddc/limits.hpp"

namespace ddc {

/// Element of GF(p^n): n coefficients over GF(p), low degree first.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^n) realised as GF(p)[x]/(f) for the canonical f.
///
/// The modulus is the lexicographically smallest monic irreducible of degree n,
/// comparing the coefficient vectors (c_0, c_1, ..., c_{n-1}) with c_0 most
/// significant. The primitive element is the lexicographically smallest element
/// (same ordering) of multiplicative order p^n - 1. Both choices are
/// deterministic, so a given (p, n) always yields the same field.
class FiniteField {
public:
    FiniteField(std::uint64_t p, unsigned n, const Limits& limits = Limits::defaults());

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint64_t order() const { return order_; }

    /// Monic modulus, n + 1 coefficients low degree first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElement& primitive() const { return primitive_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Element of the prime subfield.
    FieldElement constant(std::uint64_t c) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement pow(const FieldElement& x, std::uint64_t e) const;
    FieldElement inverse(const FieldElement& x) const;

    bool is_zero(const FieldElement& x) const;
    bool is_one(const FieldElement& x) const;

    /// Multiplicative order of a non-zero element.
    std::uint64_t multiplicative_order(const FieldElement& x) const;

    /// Bijection to [0, p^n) with c_0 as the most significant base-p digit,
    /// so that index order is the lexicographic order above.
    std::uint64_t index_of(const FieldElement& x) const;
    FieldElement element_at(std::uint64_t index) const;

    /// Distinct prime factors of p^n - 1.
    const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

    std::string polynomial_string(const std::vector<std::uint32_t>& coeffs) const;

private:
    std::uint64_t p_;
    unsigned n_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> factors_;
    FieldElement primitive_;
};

/// Irreducibility over GF(p) of a monic polynomial (coefficients low degree first),
/// by checking gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p);

}  // namespace ddc
