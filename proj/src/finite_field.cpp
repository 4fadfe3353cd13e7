#include "ddc/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "ddc/number_theory.hpp"

namespace ddc {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const auto df = f.size() - 1;
    const auto lead_inv = inverse_mod_prime(f.back(), p);
    while (a.size() > df) {
        const auto shift = a.size() - 1 - df;
        const auto factor = mulmod(a.back(), lead_inv, p);
        for (std::size_t i = 0; i <= df; ++i) {
            auto& slot = a[shift + i];
            slot = (slot + p - mulmod(factor, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(out);
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(base, f, p);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly widen(const std::vector<std::uint32_t>& c) {
    Poly out(c.begin(), c.end());
    trim(out);
    return out;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint64_t p) {
    const auto f = widen(monic);
    if (f.size() < 2) return false;
    const auto n = f.size() - 1;
    if (n == 1) return true;
    Poly h{0, 1};  // x
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = poly_powmod(h, p, f, p);  // x^{p^i}
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned n, const Limits& limits) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (n < 1) throw std::invalid_argument("field degree must be positive");
    if (p > (1ULL << 31)) throw ResourceLimitError("characteristic too large");
    try {
        order_ = ipow(p, n);
    } catch (const std::overflow_error&) {
        throw ResourceLimitError("field order overflows");
    }
    if (order_ > limits.field_order)
        throw ResourceLimitError("field order " + std::to_string(order_) + " exceeds the field_order cap");
    factors_ = prime_factors(order_ - 1);

    if (n == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::uint64_t code = 0; code < order_; ++code) {
            std::vector<std::uint32_t> candidate(n + 1, 0);
            auto rest = code;
            for (unsigned i = n; i-- > 0;) {
                candidate[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            candidate[n] = 1;
            if (is_irreducible(candidate, p)) {
                modulus_ = std::move(candidate);
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
    }

    for (std::uint64_t idx = 1; idx < order_; ++idx) {
        auto x = element_at(idx);
        if (multiplicative_order(x) == order_ - 1) {
            primitive_ = std::move(x);
            break;
        }
    }
}

FieldElement FiniteField::zero() const { return {std::vector<std::uint32_t>(n_, 0)}; }

FieldElement FiniteField::one() const { return constant(1); }

FieldElement FiniteField::constant(std::uint64_t c) const {
    auto out = zero();
    out.coeffs[0] = static_cast<std::uint32_t>(c % p_);
    return out;
}

FieldElement FiniteField::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = static_cast<std::uint32_t>((x.coeffs[i] + static_cast<std::uint64_t>(y.coeffs[i])) % p_);
    return out;
}

FieldElement FiniteField::sub(const FieldElement& x, const FieldElement& y) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < n_; ++i)
        out.coeffs[i] = static_cast<std::uint32_t>((x.coeffs[i] + p_ - y.coeffs[i]) % p_);
    return out;
}

FieldElement FiniteField::mul(const FieldElement& x, const FieldElement& y) const {
    const auto product = poly_mod(poly_mul(widen(x.coeffs), widen(y.coeffs), p_), widen(modulus_), p_);
    FieldElement out = zero();
    for (std::size_t i = 0; i < product.size(); ++i) out.coeffs[i] = static_cast<std::uint32_t>(product[i]);
    return out;
}

FieldElement FiniteField::pow(const FieldElement& x, std::uint64_t e) const {
    FieldElement result = one();
    FieldElement base = x;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FiniteField::inverse(const FieldElement& x) const {
    if (is_zero(x)) throw std::invalid_argument("zero has no inverse");
    return pow(x, order_ - 2);
}

bool FiniteField::is_zero(const FieldElement& x) const {
    return std::ranges::all_of(x.coeffs, [](auto c) { return c == 0; });
}

bool FiniteField::is_one(const FieldElement& x) const { return x == one(); }

std::uint64_t FiniteField::multiplicative_order(const FieldElement& x) const {
    if (is_zero(x)) throw std::invalid_argument("zero has no multiplicative order");
    auto e = order_ - 1;
    for (auto r : factors_)
        while (e % r == 0 && is_one(pow(x, e / r))) e /= r;
    return e;
}

std::uint64_t FiniteField::index_of(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n_; ++i) idx = idx * p_ + x.coeffs[i];
    return idx;
}

FieldElement FiniteField::element_at(std::uint64_t index) const {
    FieldElement out = zero();
    for (unsigned i = n_; i-- > 0;) {
        out.coeffs[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return out;
}

std::string FiniteField::polynomial_string(const std::vector<std::uint32_t>& coeffs) const {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const auto c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        const bool show_coeff = c != 1 || i == 0;
        if (show_coeff) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace ddc
