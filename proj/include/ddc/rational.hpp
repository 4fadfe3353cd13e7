#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ddc {

/// Non-negative rational distance bound num/den in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Accepts "7", "2.5", "7/2".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// distance <= r where distance = sqrt(squared)
    bool admits_squared(std::int64_t squared) const;
    /// distance <= r for an integer distance
    bool admits(std::int64_t distance) const;

    std::string to_string() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ddc
