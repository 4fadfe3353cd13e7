#include "ddc/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ddc {

namespace {

std::int64_t parse_digits(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw std::invalid_argument("invalid distance '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("distance denominator must be positive");
    if (num < 0) throw std::invalid_argument("distance must be non-negative");
    const auto g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return {parse_digits(text.substr(0, slash), text), parse_digits(text.substr(slash + 1), text)};
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if (frac_part.size() > 12) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        const auto whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        const auto frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
        return {whole * den + frac, den};
    }
    return {parse_digits(text, text), 1};
}

bool Rational::admits_squared(std::int64_t squared) const {
    // squared <= (num/den)^2  <=>  squared * den^2 <= num^2
    return static_cast<__int128>(squared) * den_ * den_ <= static_cast<__int128>(num_) * num_;
}

bool Rational::admits(std::int64_t distance) const {
    return static_cast<__int128>(distance) * den_ <= num_;
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace ddc
