#include "ddc/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ddc {

Limits Limits::parse(std::string_view text) {
    Limits limits;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("DDC_CAPS entry without '=': " + std::string(item));
        const auto key = item.substr(0, eq);
        const auto digits = item.substr(eq + 1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw std::invalid_argument("DDC_CAPS value is not an unsigned integer: " + std::string(item));
        if (key == "h_tuples") limits.h_tuples = value;
        else if (key == "bh_sums") limits.bh_sums = value;
        else if (key == "field_order") limits.field_order = value;
        else if (key == "dlog_table") limits.dlog_table = value;
        else if (key == "grid_entries") limits.grid_entries = value;
        else if (key == "render_cells") limits.render_cells = value;
        else if (key == "shift_search") limits.shift_search = value;
        else throw std::invalid_argument("unknown DDC_CAPS key: " + std::string(key));
    }
    return limits;
}

Limits Limits::from_env() {
    const char* env = std::getenv("DDC_CAPS");
    return env ? parse(env) : defaults();
}

}  // namespace ddc
