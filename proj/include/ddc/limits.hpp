#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ddc {

/// Raised when an enumeration or table would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Desk-scale guardrails. Overridable through DDC_CAPS, e.g.
/// DDC_CAPS="h_tuples=1000000,bh_sums=5000000".
struct Limits {
    std::uint64_t h_tuples = 10'000'000;      // |H_k| enumerated at once
    std::uint64_t bh_sums = 10'000'000;       // C(m+h-1, h) multiset sums
    std::uint64_t field_order = 1ULL << 40;   // p^n for factorisation of p^n - 1
    std::uint64_t dlog_table = 1ULL << 22;    // discrete-log table entries
    std::uint64_t grid_entries = 50'000'000;  // W*H*m key assignments
    std::uint64_t render_cells = 10'000;
    std::uint64_t shift_search = 200'000'000; // a*b*|disc| membership probes

    static Limits defaults() { return {}; }
    /// Parses a comma-separated key=value list on top of the defaults.
    static Limits parse(std::string_view text);
    /// defaults() overridden by the DDC_CAPS environment variable when set.
    static Limits from_env();
};

}  // namespace ddc
