#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddc/configuration.hpp"
#include "ddc/limits.hpp"

namespace ddc {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficient tuple in H_k: entries sum to zero, positive entries sum to k.
struct HTuple {
    std::vector<std::int64_t> coeffs;
    int level = 0;

    friend bool operator==(const HTuple&, const HTuple&) = default;
    friend auto operator<=>(const HTuple&, const HTuple&) = default;
};

/// Level of an integer tuple with zero sum: the sum of its positive entries.
/// Returns nullopt when the entries do not sum to zero.
std::optional<int> h_level(std::span<const std::int64_t> coeffs);

/// Non-zero vectors that are sums of at most k difference vectors, sorted.
std::vector<Vec2> k_hop_set(const Configuration& config, int k);

struct CoverageReport {
    int k = 0;
    std::uint64_t coverage = 0;
    std::vector<Vec2> reachable;
    BigInt max_bound = 0;
    BigInt min_bound = 0;
    bool is_maximal = false;
    bool is_minimal = false;
};

CoverageReport k_hop_coverage(const Configuration& config, int k);

/// |H_k| for m-tuples; 1 for k = 0.
BigInt h_set_size(int m, int k);

/// Visits H_k in lexicographic order; the callback returns false to stop.
/// Returns false iff stopped early.
bool for_each_h_tuple(int m, int k, const std::function<bool(std::span<const std::int64_t>)>& visit);

/// Full lexicographically sorted H_k. Throws ResourceLimitError above limits.h_tuples.
std::vector<HTuple> enumerate_h(int m, int k, const Limits& limits = Limits::defaults());

BigInt max_coverage_bound(int m, int k);
BigInt min_coverage_bound(int m, int k);

/// Abelian group hosting a B_h test. Elements are Vec2; ZMod uses only x.
struct AmbientGroup {
    enum class Kind { ZSquared, ZMod, ZModPair };
    Kind kind = Kind::ZSquared;
    std::int64_t n = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;

    static AmbientGroup z_squared() { return {}; }
    static AmbientGroup z_mod(std::int64_t n);
    static AmbientGroup z_mod_pair(std::int64_t a, std::int64_t b);

    Vec2 reduce(Vec2 v) const;
};

/// Two distinct index multisets (non-decreasing index lists of length h) with equal sums.
struct BhCollision {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

struct BhVerdict {
    bool is_bh = true;
    std::optional<BhCollision> collision;
    explicit operator bool() const { return is_bh; }
};

BhVerdict is_b_h_sequence(std::span<const Vec2> elements, int h, const AmbientGroup& group,
                          const Limits& limits = Limits::defaults());

struct MaximalCoverageVerdict {
    bool maximal = false;
    bool bh_verdict = false;
    /// Absent when the H-tuple check exceeded limits and was skipped.
    std::optional<bool> tuple_verdict;
    bool fallback = false;
    std::optional<BhCollision> collision;
    /// Coefficients c with sum c_i v_i = 0, when the tuple check found one.
    std::optional<std::vector<std::int64_t>> vanishing_tuple;
};

/// Checks both the B_{2k} criterion over Z^2 and the vanishing-combination
/// criterion over H_1..H_{2k}. Throws std::logic_error if they disagree.
MaximalCoverageVerdict is_maximal_coverage(const Configuration& config, int k,
                                           const Limits& limits = Limits::defaults());

/// Direct vanishing-combination test: true iff no c in H_1..H_{2k} has sum c_i v_i = 0.
/// Throws ResourceLimitError when the tuple count exceeds limits.h_tuples.
bool no_vanishing_combination(const Configuration& config, int k, const Limits& limits,
                              std::vector<std::int64_t>* witness = nullptr);

bool is_perfect_golomb_equivalent(const Configuration& config);

/// Difference set {x - y : x, y in marks} equals {-L..L}, L = m(m-1)/2.
bool is_perfect_golomb_ruler(std::span<const std::int64_t> marks);

}  // namespace ddc
