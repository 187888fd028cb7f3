#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace srg {

struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    bool complete() const { return n == k + 1; }
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

/// Range invariants: n >= 1, 0 <= k < n, 0 <= lambda <= k-1, 0 <= mu <= k.
bool in_range(const SrgParams& p);

/// k(k - lambda - 1) == (n - k - 1) mu, or n == k + 1.
bool check_identity(const SrgParams& p);

/// Order of the lambda = 1, mu = 2 family member of valency k. Throws
/// InputError for odd k or k < 2.
std::int64_t family_order(std::int64_t k);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_integer() const { return den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// (twice_rational + sign * sqrt(radicand)) / 2, kept unevaluated.
struct QuadraticSurd {
    std::int64_t twice_rational = 0;
    int sign = 1;
    std::int64_t radicand = 0;

    /// Integer value if the surd is rational and integral.
    std::optional<std::int64_t> as_integer() const;
    std::string str() const;
};

struct Spectrum {
    std::int64_t discriminant = 0;       ///< (lambda - mu)^2 + 4(k - mu)
    std::int64_t numerator = 0;          ///< 2k + (n - 1)(lambda - mu)
    bool discriminant_square = false;
    QuadraticSurd r;                     ///< larger restricted eigenvalue
    QuadraticSurd s;                     ///< smaller restricted eigenvalue
    std::optional<Rational> f;           ///< multiplicity of r, when rational
    std::optional<Rational> g;           ///< multiplicity of s, when rational
    bool integral = false;
};

/// Throws InputError when the parameters are out of range or fail the
/// counting identity.
Spectrum spectrum_of(const SrgParams& p);

enum class VerdictReason {
    ok,
    non_square_discriminant_with_nonzero_numerator,
    non_integer_multiplicity,
    identity_violation,
};

std::string_view to_string(VerdictReason r);

struct FeasibilityVerdict {
    SrgParams params;
    bool passes_integrality = false;
    VerdictReason reason = VerdictReason::identity_violation;
};

FeasibilityVerdict integrality_test(const SrgParams& p);

/// Every k <= k_max admitting an integer n for the given lambda, mu, each with
/// its verdict, ascending in k. For mu = 0 only the complete order n = k + 1 is
/// listed.
std::vector<FeasibilityVerdict> enumerate_family(std::int64_t lambda, std::int64_t mu, std::int64_t k_max);

struct ExpectedCounts {
    std::int64_t triangles = 0;
    std::int64_t triangles_per_vertex = 0;
    /// |A|, |B|, |C|, |W| of a triangle-anchored partition; only defined for
    /// lambda = 1, where the three neighbor classes are disjoint.
    std::optional<std::array<std::int64_t, 4>> partition;
};

/// Throws InputError when lambda < 1 or when nk*lambda/6 or k*lambda/2 is not
/// an integer.
ExpectedCounts expected_counts(const SrgParams& p);

nlohmann::json to_json(const SrgParams& p);
nlohmann::json to_json(const FeasibilityVerdict& v);
nlohmann::json to_json(const std::vector<FeasibilityVerdict>& verdicts);

} // namespace srg
