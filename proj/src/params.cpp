#include "srg/params.hpp"

#include "srg/error.hpp"

#include <algorithm>
#include <cmath>

namespace srg {

namespace {

__extension__ typedef __int128 Wide;

std::optional<std::int64_t> exact_sqrt(std::int64_t x)
{
    if (x < 0)
        return std::nullopt;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    if (r * r != x)
        return std::nullopt;
    return r;
}

Rational reduce(Wide num, Wide den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

} // namespace

std::string to_string(const SrgParams& p)
{
    return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
           std::to_string(p.mu) + ")";
}

bool in_range(const SrgParams& p)
{
    return p.n >= 1 && p.k >= 0 && p.k < p.n && p.lambda >= 0 && p.lambda <= p.k - 1 && p.mu >= 0 && p.mu <= p.k;
}

bool check_identity(const SrgParams& p)
{
    if (p.complete())
        return true;
    const auto lhs = p.k * (p.k - p.lambda - 1);
    const auto rhs = (p.n - p.k - 1) * p.mu;
    return lhs == rhs;
}

std::int64_t family_order(std::int64_t k)
{
    if (k < 2 || k % 2 != 0)
        throw InputError("valency " + std::to_string(k) + " is infeasible for lambda = 1, mu = 2 (needs even k >= 2)");
    return k * (k - 2) / 2 + k + 1;
}

std::optional<std::int64_t> QuadraticSurd::as_integer() const
{
    const auto root = exact_sqrt(radicand);
    if (!root)
        return std::nullopt;
    const std::int64_t twice = twice_rational + sign * *root;
    if (twice % 2 != 0)
        return std::nullopt;
    return twice / 2;
}

std::string QuadraticSurd::str() const
{
    if (auto v = as_integer())
        return std::to_string(*v);
    return "(" + std::to_string(twice_rational) + (sign > 0 ? " + " : " - ") + "sqrt(" + std::to_string(radicand) +
           "))/2";
}

Spectrum spectrum_of(const SrgParams& p)
{
    if (!in_range(p))
        throw InputError("parameters " + to_string(p) + " are out of range");
    if (!check_identity(p))
        throw InputError("parameters " + to_string(p) + " violate k(k-lambda-1) = (n-k-1)mu");

    Spectrum sp;
    const std::int64_t diff = p.lambda - p.mu;
    sp.discriminant = diff * diff + 4 * (p.k - p.mu);
    sp.numerator = 2 * p.k + (p.n - 1) * diff;
    sp.r = QuadraticSurd{diff, +1, sp.discriminant};
    sp.s = QuadraticSurd{diff, -1, sp.discriminant};

    const auto root = exact_sqrt(sp.discriminant);
    sp.discriminant_square = root.has_value();
    if (root && *root > 0) {
        // f, g = ((n-1) root -/+ numerator) / (2 root)
        const Wide scaled = static_cast<Wide>(p.n - 1) * *root;
        sp.f = reduce(scaled - sp.numerator, 2 * static_cast<Wide>(*root));
        sp.g = reduce(scaled + sp.numerator, 2 * static_cast<Wide>(*root));
    } else if (sp.numerator == 0) {
        sp.f = reduce(p.n - 1, 2);
        sp.g = sp.f;
    }

    const auto usable = [](const std::optional<Rational>& m) { return m && m->is_integer() && m->num >= 0; };
    sp.integral = usable(sp.f) && usable(sp.g);
    return sp;
}

std::string_view to_string(VerdictReason r)
{
    switch (r) {
    case VerdictReason::ok: return "ok";
    case VerdictReason::non_square_discriminant_with_nonzero_numerator:
        return "non_square_discriminant_with_nonzero_numerator";
    case VerdictReason::non_integer_multiplicity: return "non_integer_multiplicity";
    case VerdictReason::identity_violation: return "identity_violation";
    }
    return "unknown";
}

FeasibilityVerdict integrality_test(const SrgParams& p)
{
    FeasibilityVerdict v{p, false, VerdictReason::identity_violation};
    if (!in_range(p) || !check_identity(p))
        return v;

    const Spectrum sp = spectrum_of(p);
    if (sp.integral) {
        v.passes_integrality = true;
        v.reason = VerdictReason::ok;
    } else if (!sp.discriminant_square && sp.numerator != 0) {
        v.reason = VerdictReason::non_square_discriminant_with_nonzero_numerator;
    } else {
        v.reason = VerdictReason::non_integer_multiplicity;
    }
    return v;
}

std::vector<FeasibilityVerdict> enumerate_family(std::int64_t lambda, std::int64_t mu, std::int64_t k_max)
{
    std::vector<FeasibilityVerdict> out;
    for (std::int64_t k = std::max<std::int64_t>(1, lambda + 1); k <= k_max; ++k) {
        if (mu > k)
            continue;
        const std::int64_t excess = k * (k - lambda - 1);
        std::int64_t n = 0;
        if (mu == 0) {
            if (excess != 0)
                continue;
            n = k + 1;
        } else {
            if (excess % mu != 0)
                continue;
            n = k + 1 + excess / mu;
        }
        out.push_back(integrality_test(SrgParams{n, k, lambda, mu}));
    }
    return out;
}

ExpectedCounts expected_counts(const SrgParams& p)
{
    if (p.lambda < 1)
        throw InputError("expected_counts needs lambda >= 1, got " + to_string(p));
    const std::int64_t nkl = p.n * p.k * p.lambda;
    const std::int64_t kl = p.k * p.lambda;
    if (nkl % 6 != 0)
        throw InputError("n*k*lambda = " + std::to_string(nkl) + " is not divisible by 6 for " + to_string(p));
    if (kl % 2 != 0)
        throw InputError("k*lambda = " + std::to_string(kl) + " is odd for " + to_string(p));

    ExpectedCounts c;
    c.triangles = nkl / 6;
    c.triangles_per_vertex = kl / 2;
    if (p.lambda == 1) {
        const std::int64_t cls = p.k - 2;
        c.partition = std::array<std::int64_t, 4>{cls, cls, cls, p.n - 3 - 3 * cls};
    }
    return c;
}

nlohmann::json to_json(const SrgParams& p)
{
    return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

nlohmann::json to_json(const FeasibilityVerdict& v)
{
    return {{"k", v.params.k},
            {"n", v.params.n},
            {"pass", v.passes_integrality},
            {"reason", std::string(to_string(v.reason))}};
}

nlohmann::json to_json(const std::vector<FeasibilityVerdict>& verdicts)
{
    auto arr = nlohmann::json::array();
    for (const auto& v : verdicts)
        arr.push_back(to_json(v));
    return arr;
}

} // namespace srg
