#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace psl {

/// Exact rational number backed by int64 parts, normalized so den > 0 and
/// gcd(|num|, den) = 1. Used to make boundary comparisons exact when
/// parameters arrive as decimal strings.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// Parses a plain decimal literal like "-1.25" or "0.4". Returns nullopt
    /// for anything else (exponents, too many digits, garbage); callers then
    /// fall back to floating-point comparisons.
    static std::optional<Rational> from_decimal(std::string_view text);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
};

/// Sign of a - b, computed exactly.
int compare(const Rational& a, const Rational& b);

}  // namespace psl
