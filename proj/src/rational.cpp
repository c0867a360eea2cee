#include "psl/rational.hpp"

#include <cctype>
#include <numeric>

namespace psl {

namespace {

int sign_of(__int128 x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace

std::optional<Rational> Rational::from_decimal(std::string_view text) {
    std::size_t i = 0;
    std::int64_t sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }

    std::int64_t value = 0;
    int int_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++int_digits;
        ++i;
    }

    std::int64_t den = 1;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            den *= 10;
            ++frac_digits;
            ++i;
        }
    }

    // Plain decimals only, with room to spare against int64 overflow in the
    // cross-multiplied comparisons downstream.
    if (i != text.size()) return std::nullopt;
    if (int_digits + frac_digits == 0 || int_digits > 9 || frac_digits > 9) return std::nullopt;

    Rational r{sign * value, den};
    const std::int64_t g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

int compare(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return sign_of(lhs - rhs);
}

}  // namespace psl
