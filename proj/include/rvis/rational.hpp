#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rvis {

/// Exact arbitrary-precision rational. All guarantee arithmetic goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

/// Common-denominator scaling of a rational vector: values[i] == scaled[i] / denominator.
struct ScaledIntegers {
    std::vector<BigInt> scaled;
    BigInt denominator;
};

ScaledIntegers scale_to_integers(std::span<const Rational> values);

/// Same as scale_to_integers but narrowed to int64; std::nullopt when the sum of the
/// scaled values would not fit in 62 bits.
std::optional<std::vector<std::int64_t>> scale_to_int64(std::span<const Rational> values,
                                                        BigInt* denominator = nullptr);

}  // namespace rvis
