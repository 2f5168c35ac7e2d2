#include "rvis/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <cctype>
#include <stdexcept>

namespace rvis {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    bool negative = false;
    if (digits.front() == '-' || digits.front() == '+') {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt ceil(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

ScaledIntegers scale_to_integers(std::span<const Rational> values) {
    BigInt lcm = 1;
    for (const auto& v : values) {
        lcm = boost::integer::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
    }
    ScaledIntegers out;
    out.denominator = lcm;
    out.scaled.reserve(values.size());
    for (const auto& v : values) {
        out.scaled.push_back(boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v)));
    }
    return out;
}

std::optional<std::vector<std::int64_t>> scale_to_int64(std::span<const Rational> values,
                                                        BigInt* denominator) {
    ScaledIntegers s = scale_to_integers(values);
    BigInt total = 0;
    for (const auto& x : s.scaled) total += abs(x);
    if (total >= (BigInt(1) << 62)) return std::nullopt;
    std::vector<std::int64_t> out;
    out.reserve(s.scaled.size());
    for (const auto& x : s.scaled) out.push_back(x.convert_to<std::int64_t>());
    if (denominator) *denominator = s.denominator;
    return out;
}

}  // namespace rvis
