// SPDX-License-Identifier: Apache-2.0
#include "lamlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParameterError("malformed number '" + std::string(whole) + "'");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParameterError("malformed number '" + std::string(whole) + "'");
        }
    }
    // cpp_int reads a leading 0 as an octal prefix.
    const std::size_t nz = text.find_first_not_of('0');
    return nz == std::string_view::npos ? BigInt(0) : BigInt(std::string(text.substr(nz)));
}

BigInt pow10(unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= 10;
    }
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), whole);
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) {
            throw ParameterError("zero denominator in '" + std::string(whole) + "'");
        }
        value = Rational(num, den);
    } else {
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            BigInt ev = parse_integer(exp_text, whole);
            if (ev > 4000) {
                throw ParameterError("exponent out of range in '" + std::string(whole) + "'");
            }
            exponent = ev.convert_to<long>();
            if (exp_negative) exponent = -exponent;
            text = text.substr(0, e);
        }
        std::string digits;
        long frac_digits = 0;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view int_part = text.substr(0, dot);
            std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) {
                throw ParameterError("malformed number '" + std::string(whole) + "'");
            }
            digits = std::string(int_part) + std::string(frac_part);
            frac_digits = static_cast<long>(frac_part.size());
        } else {
            digits = std::string(text);
        }
        BigInt mantissa = parse_integer(digits, whole);
        long scale = exponent - frac_digits;
        if (scale >= 0) {
            value = Rational(mantissa * pow10(static_cast<unsigned>(scale)));
        } else {
            value = Rational(mantissa, pow10(static_cast<unsigned>(-scale)));
        }
    }
    return negative ? Rational(-value) : value;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw ParameterError("non-finite coordinate");
    }
    int exp = 0;
    double mant = std::frexp(value, &exp);
    // 53 significant bits make the scaled mantissa an exact integer.
    auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp > 0) {
        r *= Rational(BigInt(1) << exp);
    } else if (exp < 0) {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    BigInt rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) {
        return num.str() + "/" + den.str();
    }
    const unsigned digits = std::max(twos, fives);
    BigInt scaled = num * (pow10(digits) / den);
    const bool negative = scaled < 0;
    std::string s = (negative ? BigInt(-scaled) : scaled).str();
    if (s.size() <= digits) {
        s.insert(0, digits - s.size() + 1, '0');
    }
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

} // namespace lamlab
