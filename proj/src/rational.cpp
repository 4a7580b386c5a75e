#include "wbcsp/rational.hpp"

#include "wbcsp/errors.hpp"

#include <cctype>

namespace wbcsp {

namespace {

bool is_decimal(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t start = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    size_t slash = text.find('/', start);
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!is_decimal(text, start, text.size()))
            throw PreconditionError("not a rational: '" + text + "'");
        num = BigInt(text.substr(start));
    } else {
        if (!is_decimal(text, start, slash) || !is_decimal(text, slash + 1, text.size()))
            throw PreconditionError("not a rational: '" + text + "'");
        num = BigInt(text.substr(start, slash - start));
        den = BigInt(text.substr(slash + 1));
        if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
    Rational result(1);
    Rational acc = base;
    while (exponent > 0) {
        if (exponent & 1) result *= acc;
        exponent >>= 1;
        if (exponent) acc *= acc;
    }
    return result;
}

BigInt pow2(unsigned n) {
    BigInt one = 1;
    return one << n;
}

}  // namespace wbcsp
