#include "tapn/rational.h"

#include <cstdlib>
#include <stdexcept>

namespace tapn {

std::string to_string(const Rational& value) {
    std::int64_t den = value.denominator();
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1 || twos > 18 || fives > 18) {
        return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
    }
    const int digits = std::max(twos, fives);
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // value * scale is an integer
    const std::int64_t scaled = value.numerator() * (scale / value.denominator());
    const bool negative = scaled < 0;
    const std::int64_t magnitude = negative ? -scaled : scaled;
    std::string out = std::to_string(magnitude / scale);
    if (digits > 0) {
        std::string frac = std::to_string(magnitude % scale);
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash != std::string::npos) {
        const std::int64_t num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("bad rational: " + text);
        const std::string rest = text.substr(slash + 1);
        const std::int64_t den = std::stoll(rest, &used);
        if (used != rest.size() || den == 0) throw std::invalid_argument("bad rational: " + text);
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        const std::int64_t whole = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
        return Rational(whole);
    }
    const bool negative = text[0] == '-';
    const std::string int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    const std::string frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 18) throw std::invalid_argument("bad rational: " + text);
    for (char c : int_part + frac_part) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + text);
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : std::stoll(int_part);
    Rational result = Rational(whole) + Rational(std::stoll(frac_part), scale);
    return negative ? -result : result;
}

} // namespace tapn
