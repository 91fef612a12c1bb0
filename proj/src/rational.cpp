#include "axial/rational.hpp"

#include "axial/error.hpp"

#include <cctype>

namespace axial {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!all_digits(den))
            throw input_error("invalid rational '" + std::string(text) + "'");
    }
    if (!all_digits(num))
        throw input_error("invalid rational '" + std::string(text) + "'");

    Integer n{std::string(num)};
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
    if (d == 0)
        throw input_error("zero denominator in rational '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n) / Rational(d);
}

std::string rational_str(const Rational& value)
{
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

} // namespace axial
