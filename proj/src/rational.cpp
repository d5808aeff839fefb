#include "mtq/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace mtq {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("cannot parse rational '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer root = boost::multiprecision::sqrt(n);
    if (root * root == n) return root;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = integer_sqrt_exact(numerator(r));
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(denominator(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

} // namespace mtq
