#include "pokertopo/rational.hpp"

#include <cctype>

#include "pokertopo/cards.hpp"

namespace pokertopo {

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& q, int digits) {
    BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const BigInt scaled = (num * scale * 2 + den) / (den * 2);
    std::string s = scaled.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(std::string_view s) {
    const std::string str(s);
    if (str.empty()) throw ParseError("empty number");
    try {
        if (auto slash = str.find('/'); slash != std::string::npos) {
            BigInt n(str.substr(0, slash));
            BigInt d(str.substr(slash + 1));
            if (d == 0) throw ParseError("zero denominator in '" + str + "'");
            return Rational(n, d);
        }
        if (auto dot = str.find('.'); dot != std::string::npos) {
            std::string digits = str.substr(0, dot) + str.substr(dot + 1);
            if (digits.empty() || digits == "-") throw ParseError("bad number '" + str + "'");
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < str.size(); ++i) den *= 10;
            return Rational(BigInt(digits), den);
        }
        return Rational(BigInt(str));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + str + "'");
    }
}

}  // namespace pokertopo
