#include "symsing/numeric.hpp"

#include <cctype>

namespace symsing {

std::string to_fraction_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_text(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Integer ipow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace symsing
