#include <fibbern/rational.hpp>

#include <stdexcept>
#include <string>

namespace fibbern
{

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero rational");
    }
    Rational r;
    mpq_inv(r.m_value.get_mpq_t(), m_value.get_mpq_t());
    return r;
}

Rational Rational::pow(long k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    mpq_div(m_value.get_mpq_t(), m_value.get_mpq_t(), o.m_value.get_mpq_t());
    return *this;
}

} // namespace fibbern
