#ifndef FIBBERN_RATIONAL_HPP
#define FIBBERN_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibbern
{

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
//
// Backed by GMP's mpq_t. Every constructor canonicalizes, and GMP keeps
// arithmetic results canonical, so two Rationals are equal exactly when
// their numerators and denominators are.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(int v) : m_value(static_cast<long>(v)) {}
    Rational(const BigInt &v) : m_value(v) {}
    Rational(const BigInt &num, const BigInt &den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    // Parses "p" or "p/q" (optional leading minus sign, decimal digits).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return BigInt(m_value.get_num()); }
    BigInt denominator() const { return BigInt(m_value.get_den()); }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    Rational inverse() const;
    Rational pow(long k) const;

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const { return m_value.get_str(); }

    const mpq_class &raw() const { return m_value; }

    Rational operator-() const
    {
        Rational r;
        mpq_neg(r.m_value.get_mpq_t(), m_value.get_mpq_t());
        return r;
    }

    Rational &operator+=(const Rational &o)
    {
        mpq_add(m_value.get_mpq_t(), m_value.get_mpq_t(), o.m_value.get_mpq_t());
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        mpq_sub(m_value.get_mpq_t(), m_value.get_mpq_t(), o.m_value.get_mpq_t());
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        mpq_mul(m_value.get_mpq_t(), m_value.get_mpq_t(), o.m_value.get_mpq_t());
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return mpq_equal(a.m_value.get_mpq_t(), b.m_value.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value;
};

// (-1)^k as a small integer.
inline int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace fibbern

#endif
