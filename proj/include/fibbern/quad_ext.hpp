#ifndef FIBBERN_QUAD_EXT_HPP
#define FIBBERN_QUAD_EXT_HPP

#include <compare>
#include <string>

#include <fibbern/rational.hpp>

namespace fibbern
{

// Element rat + irr*sqrt(5) of the quadratic field Q(sqrt 5).
//
// Equality is componentwise; there is no tolerance anywhere.
class QuadExt
{
public:
    QuadExt() = default;
    QuadExt(const Rational &rat) : m_rat(rat) {}
    QuadExt(long v) : m_rat(v) {}
    QuadExt(int v) : m_rat(v) {}
    QuadExt(Rational rat, Rational irr) : m_rat(std::move(rat)), m_irr(std::move(irr)) {}

    const Rational &rat() const { return m_rat; }
    const Rational &irr() const { return m_irr; }

    bool is_zero() const { return m_rat.is_zero() && m_irr.is_zero(); }
    bool is_rational() const { return m_irr.is_zero(); }

    QuadExt conj() const { return {m_rat, -m_irr}; }
    // rat^2 - 5 irr^2
    Rational norm() const;
    // Throws std::domain_error for zero.
    QuadExt inverse() const;
    // Non-negative or negative exponent; negative exponents invert first.
    QuadExt pow(long k) const;

    // Text form "p/q + (r/s)√5" with zero components suppressed.
    std::string to_string() const;

    QuadExt operator-() const { return {-m_rat, -m_irr}; }

    QuadExt &operator+=(const QuadExt &o)
    {
        m_rat += o.m_rat;
        m_irr += o.m_irr;
        return *this;
    }
    QuadExt &operator-=(const QuadExt &o)
    {
        m_rat -= o.m_rat;
        m_irr -= o.m_irr;
        return *this;
    }
    QuadExt &operator*=(const QuadExt &o);
    QuadExt &operator*=(const Rational &o)
    {
        m_rat *= o;
        m_irr *= o;
        return *this;
    }
    QuadExt &operator/=(const QuadExt &o) { return *this *= o.inverse(); }
    QuadExt &operator/=(const Rational &o);

    friend QuadExt operator+(QuadExt a, const QuadExt &b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt &b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt &b) { return a *= b; }
    friend QuadExt operator*(QuadExt a, const Rational &b) { return a *= b; }
    friend QuadExt operator*(const Rational &a, QuadExt b) { return b *= a; }
    friend QuadExt operator/(QuadExt a, const QuadExt &b) { return a /= b; }
    friend QuadExt operator/(QuadExt a, const Rational &b) { return a /= b; }

    friend bool operator==(const QuadExt &a, const QuadExt &b) = default;
    // Lexicographic on (rat, irr); a total order for sorting, not the real order.
    friend std::strong_ordering operator<=>(const QuadExt &a, const QuadExt &b)
    {
        if (auto c = a.m_rat <=> b.m_rat; c != 0) {
            return c;
        }
        return a.m_irr <=> b.m_irr;
    }

private:
    Rational m_rat;
    Rational m_irr;
};

QuadExt quad_mul(const QuadExt &a, const QuadExt &b);
// a^k by repeated squaring, a^0 = 1.
QuadExt quad_pow(const QuadExt &a, unsigned long k);
QuadExt quad_conj(const QuadExt &a);

// Golden ratio (1 + sqrt 5)/2 and its conjugate.
const QuadExt &golden_alpha();
const QuadExt &golden_beta();
const QuadExt &sqrt5();

} // namespace fibbern

#endif
