#include <fibbern/quad_ext.hpp>

#include <stdexcept>

namespace fibbern
{

QuadExt &QuadExt::operator*=(const QuadExt &o)
{
    if (m_irr.is_zero() && o.m_irr.is_zero()) {
        m_rat *= o.m_rat;
        return *this;
    }
    if (o.m_irr.is_zero()) {
        m_rat *= o.m_rat;
        m_irr *= o.m_rat;
        return *this;
    }
    if (m_irr.is_zero()) {
        m_irr = m_rat * o.m_irr;
        m_rat *= o.m_rat;
        return *this;
    }
    // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r
    Rational rat = m_rat * o.m_rat + Rational(5) * (m_irr * o.m_irr);
    Rational irr = m_rat * o.m_irr + m_irr * o.m_rat;
    m_rat = std::move(rat);
    m_irr = std::move(irr);
    return *this;
}

QuadExt &QuadExt::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero in Q(sqrt 5)");
    }
    const Rational inv = o.inverse();
    m_rat *= inv;
    m_irr *= inv;
    return *this;
}

Rational QuadExt::norm() const { return m_rat * m_rat - Rational(5) * (m_irr * m_irr); }

QuadExt QuadExt::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero in Q(sqrt 5)");
    }
    // The norm of a nonzero element is nonzero because sqrt 5 is irrational.
    const Rational n = norm();
    return {m_rat / n, -m_irr / n};
}

QuadExt QuadExt::pow(long k) const
{
    if (k < 0) {
        return quad_pow(inverse(), static_cast<unsigned long>(-k));
    }
    return quad_pow(*this, static_cast<unsigned long>(k));
}

std::string QuadExt::to_string() const
{
    if (m_irr.is_zero()) {
        return m_rat.to_string();
    }
    std::string irr = "(" + m_irr.to_string() + ")√5";
    if (m_rat.is_zero()) {
        return irr;
    }
    return m_rat.to_string() + " + " + irr;
}

QuadExt quad_mul(const QuadExt &a, const QuadExt &b) { return a * b; }

QuadExt quad_pow(const QuadExt &a, unsigned long k)
{
    QuadExt result(1);
    QuadExt base = a;
    while (k != 0) {
        if (k & 1UL) {
            result *= base;
        }
        k >>= 1;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

QuadExt quad_conj(const QuadExt &a) { return a.conj(); }

const QuadExt &golden_alpha()
{
    static const QuadExt v(Rational(1, 2), Rational(1, 2));
    return v;
}

const QuadExt &golden_beta()
{
    static const QuadExt v(Rational(1, 2), Rational(-1, 2));
    return v;
}

const QuadExt &sqrt5()
{
    static const QuadExt v(Rational(0), Rational(1));
    return v;
}

} // namespace fibbern
