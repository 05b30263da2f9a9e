#ifndef FIBBERN_DENSE_POLY_HPP
#define FIBBERN_DENSE_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <fibbern/quad_ext.hpp>

namespace fibbern
{

// Dense univariate polynomial over Q(sqrt 5); coeffs()[k] is the coefficient of x^k.
//
// Trailing zero coefficients are trimmed on construction, so the zero
// polynomial has no coefficients and degree -1.
class DensePoly
{
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<QuadExt> coeffs);
    DensePoly(std::initializer_list<QuadExt> coeffs) : DensePoly(std::vector<QuadExt>(coeffs)) {}

    static DensePoly constant(const QuadExt &c);
    // c * x^k
    static DensePoly monomial(const QuadExt &c, unsigned k);
    static DensePoly identity() { return monomial(QuadExt(1), 1); }

    long degree() const { return static_cast<long>(m_coeffs.size()) - 1; }
    bool is_zero() const { return m_coeffs.empty(); }
    const std::vector<QuadExt> &coeffs() const { return m_coeffs; }
    // Coefficient of x^k, zero beyond the degree.
    QuadExt coeff(unsigned k) const;

    QuadExt operator()(const QuadExt &x) const;

    DensePoly operator-() const;
    DensePoly &operator+=(const DensePoly &o);
    DensePoly &operator-=(const DensePoly &o);
    DensePoly &operator*=(const QuadExt &c);

    friend DensePoly operator+(DensePoly a, const DensePoly &b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly &b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const QuadExt &c) { return a *= c; }
    friend DensePoly operator*(const QuadExt &c, DensePoly a) { return a *= c; }
    friend DensePoly operator*(const DensePoly &a, const DensePoly &b);

    friend bool operator==(const DensePoly &a, const DensePoly &b) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<QuadExt> m_coeffs;
};

// Horner evaluation.
QuadExt poly_eval(const DensePoly &p, const QuadExt &x);
// p(q(x)) by Horner's scheme in the polynomial ring.
DensePoly poly_compose(const DensePoly &p, const DensePoly &q);
// p(x + c)
DensePoly poly_shift(const DensePoly &p, const QuadExt &c);
// p(c x)
DensePoly poly_dilate(const DensePoly &p, const QuadExt &c);
DensePoly poly_pow(const DensePoly &p, unsigned k);

} // namespace fibbern

#endif
