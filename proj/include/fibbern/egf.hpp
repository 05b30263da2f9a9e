#ifndef FIBBERN_EGF_HPP
#define FIBBERN_EGF_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fibbern/quad_ext.hpp>

namespace fibbern
{

// Raised when a coefficient beyond the valid range of a series is requested.
class TruncationError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Truncated Laurent exponential generating series over Q(sqrt 5):
//
//     p2 z^-2 + p1 z^-1 + sum_{n=0}^{N} a_n z^n / n!
//
// The principal part is stored raw, the regular part in EGF normalization.
// Only a_0..a_N are known; N is carried by the value and shrinks under
// multiplication by a series with a pole.
class LaurentEgf
{
public:
    LaurentEgf() = default;
    // principal[0] multiplies z^-2, principal[1] multiplies z^-1.
    LaurentEgf(std::array<QuadExt, 2> principal, std::vector<QuadExt> coeffs);

    long order() const { return static_cast<long>(m_coeffs.size()) - 1; }
    // 0, 1 or 2
    int pole_order() const;
    const std::array<QuadExt, 2> &principal() const { return m_principal; }
    const std::vector<QuadExt> &coeffs() const { return m_coeffs; }

    friend bool operator==(const LaurentEgf &a, const LaurentEgf &b) = default;

private:
    std::array<QuadExt, 2> m_principal{};
    std::vector<QuadExt> m_coeffs;
};

enum class Hyperbolic { sinh, cosh, tanh, coth, inv_sinh_sq, inv_cosh_sq };

LaurentEgf egf_from_coefficients(std::vector<QuadExt> coeffs);
// e^{cz}: a_n = c^n.
LaurentEgf egf_exp(const QuadExt &c, long order);
// kind(c z). coth and 1/sinh^2 carry the poles 1/(cz) and 1/(cz)^2. The
// tanh, coth and inverse-square kinds reject c = 0.
LaurentEgf egf_hyperbolic(Hyperbolic kind, const QuadExt &c, long order);
// c z^power for power >= -2.
LaurentEgf egf_monomial(const QuadExt &c, int power, long order);
// Exponential generating series of (F_{jn})_{n>=0} and (L_{jn})_{n>=0}.
LaurentEgf egf_fibonacci(long j, long order);
LaurentEgf egf_lucas(long j, long order);

// Cauchy product with binomial weights. The result is valid up to
// min(N_a - pole(b), N_b - pole(a)). Poles deeper than z^-2 that do not
// cancel raise std::domain_error.
LaurentEgf egf_mul(const LaurentEgf &a, const LaurentEgf &b);
LaurentEgf egf_add(const LaurentEgf &a, const LaurentEgf &b);
LaurentEgf egf_scale(const LaurentEgf &a, const QuadExt &c);

inline LaurentEgf operator*(const LaurentEgf &a, const LaurentEgf &b) { return egf_mul(a, b); }
inline LaurentEgf operator+(const LaurentEgf &a, const LaurentEgf &b) { return egf_add(a, b); }
inline LaurentEgf operator-(const LaurentEgf &a, const LaurentEgf &b)
{
    return egf_add(a, egf_scale(b, QuadExt(-1)));
}
inline LaurentEgf operator*(const QuadExt &c, const LaurentEgf &a) { return egf_scale(a, c); }

// a_n for n >= 0 (EGF-normalized); the raw z^-1 / z^-2 entries for n = -1, -2.
// Throws TruncationError outside [-2, order].
QuadExt egf_coeff(const LaurentEgf &s, long n);

enum class FunctionalEquation { EGF_F_SQ, EGF_L_SQ, FL_ID, TANH_FORM, COTH_FORM, H_RELATION };

std::string_view functional_equation_name(FunctionalEquation eq);
std::optional<FunctionalEquation> parse_functional_equation(std::string_view name);

struct SeriesVerdict {
    FunctionalEquation equation{};
    long j = 1;
    long order = 0;
    bool confirmed = false;
    // Lowest index (-2, -1, 0, ...) where the two sides differ.
    std::optional<long> first_mismatch;
    LaurentEgf lhs;
    LaurentEgf rhs;
};

// Builds both sides of a generating-function identity from independent
// ingredients and compares every coefficient through `order`. The left side
// always starts from the sequence series; the right side only from
// egf_exp / egf_hyperbolic. H_RELATION additionally needs x.
SeriesVerdict check_functional_equation(FunctionalEquation eq, long j, long order,
                                        const std::optional<QuadExt> &x = std::nullopt);

} // namespace fibbern

#endif
