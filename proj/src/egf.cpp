#include <fibbern/egf.hpp>

#include <algorithm>
#include <array>
#include <utility>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/sequences.hpp>

namespace fibbern
{

LaurentEgf::LaurentEgf(std::array<QuadExt, 2> principal, std::vector<QuadExt> coeffs)
    : m_principal(std::move(principal)), m_coeffs(std::move(coeffs))
{
}

int LaurentEgf::pole_order() const
{
    if (!m_principal[0].is_zero()) {
        return 2;
    }
    return m_principal[1].is_zero() ? 0 : 1;
}

LaurentEgf egf_from_coefficients(std::vector<QuadExt> coeffs)
{
    return LaurentEgf({}, std::move(coeffs));
}

LaurentEgf egf_exp(const QuadExt &c, long order)
{
    std::vector<QuadExt> a(static_cast<std::size_t>(order + 1));
    QuadExt p(1);
    for (auto &v : a) {
        v = p;
        p *= c;
    }
    return egf_from_coefficients(std::move(a));
}

namespace
{

// 4^i B_{2i} / (2i), the common factor of the tanh/coth family.
Rational hyperbolic_factor(long i)
{
    return Rational(BigInt(1) << static_cast<mp_bitcnt_t>(2 * i)) * bernoulli_number(2 * i) / Rational(2 * i);
}

} // namespace

LaurentEgf egf_hyperbolic(Hyperbolic kind, const QuadExt &c, long order)
{
    if (c.is_zero() && kind != Hyperbolic::sinh && kind != Hyperbolic::cosh) {
        throw std::domain_error("egf_hyperbolic: c must be nonzero for this kind");
    }
    const std::size_t len = static_cast<std::size_t>(order + 1);
    std::vector<QuadExt> a(len);
    std::vector<QuadExt> cp(len);
    QuadExt p(1);
    for (auto &v : cp) {
        v = p;
        p *= c;
    }
    std::array<QuadExt, 2> principal{};

    switch (kind) {
    case Hyperbolic::sinh:
    case Hyperbolic::cosh: {
        const std::size_t start = (kind == Hyperbolic::sinh) ? 1 : 0;
        for (std::size_t m = start; m < len; m += 2) {
            a[m] = cp[m];
        }
        break;
    }
    case Hyperbolic::tanh:
    case Hyperbolic::coth: {
        if (kind == Hyperbolic::coth) {
            principal[1] = c.inverse();
        }
        for (long i = 1; 2 * i - 1 <= order; ++i) {
            Rational f = hyperbolic_factor(i);
            if (kind == Hyperbolic::tanh) {
                f *= Rational((BigInt(1) << static_cast<mp_bitcnt_t>(2 * i)) - 1);
            }
            a[static_cast<std::size_t>(2 * i - 1)] = cp[static_cast<std::size_t>(2 * i - 1)] * f;
        }
        break;
    }
    case Hyperbolic::inv_sinh_sq:
    case Hyperbolic::inv_cosh_sq: {
        if (kind == Hyperbolic::inv_sinh_sq) {
            principal[0] = (c * c).inverse();
        }
        for (long i = 1; 2 * i - 2 <= order; ++i) {
            Rational f = hyperbolic_factor(i);
            if (kind == Hyperbolic::inv_sinh_sq) {
                f = -f;
            } else {
                f *= Rational((BigInt(1) << static_cast<mp_bitcnt_t>(2 * i)) - 1);
            }
            a[static_cast<std::size_t>(2 * i - 2)] = cp[static_cast<std::size_t>(2 * i - 2)] * f;
        }
        break;
    }
    }
    return LaurentEgf(std::move(principal), std::move(a));
}

LaurentEgf egf_monomial(const QuadExt &c, int power, long order)
{
    if (power < -2) {
        throw std::domain_error("egf_monomial: power below -2");
    }
    std::array<QuadExt, 2> principal{};
    std::vector<QuadExt> a(static_cast<std::size_t>(std::max(order + 1, 0L)));
    if (power < 0) {
        principal[static_cast<std::size_t>(power + 2)] = c;
    } else if (power <= order) {
        // c z^k = (c k!) z^k / k!
        BigInt f = 1;
        for (int i = 2; i <= power; ++i) {
            f *= i;
        }
        a[static_cast<std::size_t>(power)] = c * Rational(f);
    }
    return LaurentEgf(std::move(principal), std::move(a));
}

LaurentEgf egf_fibonacci(long j, long order)
{
    std::vector<QuadExt> a;
    a.reserve(static_cast<std::size_t>(order + 1));
    for (long n = 0; n <= order; ++n) {
        a.emplace_back(Rational(fib(j * n)));
    }
    return egf_from_coefficients(std::move(a));
}

LaurentEgf egf_lucas(long j, long order)
{
    std::vector<QuadExt> a;
    a.reserve(static_cast<std::size_t>(order + 1));
    for (long n = 0; n <= order; ++n) {
        a.emplace_back(Rational(lucas(j * n)));
    }
    return egf_from_coefficients(std::move(a));
}

namespace
{

// Regular part of (principal of p) * (regular part of r), EGF-normalized at n:
// p1 r_{n+1}/(n+1) + p2 r_{n+2}/((n+1)(n+2)).
QuadExt pole_times_regular(const std::array<QuadExt, 2> &p, const std::vector<QuadExt> &r, long n)
{
    QuadExt acc;
    if (!p[1].is_zero()) {
        acc += p[1] * r[static_cast<std::size_t>(n + 1)] / Rational(n + 1);
    }
    if (!p[0].is_zero()) {
        acc += p[0] * r[static_cast<std::size_t>(n + 2)] / Rational((n + 1) * (n + 2));
    }
    return acc;
}

} // namespace

LaurentEgf egf_mul(const LaurentEgf &a, const LaurentEgf &b)
{
    const auto &pa = a.principal();
    const auto &pb = b.principal();
    if (!(pa[0] * pb[0]).is_zero() || !(pa[0] * pb[1] + pa[1] * pb[0]).is_zero()) {
        throw std::domain_error("egf_mul: pole of order above 2");
    }
    const long order = std::min(a.order() - b.pole_order(), b.order() - a.pole_order());
    if (order < 0) {
        throw TruncationError("egf_mul: no valid coefficients left");
    }
    const auto &ra = a.coeffs();
    const auto &rb = b.coeffs();

    std::array<QuadExt, 2> principal{};
    // z^-2 and z^-1 collect the principal products plus the leading regular terms.
    principal[0] = pa[0] * rb[0] + pa[1] * pb[1] + ra[0] * pb[0];
    principal[1] = pa[1] * rb[0] + ra[0] * pb[1];
    if (!pa[0].is_zero()) {
        principal[1] += pa[0] * rb[1];
    }
    if (!pb[0].is_zero()) {
        principal[1] += ra[1] * pb[0];
    }

    std::vector<QuadExt> c(static_cast<std::size_t>(order + 1));
    for (long n = 0; n <= order; ++n) {
        QuadExt acc;
        for (long k = 0; k <= n; ++k) {
            const auto &x = ra[static_cast<std::size_t>(k)];
            const auto &y = rb[static_cast<std::size_t>(n - k)];
            if (x.is_zero() || y.is_zero()) {
                continue;
            }
            acc += x * y * Rational(binomial(n, k));
        }
        acc += pole_times_regular(pa, rb, n);
        acc += pole_times_regular(pb, ra, n);
        c[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return LaurentEgf(std::move(principal), std::move(c));
}

LaurentEgf egf_add(const LaurentEgf &a, const LaurentEgf &b)
{
    const long order = std::min(a.order(), b.order());
    std::vector<QuadExt> c(static_cast<std::size_t>(order + 1));
    for (long n = 0; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = a.coeffs()[static_cast<std::size_t>(n)] + b.coeffs()[static_cast<std::size_t>(n)];
    }
    return LaurentEgf({a.principal()[0] + b.principal()[0], a.principal()[1] + b.principal()[1]}, std::move(c));
}

LaurentEgf egf_scale(const LaurentEgf &a, const QuadExt &s)
{
    std::vector<QuadExt> c = a.coeffs();
    for (auto &v : c) {
        v *= s;
    }
    return LaurentEgf({a.principal()[0] * s, a.principal()[1] * s}, std::move(c));
}

QuadExt egf_coeff(const LaurentEgf &s, long n)
{
    if (n < -2 || n > s.order()) {
        throw TruncationError("egf_coeff: index " + std::to_string(n) + " outside [-2, " +
                              std::to_string(s.order()) + "]");
    }
    if (n < 0) {
        return s.principal()[static_cast<std::size_t>(n + 2)];
    }
    return s.coeffs()[static_cast<std::size_t>(n)];
}

namespace
{

constexpr std::array<std::pair<FunctionalEquation, std::string_view>, 6> equation_names{{
    {FunctionalEquation::EGF_F_SQ, "EGF_F_SQ"},
    {FunctionalEquation::EGF_L_SQ, "EGF_L_SQ"},
    {FunctionalEquation::FL_ID, "FL_ID"},
    {FunctionalEquation::TANH_FORM, "TANH_FORM"},
    {FunctionalEquation::COTH_FORM, "COTH_FORM"},
    {FunctionalEquation::H_RELATION, "H_RELATION"},
}};

// H(x, sqrt5 F_j z) = sum_n B_n(x) (sqrt5 F_j)^n z^n/n!
LaurentEgf bernoulli_series(const QuadExt &x, const QuadExt &scale, long order)
{
    std::vector<QuadExt> a;
    a.reserve(static_cast<std::size_t>(order + 1));
    QuadExt p(1);
    for (long n = 0; n <= order; ++n) {
        a.push_back(bernoulli_poly_at(n, x) * p);
        p *= scale;
    }
    return egf_from_coefficients(std::move(a));
}

} // namespace

std::string_view functional_equation_name(FunctionalEquation eq)
{
    for (const auto &[e, name] : equation_names) {
        if (e == eq) {
            return name;
        }
    }
    return "?";
}

std::optional<FunctionalEquation> parse_functional_equation(std::string_view name)
{
    for (const auto &[e, n] : equation_names) {
        if (n == name) {
            return e;
        }
    }
    return std::nullopt;
}

SeriesVerdict check_functional_equation(FunctionalEquation eq, long j, long order, const std::optional<QuadExt> &x)
{
    if (j < 1) {
        throw std::invalid_argument("check_functional_equation: j must be positive");
    }
    if (order < 0) {
        throw std::invalid_argument("check_functional_equation: order must be non-negative");
    }
    if (eq == FunctionalEquation::H_RELATION && !x) {
        throw std::invalid_argument("check_functional_equation: H_RELATION needs x");
    }
    const long build = order + 2;
    const Rational Fj(fib(j));
    const Rational Lj(lucas(j));
    // c = sqrt5 F_j / 2
    const QuadExt c(Rational(0), Fj / Rational(2));
    const auto F = egf_fibonacci(j, build);
    const auto L = egf_lucas(j, build);
    const auto E = egf_exp(QuadExt(Lj), build);

    SeriesVerdict v;
    v.equation = eq;
    v.j = j;
    v.order = order;
    switch (eq) {
    case FunctionalEquation::EGF_F_SQ: {
        const auto s = egf_hyperbolic(Hyperbolic::sinh, c, build);
        v.lhs = F * F;
        v.rhs = QuadExt(Rational(4, 5)) * (E * s * s);
        break;
    }
    case FunctionalEquation::EGF_L_SQ: {
        const auto ch = egf_hyperbolic(Hyperbolic::cosh, c, build);
        v.lhs = L * L;
        v.rhs = QuadExt(4) * (E * ch * ch);
        break;
    }
    case FunctionalEquation::FL_ID: {
        v.lhs = F * L * egf_hyperbolic(Hyperbolic::inv_sinh_sq, c, build);
        v.rhs = (QuadExt(4) / sqrt5()) * (E * egf_hyperbolic(Hyperbolic::coth, c, build));
        break;
    }
    case FunctionalEquation::TANH_FORM: {
        v.lhs = (sqrt5() / QuadExt(2)) * (F * egf_exp(QuadExt(-Lj / Rational(2)), build));
        v.rhs = egf_hyperbolic(Hyperbolic::tanh, c, build) * egf_hyperbolic(Hyperbolic::cosh, c, build);
        break;
    }
    case FunctionalEquation::COTH_FORM: {
        v.lhs = QuadExt(Rational(1, 2)) * (L * egf_exp(QuadExt(-Lj / Rational(2)), build));
        v.rhs = egf_hyperbolic(Hyperbolic::coth, c, build) * egf_hyperbolic(Hyperbolic::sinh, c, build);
        break;
    }
    case FunctionalEquation::H_RELATION: {
        const auto H = bernoulli_series(*x, QuadExt(Rational(0), Fj), build);
        const auto shift = c * (QuadExt(2) * *x - QuadExt(1));
        v.lhs = F * L * H;
        v.rhs = QuadExt(2 * Fj) *
                (egf_monomial(QuadExt(1), 1, build) * E * egf_exp(shift, build) *
                 egf_hyperbolic(Hyperbolic::cosh, c, build));
        break;
    }
    }

    v.confirmed = true;
    for (long n = -2; n <= order; ++n) {
        if (egf_coeff(v.lhs, n) != egf_coeff(v.rhs, n)) {
            v.confirmed = false;
            v.first_mismatch = n;
            break;
        }
    }
    return v;
}

} // namespace fibbern
