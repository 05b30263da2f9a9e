#include <fibbern/identities.hpp>

#include <functional>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/sequences.hpp>

#include "identities_internal.hpp"

namespace fibbern
{

namespace
{

using Q = QuadExt;
using P = DensePoly;
using enum IdentityId;

Q Fq(long n) { return Q(Rational(fib(n))); }
Q Lq(long n) { return Q(Rational(lucas(n))); }
Q Bq(long n) { return Q(bernoulli_number(n)); }
Rational C(long n, long k) { return Rational(binomial(n, k)); }
Rational r2(long k) { return Rational(2).pow(k); }
bool even(long v) { return v % 2 == 0; }

// n x^{n-1}, read as 0 at n = 0.
Q n_pow(long n, const Q &x) { return n == 0 ? Q() : Q(n) * x.pow(n - 1); }
P n_pow(long n, const P &p) { return n == 0 ? P() : poly_pow(p, static_cast<unsigned>(n - 1)) * Q(n); }

// Shared quantities of one evaluation.
struct Ctx {
    long n;
    long j;
    Q F;  // F_j
    Q L;  // L_j
    Q c;  // sqrt5 F_j
    explicit Ctx(const IdentityParams &p) : n(p.n), j(p.j), F(Fq(p.j)), L(Lq(p.j)), c(sqrt5() * Fq(p.j)) {}
};

template <class Fn>
Q sum(long lo, long hi, Fn f)
{
    Q s;
    for (long k = lo; k <= hi; ++k) {
        s += f(k);
    }
    return s;
}

template <class Fn>
P psum(long lo, long hi, Fn f)
{
    P s;
    for (long k = lo; k <= hi; ++k) {
        s += f(k);
    }
    return s;
}

// ---- binomial convolutions of the Fibonacci/Lucas generating functions ----

Sides l1a(const Ctx &t)
{
    const long n = t.n, j = t.j;
    return {sum(0, n, [&](long k) { return Q(C(n, k)) * Fq(j * k) * Fq(j * (n - k)); }),
            (Q(r2(n)) * Lq(j * n) - Q(2) * t.L.pow(n)) / Rational(5)};
}

Sides l1b(const Ctx &t)
{
    const long n = t.n, j = t.j;
    return {sum(0, n, [&](long k) { return Q(C(n, k)) * Lq(j * k) * Lq(j * (n - k)); }),
            Q(r2(n)) * Lq(j * n) + Q(2) * t.L.pow(n)};
}

Sides l1c(const Ctx &t)
{
    const long n = t.n, j = t.j;
    return {sum(0, n, [&](long k) { return Q(C(n, k)) * Fq(j * k) * Lq(j * (n - k)); }), Q(r2(n)) * Fq(j * n)};
}

Sides t1a(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q lhs = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * (Q(r2(k)) * Lq(j * k) - Q(2) * t.L.pow(k)) * t.c.pow(n - k) * Bq(n - k + 2) /
               Rational(n - k + 2);
    });
    const Q rhs = (Q(r2(n + 2)) * Lq(j * (n + 2)) - Q(2) * t.L.pow(n + 2)) /
                      (Q(Rational(5 * (n + 1) * (n + 2))) * t.F * t.F) -
                  t.L.pow(n);
    return {lhs, rhs};
}

Sides t1b(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q lhs = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * (Q(r2(k)) * Lq(j * k) + Q(2) * t.L.pow(k)) * t.c.pow(n - k) *
               Q((r2(n - k + 2) - Rational(1)) / Rational(n - k + 2)) * Bq(n - k + 2);
    });
    return {lhs, t.L.pow(n)};
}

Q t1c_lhs(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q a = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * Q(r2(k)) * Fq(j * k) * t.c.pow(n - k) * Bq(n - k + 2) / Rational(n - k + 2);
    });
    const Q b = sum(0, n - 1, [&](long k) {
        if (even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * t.L.pow(k) * t.c.pow(n - k) * Bq(n - k + 1) / Rational(n - k + 1);
    });
    return a + Q(2) / sqrt5() * b;
}

Sides t1c(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q rhs = Q(r2(n + 2)) * Fq(j * (n + 2)) / (Q(Rational(5 * (n + 1) * (n + 2))) * t.F * t.F) -
                  Q(2) * t.L.pow(n + 1) / (Q(Rational(5 * (n + 1))) * t.F);
    return {t1c_lhs(t), rhs};
}

Sides spec_a(const Ctx &t)
{
    const long n = t.n;
    const Q lhs = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * (Q(r2(k)) * Lq(k) - Q(2)) * sqrt5().pow(n - k) * Bq(n - k + 2) / Rational(n - k + 2);
    });
    return {lhs, (Q(r2(n + 2)) * Lq(n + 2) - Q(2)) / Rational(5 * (n + 1) * (n + 2)) - Q(1)};
}

Sides spec_b(const Ctx &t)
{
    const long n = t.n;
    const Q lhs = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * (Q(r2(k)) * Lq(k) + Q(2)) * sqrt5().pow(n - k) *
               Q((r2(n - k + 2) - Rational(1)) / Rational(n - k + 2)) * Bq(n - k + 2);
    });
    return {lhs, Q(1)};
}

Sides spec_c(const Ctx &t)
{
    const long n = t.n;
    const Q a = sum(0, n, [&](long k) {
        if (!even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * Q(r2(k)) * Fq(k) * sqrt5().pow(n - k) * Bq(n - k + 2) / Rational(n - k + 2);
    });
    const Q b = sum(0, n - 1, [&](long k) {
        if (even(n - k)) {
            return Q();
        }
        return Q(C(n, k)) * sqrt5().pow(n - k) * Bq(n - k + 1) / Rational(n - k + 1);
    });
    const Q rhs = Q(Rational(2, 5 * (n + 1))) * (Q(r2(n + 1)) * Fq(n + 2) / Rational(n + 2) - Q(1));
    return {a + Q(2) / sqrt5() * b, rhs};
}

Sides rem1a(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q f2 = Q(5) * t.F * t.F;
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k) * Rational(n - 2 * k - 1, (k + 1) * (2 * k + 1))) *
               (t.L.pow(2 * k + 2) - Q(r2(2 * k + 1)) * Lq(2 * j * (k + 1))) / f2.pow(k + 1) * Bq(n - 2 * k);
    });
    return {lhs, (t.L / t.c).pow(n)};
}

Sides rem1b(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q f2 = Q(5) * t.F * t.F;
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k) * (r2(n - 2 * k + 2) - Rational(1)) / Rational(n - 2 * k + 2)) *
               (Q(2) * t.L.pow(2 * k) + Q(r2(2 * k)) * Lq(2 * j * k)) / f2.pow(k) * Bq(n - 2 * k + 2);
    });
    return {lhs, (t.L / t.c).pow(n)};
}

Sides rem1c(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q ratio = Q(4) / (Q(5) * t.F * t.F);
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k)) * ratio.pow(k) *
               (Q(Rational(n - 2 * k - 1, 2 * k + 1)) * Fq(j * (2 * k + 1)) + t.F * t.L.pow(2 * k) / r2(2 * k)) *
               Bq(n - 2 * k);
    });
    return {lhs, Q()};
}

Sides t2a(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q scale = (t.L / t.c).pow(n);
    const Q lhs = sum(0, n, [&](long k) {
        const Q first = Q(neg_one_pow(k)) * Fq(j * (k + 1)) / t.L.pow(k) * scale;
        const Q second = Q(1 + neg_one_pow(n)) * Q(Rational(r2(k + 3) - Rational(2)) / Rational(k + 2)) * t.F *
                         Bq(k + 2);
        return Q(C(n, k) * r2(k) / Rational(k + 1)) * (first - second);
    });
    return {lhs, Q()};
}

Sides t2a_part(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q lhs = sum(1, 2 * n, [&](long k) {
        return Q(neg_one_pow(k)) * Q(C(2 * n - 1, k - 1) * r2(k)) * Fq(j * k) / (Q(k) * t.L.pow(k));
    });
    return {lhs, Q()};
}

Sides t2b(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q scale = (t.L / t.c).pow(n);
    const Q lhs = sum(0, n, [&](long k) {
        const Q first = Q(neg_one_pow(k)) * Lq(j * k) / t.L.pow(k) * scale;
        const Q second = Q(Rational(1 + neg_one_pow(n), n - k + 1)) * Bq(k);
        return Q(C(n, k) * r2(k)) * (first - second);
    });
    return {lhs, Q(1 + neg_one_pow(n))};
}

Sides t2b_part(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q lhs = sum(0, 2 * n - 1, [&](long k) {
        return Q(neg_one_pow(k)) * Q(C(2 * n - 1, k) * r2(k)) * Lq(j * k) / t.L.pow(k);
    });
    return {lhs, Q()};
}

Sides t2_conseq(const Ctx &t)
{
    const long n = t.n;
    return {sum(0, n, [&](long k) { return Q(C(n, k) * r2(k) / Rational(n - k + 1)) * Bq(k); }), Q()};
}

Sides t3a(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q f2 = Q(5) * t.F * t.F;
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k)) * f2.pow(k) *
               (Fq(j * (n - 2 * k + 1)) / Rational(n - 2 * k + 1) * Bq(2 * k) - t.F * t.L.pow(n - 2 * k) / r2(n));
    });
    return {lhs, Q()};
}

Sides t3b(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q f2 = Q(5) * t.F * t.F;
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k)) * f2.pow(k) / Rational(2 * k + 1) *
               (Q((r2(2 * k + 2) - Rational(1)) / Rational(k + 1)) * Lq(j * (n - 2 * k)) * Bq(2 * k + 2) -
                t.L.pow(n - 2 * k) / r2(n));
    });
    return {lhs, Q()};
}

Sides t3a_even(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q f2 = Q(5) * t.F * t.F;
    const Q lhs = sum(0, n / 2, [&](long k) {
        return Q(C(n, 2 * k)) * f2.pow(k) * Fq(j * (n - 2 * k + 1)) / Rational(n - 2 * k + 1) * Bq(2 * k);
    });
    return {lhs, t.F * Lq(n * j) / Rational(2)};
}

// ---- Binet-type identities ----

Sides t7(const Ctx &t, const IdentityParams &p, LucasKind kind)
{
    const long n = t.n, j = t.j, m = *p.m;
    const Q &z = *p.z;
    const P lhs = psum(0, n, [&](long k) {
        const Q s = kind == LucasKind::F ? Fq(j * k + m) : Lq(j * k + m);
        return bernoulli_poly(n - k) * (Q(C(n, k)) * s * z.pow(k));
    });
    const Q am = golden_alpha().pow(m), bm = golden_beta().pow(m);
    const P a = poly_shift(bernoulli_poly(n), golden_alpha().pow(j) * z) * am;
    const P b = poly_shift(bernoulli_poly(n), golden_beta().pow(j) * z) * bm;
    return {lhs, kind == LucasKind::F ? (a - b) * sqrt5().inverse() : a + b};
}

Sides c8(const Ctx &t, const IdentityParams &p, LucasKind kind)
{
    const long n = t.n, j = t.j, m = *p.m;
    std::vector<Q> coeffs;
    for (long k = 0; k <= n; ++k) {
        const Q s = kind == LucasKind::F ? Fq(j * k + m) : Lq(j * k + m);
        coeffs.push_back(Q(C(n, k)) * s * Bq(n - k));
    }
    const Q am = golden_alpha().pow(m), bm = golden_beta().pow(m);
    const P a = poly_dilate(bernoulli_poly(n), golden_alpha().pow(j)) * am;
    const P b = poly_dilate(bernoulli_poly(n), golden_beta().pow(j)) * bm;
    return {P(coeffs), kind == LucasKind::F ? (a - b) * sqrt5().inverse() : a + b};
}

// B_n(alpha^j / L_j)
Q b_at_ratio(const Ctx &t) { return bernoulli_poly_at(t.n, alpha_power(t.j) / t.L); }

// sum_k sgn^k C(n,k) S_{jk+m}/L_j^k B_{n-k} for k >= k0
Q ratio_sum(const Ctx &t, LucasKind kind, long m, int sgn, long k0 = 0, long weight = 1)
{
    const long n = t.n, j = t.j;
    return sum(k0, n, [&](long k) {
        const Q s = kind == LucasKind::F ? Fq(j * k + m) : Lq(j * k + m);
        const int sk = (sgn < 0) ? neg_one_pow(k) : 1;
        return Q(Rational(sk) * C(n, k) * Rational(weight).pow(k)) * s / t.L.pow(k) * Bq(n - k);
    });
}

Sides t9(const Ctx &t, const IdentityParams &p, LucasKind kind)
{
    const long m = *p.m;
    const Q b = b_at_ratio(t);
    Q rhs;
    if (kind == LucasKind::F) {
        rhs = even(t.n) ? Fq(m) * b : Lq(m) / sqrt5() * b;
    } else {
        rhs = even(t.n) ? Lq(m) * b : sqrt5() * Fq(m) * b;
    }
    return {ratio_sum(t, kind, m, 1), rhs};
}

Sides t11(const Ctx &t, const IdentityParams &p, LucasKind kind)
{
    const long n = t.n, j = t.j, m = *p.m;
    const Q b = b_at_ratio(t);
    const Q tail = n == 0 ? Q()
                          : Q(n) * (kind == LucasKind::F ? Fq(j * (n - 1) + m) : Lq(j * (n - 1) + m)) /
                                t.L.pow(n - 1);
    Q rhs;
    if (kind == LucasKind::F) {
        rhs = even(n) ? Fq(m) * b + tail : -(Lq(m) / sqrt5() * b) - tail;
    } else {
        rhs = even(n) ? Lq(m) * b + tail : -(sqrt5() * Fq(m) * b) - tail;
    }
    return {ratio_sum(t, kind, m, -1), rhs};
}

Sides t13(const Ctx &t, const IdentityParams &p)
{
    const long n = t.n, j = t.j;
    const Q c = Q(*p.sign) * t.c;
    const P lhs = psum(0, n, [&](long k) {
        return bernoulli_poly(n - k) * (Q(C(n, k) * r2(k)) * Fq(j * k) * c.pow(n - k));
    });
    // c x + L_j and c (x - 1) + L_j
    const P first{t.L, c};
    const P second{t.L - c, c};
    return {lhs, (n_pow(n, first) + n_pow(n, second)) * t.F};
}

// sum C(n,k) 2^k F_{jk} c^{n-k} B_{n-k}(x0)
Q scaled_bernoulli_sum(const Ctx &t, const Q &c, const Q &x0)
{
    const long n = t.n, j = t.j;
    return sum(0, n, [&](long k) {
        return Q(C(n, k) * r2(k)) * Fq(j * k) * c.pow(n - k) * bernoulli_poly_at(n - k, x0);
    });
}

Sides c21(const Ctx &t, const IdentityParams &p)
{
    const Q c = Q(*p.sign) * t.c;
    return {scaled_bernoulli_sum(t, c, Q()), t.F * (n_pow(t.n, t.L) + n_pow(t.n, t.L - c))};
}

Sides c22a(const Ctx &t)
{
    const long n = t.n;
    const Q l3 = Lq(t.j + 3);
    const Q rhs = t.F * Q(r2(1 - n)) * (n_pow(n, t.c + l3) + n_pow(n, -t.c + l3));
    return {scaled_bernoulli_sum(t, t.c, golden_alpha()), rhs};
}

Sides c22b(const Ctx &t)
{
    const long n = t.n;
    const Q l3 = Lq(t.j - 3);
    const Q rhs = t.F * Q(r2(1 - n)) * (n_pow(n, t.c - l3) + n_pow(n, -t.c - l3));
    return {scaled_bernoulli_sum(t, -t.c, golden_alpha()), rhs};
}

Sides ex_j3(const Ctx &t)
{
    const long n = t.n;
    const Q lhs = sum(0, n, [&](long k) {
        return Q(C(n, k)) * (-sqrt5()).pow(n - k) * Fq(3 * k) * bernoulli_poly_at(n - k, golden_alpha());
    });
    return {lhs, n == 0 ? Q() : Q(neg_one_pow(n - 1) * n) * Lq(n - 1)};
}

Sides ex_beta(const Ctx &t)
{
    const long n = t.n;
    const Q lhs = sum(0, n, [&](long k) {
        return Q(C(n, k) * r2(k)) * Fq(k) * sqrt5().pow(n - k) * bernoulli_poly_at(n - k, golden_beta());
    });
    return {lhs, n == 0 ? Q() : Q(neg_one_pow(n - 1) * n) * Lq(2 * n - 2)};
}

Q raabe_lhs(const Ctx &t, const Q &c, long q)
{
    const long n = t.n, j = t.j;
    return sum(0, n, [&](long k) {
        return Q(C(n, k) * r2(k) * (Rational(q).pow(1 - (n - k)) - Rational(1))) * Fq(j * k) * c.pow(n - k) *
               Bq(n - k);
    });
}

Sides c23(const Ctx &t, const IdentityParams &p)
{
    const long n = t.n, q = *p.q;
    const Q c = Q(*p.sign) * t.c;
    const Q qL = Q(q) * t.L;
    const Q inner = sum(1, q - 1, [&](long r) { return n_pow(n, c * Q(r) + qL) + n_pow(n, c * Q(r - q) + qL); });
    return {raabe_lhs(t, c, q), t.F * Q(Rational(q).pow(1 - n)) * inner};
}

Sides ex_q2_gen(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q two_a = Q(2) * golden_alpha().pow(j), two_b = Q(2) * golden_beta().pow(j);
    const Q mid = t.F * Q(r2(1 - n)) * (n_pow(n, t.L + two_a) + n_pow(n, t.L + two_b));
    const Q rhs = n == 0 ? Q()
                         : Q(n) * t.F * Q(r2(1 - n)) * sum(0, n - 1, [&](long m) {
                               return Q(C(n - 1, m) * r2(m)) * Lq(j * m) * t.L.pow(n - 1 - m);
                           });
    return {raabe_lhs(t, t.c, 2), rhs, mid};
}

Sides ex_q2_j1(const Ctx &t)
{
    const long n = t.n;
    const Q r = sqrt5() / Rational(4);
    const Q lhs = sum(0, n, [&](long k) { return Q(C(n, k) * (Rational(2) - r2(k))) * r.pow(k) * Fq(n - k) * Bq(k); });
    return {lhs, Q(n) * Lq(3 * (n - 1)) / r2(2 * n - 1)};
}

Q q3_lhs(const Ctx &t)
{
    const long n = t.n, j = t.j;
    return sum(0, n, [&](long k) {
        return Q(C(n, k) * Rational(6).pow(k) * (Rational(1) - Rational(3).pow(n - k - 1))) * Fq(j * k) *
               t.c.pow(n - k) * Bq(n - k);
    });
}

Sides ex_q3_gen(const Ctx &t)
{
    const long n = t.n, j = t.j;
    const Q s = sum(0, n - 1, [&](long m) {
        return Q(C(n - 1, m) * (r2(n - 1) + Rational(4).pow(m))) * t.L.pow(n - 1 - m) * Lq(j * m);
    });
    return {q3_lhs(t), Q(n) * t.F * s};
}

Sides ex_q3_j1(const Ctx &t)
{
    const long n = t.n;
    const Q lhs = sum(0, n, [&](long k) {
        return Q(C(n, k) * Rational(6).pow(k) * (Rational(1) - Rational(3).pow(n - k - 1))) * sqrt5().pow(n - k) *
               Fq(k) * Bq(n - k);
    });
    const Q tail = sum(1, n, [&](long m) { return Q(C(n, m) * Rational(m) * Rational(4).pow(m - 1)) * Lq(m - 1); });
    return {lhs, Q(Rational(n) * r2(n - 1)) * Lq(2 * n - 2) + tail};
}

Sides lem6(const Ctx &t, const IdentityParams &p, LucasKind kind)
{
    const auto terms = bernoulli_translation_terms(t.n, *p.x);
    return {lucas_transform(terms, t.j, *p.m, *p.z, kind), lucas_transform_closed(terms, t.j, *p.m, *p.z, kind)};
}

IdentityValue plus_one(const IdentityValue &v)
{
    if (const auto *q = std::get_if<Q>(&v)) {
        return *q + Q(1);
    }
    return std::get<P>(v) + P::constant(Q(1));
}

} // namespace

std::vector<TransformTerm> bernoulli_translation_terms(long n, const QuadExt &x)
{
    std::vector<TransformTerm> terms;
    terms.reserve(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        terms.push_back({Q(C(n, k)) * bernoulli_poly_at(n - k, x), k});
    }
    return terms;
}

Sides evaluate_sides(IdentityId id, const IdentityParams &p)
{
    const Ctx t(p);
    switch (id) {
    case L1A: return l1a(t);
    case L1B: return l1b(t);
    case L1C: return l1c(t);
    case T1A: return t1a(t);
    case T1B: return t1b(t);
    case T1C: return t1c(t);
    case SPEC_J1_A: return spec_a(t);
    case SPEC_J1_B: return spec_b(t);
    case SPEC_J1_C: return spec_c(t);
    case REM1_A: return rem1a(t);
    case REM1_B: return rem1b(t);
    case REM1_C: return rem1c(t);
    case T2A: return t2a(t);
    case T2A_PART: return t2a_part(t);
    case T2B: return t2b(t);
    case T2B_PART: return t2b_part(t);
    case T2_CONSEQ: return t2_conseq(t);
    case T3A: return t3a(t);
    case T3B: return t3b(t);
    case T3A_EVEN: return t3a_even(t);
    case T7A: return t7(t, p, LucasKind::F);
    case T7B: return t7(t, p, LucasKind::L);
    case C8A: return c8(t, p, LucasKind::F);
    case C8B: return c8(t, p, LucasKind::L);
    case T9A: return t9(t, p, LucasKind::F);
    case T9B: return t9(t, p, LucasKind::L);
    case C10A: return {ratio_sum(t, LucasKind::F, -1, 1), b_at_ratio(t)};
    case C10B: return {ratio_sum(t, LucasKind::F, 0, 1, 1), Q()};
    case C10C: return {ratio_sum(t, LucasKind::L, -1, 1), sqrt5() * b_at_ratio(t)};
    case C10D: return {ratio_sum(t, LucasKind::L, 0, 1), Q()};
    case T11A: return t11(t, p, LucasKind::F);
    case T11B: return t11(t, p, LucasKind::L);
    case T12A: return {ratio_sum(t, LucasKind::F, 0, 1, 0, 2), n_pow(t.n, t.c / t.L) / sqrt5()};
    case T12B: return {ratio_sum(t, LucasKind::L, 0, 1, 0, 2), n_pow(t.n, t.c / t.L)};
    case T13: return t13(t, p);
    case C21: return c21(t, p);
    case C22A: return c22a(t);
    case C22B: return c22b(t);
    case EX_J3: return ex_j3(t);
    case EX_BETA: return ex_beta(t);
    case C23: return c23(t, p);
    case EX_Q2_GEN: return ex_q2_gen(t);
    case EX_Q2_J1: return ex_q2_j1(t);
    case EX_Q3_GEN: return ex_q3_gen(t);
    case EX_Q3_J1: return ex_q3_j1(t);
    case LEM6_F: return lem6(t, p, LucasKind::F);
    case LEM6_L: return lem6(t, p, LucasKind::L);
    }
    throw std::logic_error("evaluate_sides: unknown identity");
}

std::pair<IdentityValue, IdentityValue> identity_sides(IdentityId id, const IdentityParams &params)
{
    auto s = evaluate_sides(id, params);
    return {std::move(s.lhs), std::move(s.rhs)};
}

IdentityVerdict evaluate_identity(IdentityId id, const IdentityParams &params, const EvalOptions &options)
{
    const auto &info = identity_info(id);
    IdentityVerdict v;
    v.id = id;
    v.params = params;
    if (!info.uses_j) {
        v.params.j = 1;
    }
    if (auto reason = check_domain(info, params)) {
        v.status = VerdictStatus::NotApplicable;
        v.note = std::move(*reason);
        if (info.kind != ValueKind::scalar) {
            v.lhs = P();
            v.rhs = P();
        }
        return v;
    }
    auto s = evaluate_sides(id, v.params);
    v.lhs = std::move(s.lhs);
    v.rhs = std::move(s.rhs);
    if (options.fault && *options.fault == id) {
        v.rhs = plus_one(v.rhs);
        v.note = "fault injected";
    }
    v.status = v.lhs == v.rhs ? VerdictStatus::Equal : VerdictStatus::Unequal;
    if (s.mid && *s.mid != v.rhs) {
        v.status = VerdictStatus::Unequal;
        v.note = "middle expression differs: " + value_to_string(*s.mid);
    }
    return v;
}

std::string value_to_string(const IdentityValue &v)
{
    if (const auto *q = std::get_if<Q>(&v)) {
        return q->to_string();
    }
    return std::get<P>(v).to_string();
}

} // namespace fibbern
