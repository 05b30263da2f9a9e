#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <set>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/quad_ext.hpp>
#include <fibbern/sequences.hpp>

using namespace fibbern;

namespace
{

bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("known values")
{
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_number(30) == Rational(BigInt("8615841276005"), BigInt(14322)));
    for (long n = 3; n < 120; n += 2) {
        CHECK(bernoulli_number(n).is_zero());
    }
}

TEST_CASE("defining recurrence")
{
    for (long n = 1; n <= 80; ++n) {
        Rational s;
        for (long k = 0; k <= n; ++k) {
            s += Rational(binomial(n + 1, k)) * bernoulli_number(k);
        }
        CHECK(s.is_zero());
    }
}

TEST_CASE("Akiyama-Tanigawa agrees with the recurrence")
{
    for (long n = 0; n <= 60; ++n) {
        CHECK(bernoulli_akiyama_tanigawa(n) == bernoulli_number(n));
    }
}

TEST_CASE("von Staudt-Clausen")
{
    for (long n = 2; n <= 30; n += 2) {
        Rational s = bernoulli_number(n);
        std::set<long> primes;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0 && is_prime(d + 1)) {
                s += Rational(1, d + 1);
                primes.insert(d + 1);
            }
        }
        CHECK(s.is_integer());
        BigInt den = 1;
        for (long p : primes) {
            den *= p;
        }
        CHECK(bernoulli_number(n).denominator() == den);
    }
}

TEST_CASE("polynomial shape and values")
{
    CHECK(bernoulli_poly(0) == DensePoly::constant(QuadExt(1)));
    CHECK(bernoulli_poly(2) ==
          DensePoly{QuadExt(Rational(1, 6)), QuadExt(-1), QuadExt(1)});
    for (long n = 0; n <= 20; ++n) {
        CHECK(bernoulli_poly(n).degree() == n);
        CHECK(bernoulli_poly_at(n, QuadExt(0)) == QuadExt(bernoulli_number(n)));
        CHECK(bernoulli_poly_at(n, QuadExt(Rational(3, 7))) == bernoulli_poly(n)(QuadExt(Rational(3, 7))));
    }
}

TEST_CASE("functional relations of the polynomials")
{
    const QuadExt xs[] = {QuadExt(0), QuadExt(Rational(1, 3)), QuadExt(-2), golden_alpha(), golden_beta()};
    for (long n = 0; n <= 24; ++n) {
        for (const auto &x : xs) {
            // B_n(x+1) - B_n(x) = n x^{n-1}
            const QuadExt diff = bernoulli_poly_at(n, x + QuadExt(1)) - bernoulli_poly_at(n, x);
            CHECK(diff == (n == 0 ? QuadExt(0) : QuadExt(n) * x.pow(n - 1)));
            // B_n(1-x) = (-1)^n B_n(x)
            CHECK(bernoulli_poly_at(n, QuadExt(1) - x) == QuadExt(neg_one_pow(n)) * bernoulli_poly_at(n, x));
            // B_n(x+y) = sum C(n,k) B_k(x) y^{n-k}
            const QuadExt y = QuadExt(Rational(5, 2));
            QuadExt s;
            for (long k = 0; k <= n; ++k) {
                s += QuadExt(Rational(binomial(n, k))) * bernoulli_poly_at(k, x) * y.pow(n - k);
            }
            CHECK(s == bernoulli_poly_at(n, x + y));
        }
    }
}

TEST_CASE("multiplication and the half-argument values")
{
    for (long n = 0; n <= 24; ++n) {
        // B_n(1/2) = (2^{1-n} - 1) B_n
        CHECK(bernoulli_poly_at(n, QuadExt(Rational(1, 2))) ==
              QuadExt((Rational(2).pow(1 - n) - Rational(1)) * bernoulli_number(n)));
        // Raabe: m^{n-1} sum_{r<m} B_n((x+r)/m) = B_n(x)
        for (long m = 2; m <= 4; ++m) {
            const QuadExt x = golden_alpha();
            QuadExt s;
            for (long r = 0; r < m; ++r) {
                s += bernoulli_poly_at(n, (x + QuadExt(r)) / Rational(m));
            }
            CHECK(QuadExt(Rational(m).pow(n - 1)) * s == bernoulli_poly_at(n, x));
        }
    }
}

TEST_CASE("power sums")
{
    // sum_{k<N} k^n = (B_{n+1}(N) - B_{n+1}) / (n+1)
    for (long n = 0; n <= 12; ++n) {
        for (long N = 1; N <= 12; ++N) {
            BigInt s = 0;
            for (long k = 0; k < N; ++k) {
                BigInt p = 1;
                for (long e = 0; e < n; ++e) {
                    p *= k;
                }
                s += p;
            }
            const QuadExt rhs = (bernoulli_poly_at(n + 1, QuadExt(N)) - QuadExt(bernoulli_number(n + 1))) /
                                Rational(n + 1);
            CHECK(rhs == QuadExt(Rational(s)));
        }
    }
}

TEST_CASE("listed values and the sign of B_1")
{
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(7).is_zero());
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(1) != Rational(1, 2));
    CHECK(bernoulli_poly(1) == DensePoly{QuadExt(Rational(-1, 2)), QuadExt(1)});
    CHECK(bernoulli_poly(3) == DensePoly{QuadExt(0), QuadExt(Rational(1, 2)), QuadExt(Rational(-3, 2)), QuadExt(1)});
    CHECK(bernoulli_poly_at(1, golden_alpha()) == QuadExt(0, Rational(1, 2)));
    CHECK(bernoulli_poly_at(2, QuadExt(1)) == QuadExt(Rational(1, 6)));
}

TEST_CASE("difference, reflection and negation as polynomial identities")
{
    const DensePoly x = DensePoly::identity();
    for (long n = 0; n <= 24; ++n) {
        const DensePoly &b = bernoulli_poly(n);
        const DensePoly npow = n == 0 ? DensePoly() : poly_pow(x, static_cast<unsigned>(n - 1)) * QuadExt(n);
        const QuadExt sgn(neg_one_pow(n));
        CHECK(poly_shift(b, QuadExt(1)) - b == npow);
        CHECK(poly_compose(b, DensePoly{QuadExt(1), QuadExt(-1)}) == b * sgn);
        // B_n(-x) = (-1)^n (B_n(x) + n x^{n-1})
        CHECK(poly_dilate(b, QuadExt(-1)) == (b + npow) * sgn);
    }
}

TEST_CASE("paired relations with a plus or minus sign")
{
    const QuadExt pts[] = {QuadExt(0), QuadExt(Rational(2, 3)), QuadExt(-3), golden_alpha(), golden_beta(),
                           QuadExt(Rational(1, 4), Rational(-1, 2))};
    const QuadExt one(1);
    for (long n = 0; n <= 20; ++n) {
        const auto B = [n](const QuadExt &t) { return bernoulli_poly_at(n, t); };
        const auto P = [n](const QuadExt &t) { return n == 0 ? QuadExt() : QuadExt(n) * t.pow(n - 1); };
        const QuadExt sgn(neg_one_pow(n));
        for (const auto &x : pts) {
            for (const auto &y : pts) {
                for (int s : {1, -1}) {
                    const QuadExt e(s);
                    CHECK(B(one + x) + e * B(one + y) == B(x) + e * B(y) + P(x) + e * P(y));
                    CHECK(B(one + x) + e * B(one + y) == sgn * (B(one - x) + e * B(one - y)) + P(x) + e * P(y));
                    CHECK(B(-x) + e * B(-y) == sgn * (B(x) + e * B(y) + P(x) + e * P(y)));
                }
            }
            // x - y = 1
            const QuadExt y1 = x - one;
            CHECK(B(x) - B(y1) == P(y1));
            CHECK(B(-x) - B(-y1) == sgn * P(x));
            // x + y = 1
            const QuadExt y2 = one - x;
            CHECK(B(x) - sgn * B(y2) == QuadExt());
            const QuadExt tail = P(x) - P(y2);
            CHECK(B(one + x) - B(one + y2) == (n % 2 == 0 ? tail : QuadExt(-2) * B(y2) + tail));
        }
    }
}

TEST_CASE("values at golden-ratio arguments")
{
    for (long j = 1; j <= 8; ++j) {
        const QuadExt L(Rational(lucas(j)));
        const QuadExt r = sqrt5() * QuadExt(Rational(fib(j))) / L;
        const QuadExt a = golden_alpha().pow(j), b = golden_beta().pow(j);
        for (long n = 0; n <= 30; ++n) {
            INFO("n = " << n << ", j = " << j);
            const QuadExt ba = bernoulli_poly_at(n, a / L);
            CHECK(bernoulli_poly_at(n, b / L) == QuadExt(neg_one_pow(n)) * ba);
            // One component of B_n(alpha^j / L_j) always vanishes.
            if (n % 2 == 0) {
                CHECK(ba.irr().is_zero());
            } else {
                CHECK(ba.rat().is_zero());
            }
            const QuadExt tail = n == 0 ? QuadExt() : QuadExt(n) * r.pow(n - 1);
            CHECK(bernoulli_poly_at(n, QuadExt(2) * a / L) - bernoulli_poly_at(n, r) == tail);
            const QuadExt b2 = bernoulli_poly_at(n, QuadExt(2) * b / L);
            if (n % 2 == 0) {
                CHECK(b2 == bernoulli_poly_at(n, r));
            } else {
                CHECK(b2 == -bernoulli_poly_at(n, r));
            }
        }
    }
}
