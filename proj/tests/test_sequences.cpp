#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <cstdlib>

#include <fibbern/quad_ext.hpp>
#include <fibbern/sequences.hpp>

using namespace fibbern;

TEST_CASE("small values and negative indices")
{
    const long F[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    const long L[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123};
    for (long n = 0; n <= 10; ++n) {
        CHECK(fib(n) == F[n]);
        CHECK(lucas(n) == L[n]);
    }
    CHECK(fib(-5) == 5);
    CHECK(fib(-6) == -8);
    CHECK(lucas(-5) == -11);
    CHECK(lucas(-6) == 18);
    CHECK(fib(100) == BigInt("354224848179261915075"));
    CHECK(lucas(100) == BigInt("792070839848372253127"));
}

TEST_CASE("fast doubling agrees with iteration")
{
    BigInt a = 0, b = 1;
    for (long n = 0; n <= 500; ++n) {
        CHECK(fib(n) == a);
        CHECK(fib_pair(static_cast<unsigned long>(n)).first == a);
        CHECK(fib_pair(static_cast<unsigned long>(n)).second == b);
        b += a;
        a = b - a;
    }
    CHECK(fib_iterative(777) == fib(777));
}

TEST_CASE("reflection for negative indices")
{
    for (long n = -500; n <= 500; ++n) {
        const int s = (n % 2 == 0) ? -1 : 1;
        CHECK(fib(-n) == s * fib(n));
        CHECK(lucas(-n) == -s * lucas(n));
    }
}

TEST_CASE("recurrences and product relations")
{
    for (long n = -60; n <= 60; ++n) {
        CHECK(fib(n + 1) == fib(n) + fib(n - 1));
        CHECK(lucas(n + 1) == lucas(n) + lucas(n - 1));
        CHECK(5 * fib(n) == lucas(n + 1) + lucas(n - 1));
        CHECK(lucas(n) == fib(n - 1) + fib(n + 1));
        CHECK(fib(2 * n) == fib(n) * lucas(n));
        CHECK(lucas(n) * lucas(n) - 5 * fib(n) * fib(n) == 4 * ((n % 2 == 0) ? 1 : -1));
        for (long m = -6; m <= 6; ++m) {
            CHECK(2 * fib(n + m) == fib(n) * lucas(m) + lucas(n) * fib(m));
        }
    }
}

TEST_CASE("Binet form against powers of the golden ratio")
{
    const QuadExt &a = golden_alpha();
    const QuadExt &b = golden_beta();
    for (long n = -40; n <= 40; ++n) {
        const QuadExt an = a.pow(n), bn = b.pow(n);
        CHECK((an - bn) / sqrt5() == QuadExt(Rational(fib(n))));
        CHECK(an + bn == QuadExt(Rational(lucas(n))));
        CHECK(alpha_power(n) == an);
        CHECK(beta_power(n) == bn);
    }
}

TEST_CASE("listed values")
{
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-1) == 1);
    CHECK(fib(-2) == -1);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(5) == 11);
    CHECK(lucas(-3) == -4);
    CHECK(alpha_power(0) == QuadExt(1));
    CHECK(alpha_power(5) == QuadExt(Rational(11, 2), Rational(5, 2)));
    CHECK(alpha_power(-1) == QuadExt(Rational(-1, 2), Rational(1, 2)));
    CHECK(fib(500) == fib_iterative(500));
    CHECK(fib(500) > BigInt("18446744073709551615"));
}

TEST_CASE("addition formulas over a square of indices")
{
    for (long r = -20; r <= 20; ++r) {
        for (long s = -20; s <= 20; ++s) {
            CHECK(fib(r) * lucas(s) + fib(s) * lucas(r) == 2 * fib(r + s));
            CHECK(lucas(r) * lucas(s) + 5 * fib(s) * fib(r) == 2 * lucas(r + s));
        }
    }
}

TEST_CASE("Binet form over a wider range")
{
    for (long n = -60; n <= 60; ++n) {
        const QuadExt an = quad_pow(golden_alpha(), static_cast<unsigned long>(std::abs(n)));
        const QuadExt bn = quad_pow(golden_beta(), static_cast<unsigned long>(std::abs(n)));
        const QuadExt a = n < 0 ? an.inverse() : an, b = n < 0 ? bn.inverse() : bn;
        CHECK(a - b == QuadExt(0, Rational(fib(n))));
        CHECK(a + b == QuadExt(Rational(lucas(n)), 0));
    }
}
