#include <fibbern/sequences.hpp>

namespace fibbern
{

std::pair<BigInt, BigInt> fib_pair(unsigned long n)
{
    BigInt a = 0; // F_k
    BigInt b = 1; // F_{k+1}
    int top = 63;
    while (top >= 0 && ((n >> top) & 1UL) == 0) {
        --top;
    }
    for (int bit = top; bit >= 0; --bit) {
        // F_{2k} = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((n >> bit) & 1UL) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {a, b};
}

BigInt fib(SeqIndex n)
{
    if (n >= 0) {
        return fib_pair(static_cast<unsigned long>(n)).first;
    }
    const auto m = static_cast<unsigned long>(-n);
    BigInt v = fib_pair(m).first;
    return (m % 2 == 1) ? v : BigInt(-v);
}

BigInt lucas(SeqIndex n)
{
    const auto m = static_cast<unsigned long>(n >= 0 ? n : -n);
    auto [f, g] = fib_pair(m);
    // L_m = 2 F_{m+1} - F_m
    BigInt v = 2 * g - f;
    if (n < 0 && m % 2 == 1) {
        v = -v;
    }
    return v;
}

QuadExt alpha_power(SeqIndex j)
{
    return {Rational(lucas(j), BigInt(2)), Rational(fib(j), BigInt(2))};
}

QuadExt beta_power(SeqIndex j) { return alpha_power(j).conj(); }

BigInt fib_iterative(unsigned long n)
{
    BigInt a = 0;
    BigInt b = 1;
    for (unsigned long i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

} // namespace fibbern
