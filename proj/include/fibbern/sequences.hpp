#ifndef FIBBERN_SEQUENCES_HPP
#define FIBBERN_SEQUENCES_HPP

#include <utility>

#include <fibbern/quad_ext.hpp>
#include <fibbern/rational.hpp>

namespace fibbern
{

// Index into the Fibonacci and Lucas sequences; negative values are allowed.
using SeqIndex = long;

// F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
BigInt fib(SeqIndex n);
// L_n for any integer n, with L_{-n} = (-1)^n L_n.
BigInt lucas(SeqIndex n);

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
std::pair<BigInt, BigInt> fib_pair(unsigned long n);

// alpha^j = (L_j + F_j sqrt 5)/2, exact for every integer j.
QuadExt alpha_power(SeqIndex j);
// beta^j, the conjugate of alpha^j.
QuadExt beta_power(SeqIndex j);

// Plain forward iteration of the recurrence; O(n) big additions. Only meant
// as a reference path for benchmarks and tests.
BigInt fib_iterative(unsigned long n);

} // namespace fibbern

#endif
