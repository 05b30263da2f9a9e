#ifndef FIBBERN_BERNOULLI_HPP
#define FIBBERN_BERNOULLI_HPP

#include <fibbern/dense_poly.hpp>
#include <fibbern/rational.hpp>

namespace fibbern
{

// B_n with the convention B_1 = -1/2.
//
// Solved from sum_{k<=n} C(n+1,k) B_k = 0 and memoized in an append-only
// table. References stay valid for the lifetime of the program, and the
// table may be extended concurrently.
const Rational &bernoulli_number(long n);

// B_n(x) = sum_k C(n,k) B_{n-k} x^k, memoized like bernoulli_number.
const DensePoly &bernoulli_poly(long n);

QuadExt bernoulli_poly_at(long n, const QuadExt &x);

// Fills both memo tables up to n so later reads never take the write lock.
void bernoulli_prefetch(long n);

// Independent path via the Akiyama-Tanigawa transform. It yields the
// B_1 = +1/2 convention internally; the result is mapped back to -1/2.
Rational bernoulli_akiyama_tanigawa(long n);

} // namespace fibbern

#endif
