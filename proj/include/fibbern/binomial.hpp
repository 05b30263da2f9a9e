#ifndef FIBBERN_BINOMIAL_HPP
#define FIBBERN_BINOMIAL_HPP

#include <fibbern/rational.hpp>

namespace fibbern
{

// C(n, k) for 0 <= k <= n, and 0 otherwise.
//
// Rows up to a fixed bound come from a Pascal triangle built once on first
// use; larger rows are computed directly. Safe to call concurrently.
const BigInt &binomial(long n, long k);

} // namespace fibbern

#endif
