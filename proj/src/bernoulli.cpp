#include <fibbern/bernoulli.hpp>

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include <fibbern/binomial.hpp>

namespace fibbern
{

namespace
{

struct BernoulliCache {
    std::shared_mutex mutex;
    std::deque<Rational> numbers{Rational(1)};
    std::deque<DensePoly> polys;
};

BernoulliCache &cache()
{
    static BernoulliCache c;
    return c;
}

void check_index(long n)
{
    if (n < 0) {
        throw std::domain_error("Bernoulli index must be non-negative");
    }
}

// Caller holds the unique lock.
void extend_numbers(BernoulliCache &c, std::size_t upto)
{
    while (c.numbers.size() <= upto) {
        const auto n = static_cast<long>(c.numbers.size());
        if (n > 1 && n % 2 == 1) {
            c.numbers.emplace_back(0);
            continue;
        }
        // B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k
        Rational acc;
        for (long k = 0; k < n; ++k) {
            if (c.numbers[static_cast<std::size_t>(k)].is_zero()) {
                continue;
            }
            acc += Rational(binomial(n + 1, k)) * c.numbers[static_cast<std::size_t>(k)];
        }
        c.numbers.push_back(-acc / Rational(n + 1));
    }
}

void extend_polys(BernoulliCache &c, std::size_t upto)
{
    extend_numbers(c, upto);
    while (c.polys.size() <= upto) {
        const auto n = static_cast<long>(c.polys.size());
        std::vector<QuadExt> coeffs(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            coeffs[static_cast<std::size_t>(k)] =
                QuadExt(Rational(binomial(n, k)) * c.numbers[static_cast<std::size_t>(n - k)]);
        }
        c.polys.emplace_back(std::move(coeffs));
    }
}

} // namespace

const Rational &bernoulli_number(long n)
{
    check_index(n);
    auto &c = cache();
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(c.mutex);
        if (idx < c.numbers.size()) {
            return c.numbers[idx];
        }
    }
    std::unique_lock lock(c.mutex);
    extend_numbers(c, idx);
    return c.numbers[idx];
}

const DensePoly &bernoulli_poly(long n)
{
    check_index(n);
    auto &c = cache();
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(c.mutex);
        if (idx < c.polys.size()) {
            return c.polys[idx];
        }
    }
    std::unique_lock lock(c.mutex);
    extend_polys(c, idx);
    return c.polys[idx];
}

QuadExt bernoulli_poly_at(long n, const QuadExt &x) { return poly_eval(bernoulli_poly(n), x); }

void bernoulli_prefetch(long n)
{
    check_index(n);
    auto &c = cache();
    std::unique_lock lock(c.mutex);
    extend_polys(c, static_cast<std::size_t>(n));
}

Rational bernoulli_akiyama_tanigawa(long n)
{
    check_index(n);
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (long j = m; j >= 1; --j) {
            auto &lo = a[static_cast<std::size_t>(j - 1)];
            lo = Rational(j) * (lo - a[static_cast<std::size_t>(j)]);
        }
    }
    return n == 1 ? -a[0] : a[0];
}

} // namespace fibbern
