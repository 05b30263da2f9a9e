#include <fibbern/binomial.hpp>

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace fibbern
{

namespace
{

struct PascalTriangle {
    std::shared_mutex mutex;
    std::deque<std::vector<BigInt>> rows{std::vector<BigInt>{BigInt(1)}};
};

PascalTriangle &triangle()
{
    static PascalTriangle t;
    return t;
}

const BigInt &zero_binomial()
{
    static const BigInt zero(0);
    return zero;
}

} // namespace

const BigInt &binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return zero_binomial();
    }
    auto &t = triangle();
    const auto row = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(t.mutex);
        if (row < t.rows.size()) {
            return t.rows[row][static_cast<std::size_t>(k)];
        }
    }
    std::unique_lock lock(t.mutex);
    while (t.rows.size() <= row) {
        const auto &prev = t.rows.back();
        std::vector<BigInt> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i < prev.size(); ++i) {
            next[i] = prev[i - 1] + prev[i];
        }
        t.rows.push_back(std::move(next));
    }
    return t.rows[row][static_cast<std::size_t>(k)];
}

} // namespace fibbern
