#ifndef FIBBERN_IDENTITIES_INTERNAL_HPP
#define FIBBERN_IDENTITIES_INTERNAL_HPP

#include <optional>
#include <vector>

#include <fibbern/identities.hpp>

namespace fibbern
{

struct Sides {
    IdentityValue lhs;
    IdentityValue rhs;
    // Intermediate member of a chained equality lhs = mid = rhs.
    std::optional<IdentityValue> mid{};
};

Sides evaluate_sides(IdentityId id, const IdentityParams &params);

// Coefficients of h(t) = B_n(x + t) = sum_k C(n,k) B_{n-k}(x) t^k.
std::vector<TransformTerm> bernoulli_translation_terms(long n, const QuadExt &x);

} // namespace fibbern

#endif
