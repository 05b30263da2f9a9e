#ifndef FIBBERN_ORACLE_HPP
#define FIBBERN_ORACLE_HPP

#include <stdexcept>

#include <fibbern/identities.hpp>

namespace fibbern
{

class NoOracleError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

bool has_oracle(IdentityId id);

struct OracleOptions {
    // Truncation order of the generating series. It is raised automatically
    // when an identity reads a coefficient beyond it (the 2n-length sums).
    long order = 32;
};

// Recomputes an identity along its independent path:
//  - convolution identities: coefficient extraction from products of
//    truncated generating series (egf module), never summing the binomial
//    convolution directly;
//  - Binet-type identities: the closed form alpha^m h(alpha^i t) -/+ beta^m h(beta^i t)
//    built from powers of alpha and beta only.
// The verdict's lhs/rhs are the oracle's values. Gating and ParameterError
// behave as in evaluate_identity.
IdentityVerdict oracle_check(IdentityId id, const IdentityParams &params, const OracleOptions &options = {});

// As above, but for Binet-type identities the right-hand side is taken from
// an existing direct verdict instead of being evaluated again.
IdentityVerdict oracle_check(const IdentityVerdict &direct, const OracleOptions &options = {});

// Same status and identical values on both sides.
bool oracle_agrees(const IdentityVerdict &direct, const IdentityVerdict &oracle);

} // namespace fibbern

#endif
