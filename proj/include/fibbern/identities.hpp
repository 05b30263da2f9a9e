#ifndef FIBBERN_IDENTITIES_HPP
#define FIBBERN_IDENTITIES_HPP

#include <compare>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <fibbern/dense_poly.hpp>
#include <fibbern/quad_ext.hpp>

namespace fibbern
{

// One tag per displayed identity of the catalog.
enum class IdentityId {
    L1A, L1B, L1C,
    T1A, T1B, T1C,
    SPEC_J1_A, SPEC_J1_B, SPEC_J1_C,
    REM1_A, REM1_B, REM1_C,
    T2A, T2A_PART, T2B, T2B_PART, T2_CONSEQ,
    T3A, T3B, T3A_EVEN,
    T7A, T7B,
    C8A, C8B,
    T9A, T9B,
    C10A, C10B, C10C, C10D,
    T11A, T11B,
    T12A, T12B,
    T13,
    C21,
    C22A, C22B,
    EX_J3, EX_BETA,
    C23,
    EX_Q2_GEN, EX_Q2_J1,
    EX_Q3_GEN, EX_Q3_J1,
    LEM6_F, LEM6_L,
};

enum class Parity { any, even, odd };

// What the two sides of an identity are.
enum class ValueKind {
    scalar,
    poly_in_x, // DensePoly in the variable x
    poly_in_z, // DensePoly in the variable z
};

// Independent derivation path available for an identity.
enum class OracleKind { egf, binet };

struct IdentityInfo {
    IdentityId id;
    std::string_view tag;
    std::string_view formula; // plain-text rendering of the evaluated form
    Parity parity = Parity::any;
    long n_min = 0;
    bool uses_j = true;
    long j_min = std::numeric_limits<long>::min();
    std::optional<long> j_fixed{};
    bool uses_m = false;
    bool uses_q = false;
    bool uses_x = false;
    bool uses_z = false;
    bool uses_sign = false;
    ValueKind kind = ValueKind::scalar;
    OracleKind oracle = OracleKind::binet;
};

// The closed catalog, in IdentityId order.
std::span<const IdentityInfo> identity_catalog();
const IdentityInfo &identity_info(IdentityId id);
std::string_view identity_tag(IdentityId id);
std::optional<IdentityId> parse_identity_tag(std::string_view tag);

// Parameters not used by an identity stay at their defaults (n and j are
// always present; j is ignored when the identity does not use it).
struct IdentityParams {
    long n = 0;
    long j = 1;
    std::optional<long> m;
    std::optional<long> q;
    std::optional<QuadExt> x;
    std::optional<QuadExt> z;
    std::optional<int> sign; // +1 or -1

    friend bool operator==(const IdentityParams &, const IdentityParams &) = default;
    friend std::strong_ordering operator<=>(const IdentityParams &, const IdentityParams &) = default;
};

using IdentityValue = std::variant<QuadExt, DensePoly>;

std::string value_to_string(const IdentityValue &v);

enum class VerdictStatus { Equal, Unequal, NotApplicable };

std::string_view status_name(VerdictStatus s);

struct IdentityVerdict {
    IdentityId id{};
    IdentityParams params;
    IdentityValue lhs;
    IdentityValue rhs;
    VerdictStatus status = VerdictStatus::NotApplicable;
    std::string note;
};

// A parameter tuple outside an identity's declared domain: a required field
// is missing, q < 2, j below its minimum, j different from a fixed value.
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct EvalOptions {
    // Adds 1 to the right-hand side of this identity; used to check that a
    // broken catalog entry is noticed.
    std::optional<IdentityId> fault;
};

// Throws ParameterError when params violate the identity's domain. Returns
// NotApplicable (with empty sides) when only a parity or n-range side
// condition fails.
IdentityVerdict evaluate_identity(IdentityId id, const IdentityParams &params, const EvalOptions &options = {});

// The sides without domain gating or fault injection. Used by the oracle and
// the ledger; params must already be valid.
std::pair<IdentityValue, IdentityValue> identity_sides(IdentityId id, const IdentityParams &params);

// Throws ParameterError if params are outside the declared domain; returns
// an explanation if a side condition fails, nullopt if the identity applies.
std::optional<std::string> check_domain(const IdentityInfo &info, const IdentityParams &params);

// sum_k v_k S_{i w_k + m} z^{w_k}, S = F or L, for a finite coefficient list.
enum class LucasKind { F, L };

struct TransformTerm {
    IdentityValue v;
    long w = 0;
};

IdentityValue lucas_transform(std::span<const TransformTerm> terms, long i, long m, const QuadExt &z, LucasKind kind);

// The Binet closed form of the same sum:
//   F: (alpha^m h(alpha^i z) - beta^m h(beta^i z)) / sqrt5
//   L:  alpha^m h(alpha^i z) + beta^m h(beta^i z)
// with h(t) = sum_k v_k t^{w_k}. Uses only powers of alpha and beta.
IdentityValue lucas_transform_closed(std::span<const TransformTerm> terms, long i, long m, const QuadExt &z,
                                     LucasKind kind);

} // namespace fibbern

#endif
