#include <fibbern/identities.hpp>

#include <array>

namespace fibbern
{

namespace
{

using enum IdentityId;

constexpr long any_j = std::numeric_limits<long>::min();

// clang-format off
constexpr std::array catalog{
    IdentityInfo{.id = L1A, .tag = "L1A", .formula = "sum C(n,k) F_{jk} F_{j(n-k)} = (2^n L_{jn} - 2 L_j^n)/5", .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = L1B, .tag = "L1B", .formula = "sum C(n,k) L_{jk} L_{j(n-k)} = 2^n L_{jn} + 2 L_j^n", .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = L1C, .tag = "L1C", .formula = "sum C(n,k) F_{jk} L_{j(n-k)} = 2^n F_{jn}", .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T1A, .tag = "T1A",
                 .formula = "sum_{n-k even} C(n,k) (2^k L_{jk} - 2 L_j^k) (sqrt5 F_j)^{n-k} B_{n-k+2}/(n-k+2) = (2^{n+2} L_{j(n+2)} - 2 L_j^{n+2})/(5(n+1)(n+2)F_j^2) - L_j^n",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T1B, .tag = "T1B",
                 .formula = "sum_{n-k even} C(n,k) (2^k L_{jk} + 2 L_j^k) (sqrt5 F_j)^{n-k} (2^{n-k+2}-1)/(n-k+2) B_{n-k+2} = L_j^n",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T1C, .tag = "T1C",
                 .formula = "sum_{n-k even} C(n,k) 2^k F_{jk} (sqrt5 F_j)^{n-k} B_{n-k+2}/(n-k+2) + (2/sqrt5) sum_{n-k odd, k<n} C(n,k) L_j^k (sqrt5 F_j)^{n-k} B_{n-k+1}/(n-k+1) = 2^{n+2} F_{j(n+2)}/(5(n+1)(n+2)F_j^2) - 2 L_j^{n+1}/(5(n+1)F_j)",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = SPEC_J1_A, .tag = "SPEC_J1_A",
                 .formula = "sum_{n-k even} C(n,k) (2^k L_k - 2) sqrt5^{n-k} B_{n-k+2}/(n-k+2) = (2^{n+2} L_{n+2} - 2)/(5(n+1)(n+2)) - 1",
                 .j_fixed = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = SPEC_J1_B, .tag = "SPEC_J1_B",
                 .formula = "sum_{n-k even} C(n,k) (2^k L_k + 2) sqrt5^{n-k} (2^{n-k+2}-1)/(n-k+2) B_{n-k+2} = 1",
                 .j_fixed = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = SPEC_J1_C, .tag = "SPEC_J1_C",
                 .formula = "sum_{n-k even} C(n,k) 2^k F_k sqrt5^{n-k} B_{n-k+2}/(n-k+2) + (2/sqrt5) sum_{n-k odd, k<n} C(n,k) sqrt5^{n-k} B_{n-k+1}/(n-k+1) = 2/(5(n+1)) (2^{n+1} F_{n+2}/(n+2) - 1)",
                 .j_fixed = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = REM1_A, .tag = "REM1_A",
                 .formula = "sum_{k<=n/2} C(n,2k) (n-2k-1)/((k+1)(2k+1)) (L_j^{2k+2} - 2^{2k+1} L_{2j(k+1)})/(5F_j^2)^{k+1} B_{n-2k} = (L_j/(sqrt5 F_j))^n",
                 .parity = Parity::even, .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = REM1_B, .tag = "REM1_B",
                 .formula = "sum_{k<=n/2} C(n,2k) (2^{n-2k+2}-1)/(n-2k+2) (2 L_j^{2k} + 2^{2k} L_{2jk})/(5F_j^2)^k B_{n-2k+2} = (L_j/(sqrt5 F_j))^n",
                 .parity = Parity::even, .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = REM1_C, .tag = "REM1_C",
                 .formula = "sum_{k<=n/2} C(n,2k) (4/(5F_j^2))^k ((n-2k-1)/(2k+1) F_{j(2k+1)} + F_j L_j^{2k}/4^k) B_{n-2k} = 0",
                 .parity = Parity::even, .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T2A, .tag = "T2A",
                 .formula = "sum C(n,k) 2^k/(k+1) ((-1)^k F_{j(k+1)}/L_j^k (L_j/(sqrt5 F_j))^n - (1+(-1)^n) (2^{k+3}-2)/(k+2) F_j B_{k+2}) = 0",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T2A_PART, .tag = "T2A_PART",
                 .formula = "sum_{k=1}^{2n} (-1)^k C(2n-1,k-1) 2^k F_{jk}/(k L_j^k) = 0", .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T2B, .tag = "T2B",
                 .formula = "sum C(n,k) 2^k ((-1)^k L_{jk}/L_j^k (L_j/(sqrt5 F_j))^n - (1+(-1)^n)/(n-k+1) B_k) = 1 + (-1)^n",
                 .n_min = 1, .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T2B_PART, .tag = "T2B_PART",
                 .formula = "sum_{k=0}^{2n-1} (-1)^k C(2n-1,k) 2^k L_{jk}/L_j^k = 0", .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T2_CONSEQ, .tag = "T2_CONSEQ", .formula = "sum C(n,k) 2^k B_k/(n-k+1) = 0",
                 .parity = Parity::even, .n_min = 2, .uses_j = false, .oracle = OracleKind::egf},
    IdentityInfo{.id = T3A, .tag = "T3A",
                 .formula = "sum_{k<=n/2} C(n,2k) (5F_j^2)^k (F_{j(n-2k+1)}/(n-2k+1) B_{2k} - F_j L_j^{n-2k}/2^n) = 0",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T3B, .tag = "T3B",
                 .formula = "sum_{k<=n/2} C(n,2k) (5F_j^2)^k/(2k+1) ((4^{k+1}-1)/(k+1) L_{j(n-2k)} B_{2k+2} - L_j^{n-2k}/2^n) = 0",
                 .j_min = 1, .oracle = OracleKind::egf},
    IdentityInfo{.id = T3A_EVEN, .tag = "T3A_EVEN",
                 .formula = "sum_{k<=n/2} C(n,2k) (5F_j^2)^k F_{j(n-2k+1)}/(n-2k+1) B_{2k} = F_j L_{nj}/2", .j_min = 1,
                 .oracle = OracleKind::egf},
    IdentityInfo{.id = T7A, .tag = "T7A",
                 .formula = "sum C(n,k) F_{jk+m} B_{n-k}(x) z^k = (alpha^m B_n(x + alpha^j z) - beta^m B_n(x + beta^j z))/sqrt5",
                 .uses_m = true, .uses_z = true, .kind = ValueKind::poly_in_x},
    IdentityInfo{.id = T7B, .tag = "T7B",
                 .formula = "sum C(n,k) L_{jk+m} B_{n-k}(x) z^k = alpha^m B_n(x + alpha^j z) + beta^m B_n(x + beta^j z)",
                 .uses_m = true, .uses_z = true, .kind = ValueKind::poly_in_x},
    IdentityInfo{.id = C8A, .tag = "C8A",
                 .formula = "sum C(n,k) F_{jk+m} B_{n-k} z^k = (alpha^m B_n(alpha^j z) - beta^m B_n(beta^j z))/sqrt5",
                 .uses_m = true, .kind = ValueKind::poly_in_z},
    IdentityInfo{.id = C8B, .tag = "C8B",
                 .formula = "sum C(n,k) L_{jk+m} B_{n-k} z^k = alpha^m B_n(alpha^j z) + beta^m B_n(beta^j z)",
                 .uses_m = true, .kind = ValueKind::poly_in_z},
    IdentityInfo{.id = T9A, .tag = "T9A",
                 .formula = "sum C(n,k) F_{jk+m}/L_j^k B_{n-k} = F_m B_n(alpha^j/L_j) (n even), L_m/sqrt5 B_n(alpha^j/L_j) (n odd)",
                 .uses_m = true},
    IdentityInfo{.id = T9B, .tag = "T9B",
                 .formula = "sum C(n,k) L_{jk+m}/L_j^k B_{n-k} = L_m B_n(alpha^j/L_j) (n even), sqrt5 F_m B_n(alpha^j/L_j) (n odd)",
                 .uses_m = true},
    IdentityInfo{.id = C10A, .tag = "C10A", .formula = "sum C(n,k) F_{jk-1}/L_j^k B_{n-k} = B_n(alpha^j/L_j)",
                 .parity = Parity::even},
    IdentityInfo{.id = C10B, .tag = "C10B", .formula = "sum_{k>=1} C(n,k) F_{jk}/L_j^k B_{n-k} = 0", .parity = Parity::even},
    IdentityInfo{.id = C10C, .tag = "C10C", .formula = "sum C(n,k) L_{jk-1}/L_j^k B_{n-k} = sqrt5 B_n(alpha^j/L_j)",
                 .parity = Parity::odd},
    IdentityInfo{.id = C10D, .tag = "C10D", .formula = "sum C(n,k) L_{jk}/L_j^k B_{n-k} = 0", .parity = Parity::odd},
    IdentityInfo{.id = T11A, .tag = "T11A",
                 .formula = "sum (-1)^k C(n,k) F_{jk+m}/L_j^k B_{n-k} = F_m B_n(alpha^j/L_j) + n F_{j(n-1)+m}/L_j^{n-1} (n even), -L_m/sqrt5 B_n(alpha^j/L_j) - n F_{j(n-1)+m}/L_j^{n-1} (n odd)",
                 .uses_m = true},
    IdentityInfo{.id = T11B, .tag = "T11B",
                 .formula = "sum (-1)^k C(n,k) L_{jk+m}/L_j^k B_{n-k} = L_m B_n(alpha^j/L_j) + n L_{j(n-1)+m}/L_j^{n-1} (n even), -sqrt5 F_m B_n(alpha^j/L_j) - n L_{j(n-1)+m}/L_j^{n-1} (n odd)",
                 .uses_m = true},
    IdentityInfo{.id = T12A, .tag = "T12A", .formula = "sum C(n,k) 2^k F_{jk}/L_j^k B_{n-k} = n/sqrt5 (sqrt5 F_j/L_j)^{n-1}",
                 .parity = Parity::even},
    IdentityInfo{.id = T12B, .tag = "T12B", .formula = "sum C(n,k) 2^k L_{jk}/L_j^k B_{n-k} = n (sqrt5 F_j/L_j)^{n-1}",
                 .parity = Parity::odd},
    IdentityInfo{.id = T13, .tag = "T13",
                 .formula = "sum C(n,k) 2^k F_{jk} (s sqrt5 F_j)^{n-k} B_{n-k}(x) = n F_j ((s sqrt5 F_j x + L_j)^{n-1} + (s sqrt5 F_j (x-1) + L_j)^{n-1}), s = +-1",
                 .j_min = 1, .uses_sign = true, .kind = ValueKind::poly_in_x},
    IdentityInfo{.id = C21, .tag = "C21",
                 .formula = "sum C(n,k) 2^k F_{jk} (s sqrt5 F_j)^{n-k} B_{n-k} = n F_j (L_j^{n-1} + (-s sqrt5 F_j + L_j)^{n-1}), s = +-1",
                 .j_min = 1, .uses_sign = true},
    IdentityInfo{.id = C22A, .tag = "C22A",
                 .formula = "sum C(n,k) 2^k F_{jk} (sqrt5 F_j)^{n-k} B_{n-k}(alpha) = n F_j 2^{1-n} ((sqrt5 F_j + L_{j+3})^{n-1} + (-sqrt5 F_j + L_{j+3})^{n-1})",
                 .j_min = 1},
    IdentityInfo{.id = C22B, .tag = "C22B",
                 .formula = "sum C(n,k) 2^k F_{jk} (-sqrt5 F_j)^{n-k} B_{n-k}(alpha) = n F_j 2^{1-n} ((sqrt5 F_j - L_{j-3})^{n-1} + (-sqrt5 F_j - L_{j-3})^{n-1})",
                 .j_min = 3},
    IdentityInfo{.id = EX_J3, .tag = "EX_J3", .formula = "sum C(n,k) (-sqrt5)^{n-k} F_{3k} B_{n-k}(alpha) = (-1)^{n-1} n L_{n-1}",
                 .j_fixed = 3},
    IdentityInfo{.id = EX_BETA, .tag = "EX_BETA", .formula = "sum C(n,k) 2^k F_k sqrt5^{n-k} B_{n-k}(beta) = (-1)^{n-1} n L_{2n-2}",
                 .j_fixed = 1},
    IdentityInfo{.id = C23, .tag = "C23",
                 .formula = "sum C(n,k) 2^k F_{jk} (s sqrt5 F_j)^{n-k} (q^{1-(n-k)} - 1) B_{n-k} = n F_j q^{1-n} sum_{r=1}^{q-1} ((s sqrt5 F_j r + q L_j)^{n-1} + (s sqrt5 F_j (r-q) + q L_j)^{n-1})",
                 .j_min = 1, .uses_q = true, .uses_sign = true},
    IdentityInfo{.id = EX_Q2_GEN, .tag = "EX_Q2_GEN",
                 .formula = "sum C(n,k) 2^k F_{jk} (sqrt5 F_j)^{n-k} (2^{1-(n-k)} - 1) B_{n-k} = n F_j 2^{1-n} ((L_j + 2 alpha^j)^{n-1} + (L_j + 2 beta^j)^{n-1}) = n F_j 2^{1-n} sum_m C(n-1,m) 2^m L_{jm} L_j^{n-1-m}",
                 .j_min = 1},
    IdentityInfo{.id = EX_Q2_J1, .tag = "EX_Q2_J1", .formula = "sum C(n,k) (sqrt5/4)^k (2 - 2^k) F_{n-k} B_k = n L_{3(n-1)}/2^{2n-1}",
                 .j_fixed = 1},
    IdentityInfo{.id = EX_Q3_GEN, .tag = "EX_Q3_GEN",
                 .formula = "sum C(n,k) 6^k (1 - 3^{n-k-1}) F_{jk} (sqrt5 F_j)^{n-k} B_{n-k} = n F_j sum_m C(n-1,m) (2^{n-1} + 4^m) L_j^{n-1-m} L_{jm}",
                 .j_min = 1},
    IdentityInfo{.id = EX_Q3_J1, .tag = "EX_Q3_J1",
                 .formula = "sum C(n,k) 6^k sqrt5^{n-k} (1 - 3^{n-k-1}) F_k B_{n-k} = n 2^{n-1} L_{2n-2} + sum_{m=1}^n C(n,m) m 4^{m-1} L_{m-1}",
                 .j_fixed = 1},
    IdentityInfo{.id = LEM6_F, .tag = "LEM6_F",
                 .formula = "sum_k F_{jk+m} C(n,k) B_{n-k}(x) z^k = (alpha^m h(alpha^j z) - beta^m h(beta^j z))/sqrt5, h(t) = B_n(x+t)",
                 .uses_m = true, .uses_x = true, .uses_z = true},
    IdentityInfo{.id = LEM6_L, .tag = "LEM6_L",
                 .formula = "sum_k L_{jk+m} C(n,k) B_{n-k}(x) z^k = alpha^m h(alpha^j z) + beta^m h(beta^j z), h(t) = B_n(x+t)",
                 .uses_m = true, .uses_x = true, .uses_z = true},
};
// clang-format on

constexpr bool catalog_in_order()
{
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (static_cast<std::size_t>(catalog[i].id) != i) {
            return false;
        }
    }
    return true;
}

} // namespace

std::span<const IdentityInfo> identity_catalog() { return catalog; }

const IdentityInfo &identity_info(IdentityId id) { return catalog.at(static_cast<std::size_t>(id)); }

std::string_view identity_tag(IdentityId id) { return identity_info(id).tag; }

std::optional<IdentityId> parse_identity_tag(std::string_view tag)
{
    for (const auto &info : catalog) {
        if (info.tag == tag) {
            return info.id;
        }
    }
    return std::nullopt;
}

std::string_view status_name(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::Equal:
        return "Equal";
    case VerdictStatus::Unequal:
        return "Unequal";
    case VerdictStatus::NotApplicable:
        return "NotApplicable";
    }
    return "?";
}

std::optional<std::string> check_domain(const IdentityInfo &info, const IdentityParams &p)
{
    const std::string tag(info.tag);
    if (p.n < 0) {
        throw ParameterError(tag + ": n must be non-negative");
    }
    if (info.uses_j) {
        if (info.j_fixed && p.j != *info.j_fixed) {
            throw ParameterError(tag + ": j must be " + std::to_string(*info.j_fixed));
        }
        if (info.j_min != any_j && p.j < info.j_min) {
            throw ParameterError(tag + ": j must be at least " + std::to_string(info.j_min));
        }
    }
    if (info.uses_m && !p.m) {
        throw ParameterError(tag + ": m is required");
    }
    if (info.uses_q) {
        if (!p.q) {
            throw ParameterError(tag + ": q is required");
        }
        if (*p.q < 2) {
            throw ParameterError(tag + ": q must be at least 2");
        }
    }
    if (info.uses_x && !p.x) {
        throw ParameterError(tag + ": x is required");
    }
    if (info.uses_z && !p.z) {
        throw ParameterError(tag + ": z is required");
    }
    if (info.uses_sign && (!p.sign || (*p.sign != 1 && *p.sign != -1))) {
        throw ParameterError(tag + ": sign must be +1 or -1");
    }

    if (p.n < info.n_min) {
        return "requires n >= " + std::to_string(info.n_min);
    }
    if (info.parity == Parity::even && p.n % 2 != 0) {
        return "requires n even";
    }
    if (info.parity == Parity::odd && p.n % 2 == 0) {
        return "requires n odd";
    }
    return std::nullopt;
}

static_assert(catalog_in_order(), "catalog must follow IdentityId order");

} // namespace fibbern
