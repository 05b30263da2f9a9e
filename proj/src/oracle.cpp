#include <fibbern/oracle.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/egf.hpp>
#include <fibbern/sequences.hpp>

#include "identities_internal.hpp"

namespace fibbern
{

namespace
{

using Q = QuadExt;
using P = DensePoly;
using enum IdentityId;

// Every generating series the convolution oracles read, for one j and order.
// F_j and L_j enter only through the sequence series and the constants below;
// the constants are taken from powers of alpha and beta.
struct Bundle {
    Q F;  // F_j
    Q L;  // L_j
    Q c;  // sqrt5 F_j / 2
    LaurentEgf Fs, E;
    LaurentEgf FF, LL, FL;
    LaurentEgf l1a, l1b, l1c;
    LaurentEgf XY, XS;          // X = 5 F(z)^2 against the regularized 1/sinh^2 and z^-2
    LaurentEgf LLcosh;          // L(z)^2 / cosh^2
    LaurentEgf FLY, EK, FLS, EZ; // pieces of the mixed identity
    LaurentEgf A1, A2;          // both sides of the tanh form
    LaurentEgf A3, CS;          // both sides of the coth form
    LaurentEgf G, BE;           // 1 - tanh(z/2) and B(2z) (e^z - 1)/z
    LaurentEgf VW, Ecosh2, Ehalf_cosh, Ltanh, Esinh2, Ehalf_sinh;
};

std::shared_ptr<const Bundle> build_bundle(long j, long N)
{
    auto b = std::make_shared<Bundle>();
    const Q a = golden_alpha().pow(j), be = golden_beta().pow(j);
    b->F = (a - be) / sqrt5();
    b->L = a + be;
    b->c = (a - be) / Rational(2);
    const Q &c = b->c;
    const Q one(1);

    b->Fs = egf_fibonacci(j, N);
    const auto Ls = egf_lucas(j, N);
    b->E = egf_exp(b->L, N);
    const auto sh = egf_hyperbolic(Hyperbolic::sinh, c, N);
    const auto ch = egf_hyperbolic(Hyperbolic::cosh, c, N);
    const auto zm1 = egf_monomial(one, -1, N);
    const auto zm2 = egf_monomial(one, -2, N);

    b->FF = b->Fs * b->Fs;
    b->LL = Ls * Ls;
    b->FL = b->Fs * Ls;
    b->l1a = Q(Rational(4, 5)) * (b->E * sh * sh);
    b->l1b = Q(4) * (b->E * ch * ch);
    b->l1c = (Q(2) / sqrt5()) * (b->E * egf_hyperbolic(Hyperbolic::sinh, Q(2) * c, N));

    const Q fsq5 = Q(5) * b->F * b->F;
    const auto X = Q(5) * b->FF;
    const auto Y = Q(Rational(1, 4)) *
                   (egf_monomial(Q(4) / fsq5, -2, N) - egf_hyperbolic(Hyperbolic::inv_sinh_sq, c, N));
    b->XY = X * Y;
    b->XS = X * zm2;
    b->LLcosh = b->LL * egf_hyperbolic(Hyperbolic::inv_cosh_sq, c, N);

    const auto K = egf_hyperbolic(Hyperbolic::coth, c, N) - egf_monomial(c.inverse(), -1, N);
    b->FLY = b->FL * Y;
    b->EK = b->E * K;
    b->FLS = b->FL * zm2;
    b->EZ = b->E * zm1;

    const auto ehalf_neg = egf_exp(-b->L / Rational(2), N);
    b->A1 = (sqrt5() / Rational(2)) * (b->Fs * ehalf_neg);
    b->A2 = egf_hyperbolic(Hyperbolic::tanh, c, N) * ch;
    b->A3 = Q(Rational(1, 2)) * (Ls * ehalf_neg);
    b->CS = egf_hyperbolic(Hyperbolic::coth, c, N) * sh;

    b->G = egf_monomial(one, 0, N) - egf_hyperbolic(Hyperbolic::tanh, Q(Rational(1, 2)), N);
    std::vector<Q> b2;
    for (long n = 0; n <= N; ++n) {
        b2.emplace_back(bernoulli_number(n) * Rational(2).pow(n));
    }
    b->BE = egf_from_coefficients(std::move(b2)) * ((egf_exp(one, N) - egf_monomial(one, 0, N)) * zm1);

    b->VW = (b->Fs * zm1) * (egf_monomial(c, 1, N) * egf_hyperbolic(Hyperbolic::coth, c, N));
    b->Ecosh2 = b->E * egf_hyperbolic(Hyperbolic::cosh, Q(2) * c, N);
    const auto ehalf = egf_exp(b->L / Rational(2), N);
    b->Ehalf_cosh = ehalf * ch;
    b->Ltanh = Ls * (egf_hyperbolic(Hyperbolic::tanh, c, N) * zm1);
    b->Esinh2 = b->E * (egf_hyperbolic(Hyperbolic::sinh, Q(2) * c, N) * zm1);
    b->Ehalf_sinh = ehalf * (sh * zm1);
    return b;
}

std::shared_ptr<const Bundle> bundle(long j, long order)
{
    static std::mutex mutex;
    static std::map<std::pair<long, long>, std::shared_ptr<const Bundle>> cache;
    // Round up so neighbouring requests share one bundle.
    const long N = (order + 2 + 7) / 8 * 8;
    std::lock_guard lock(mutex);
    auto &slot = cache[{j, N}];
    if (!slot) {
        slot = build_bundle(j, N);
    }
    return slot;
}

Q at(const LaurentEgf &s, long n) { return egf_coeff(s, n); }

// Highest coefficient index an identity reads at this n.
long needed_order(IdentityId id, long n)
{
    switch (id) {
    case T2A_PART:
    case T2B_PART:
        return 2 * n;
    default:
        return n + 1;
    }
}

std::pair<Q, Q> egf_sides(IdentityId id, const IdentityParams &p, long order)
{
    const long n = p.n;
    const long j = identity_info(id).uses_j ? p.j : 1;
    const auto b = bundle(j, std::max(order, needed_order(id, n)));
    const Q &F = b->F, &L = b->L, &c = b->c;
    const Q s5F = Q(2) * c;
    const Q fsq5 = Q(5) * F * F;

    switch (id) {
    case L1A: return {at(b->FF, n), at(b->l1a, n)};
    case L1B: return {at(b->LL, n), at(b->l1b, n)};
    case L1C: return {at(b->FL, n), at(b->l1c, n)};
    case T1A:
    case SPEC_J1_A: return {at(b->XY, n), at(b->XS, n) / fsq5 - at(b->E, n)};
    case T1B:
    case SPEC_J1_B: return {at(b->LLcosh, n) / Rational(4), at(b->E, n)};
    case T1C:
    case SPEC_J1_C:
        return {at(b->FLY, n) + at(b->EK, n) / sqrt5(), at(b->FLS, n) / fsq5 - Q(2) / (Q(5) * F) * at(b->EZ, n)};
    case REM1_A: {
        const Q scale = s5F.pow(n);
        return {(at(b->XS, n) / fsq5 - at(b->XY, n)) / scale, at(b->E, n) / scale};
    }
    case REM1_B: {
        const Q scale = s5F.pow(n);
        return {at(b->LLcosh, n) / Rational(4) / scale, at(b->E, n) / scale};
    }
    case REM1_C: {
        if (n == 0) {
            return {Q(), Q()};
        }
        // The terms k < n/2 are a multiple of the mixed identity at n - 1;
        // the last term is added separately.
        const Q factor = Q(n) * fsq5 / (Q(2) * fsq5.pow(n / 2));
        const Q last = -(Q(4) / fsq5).pow(n / 2) * at(b->Fs, n + 1) / Rational(n + 1) +
                       F * at(b->E, n) / fsq5.pow(n / 2);
        const long m = n - 1;
        const Q lhs1 = at(b->FLY, m) + at(b->EK, m) / sqrt5();
        const Q rhs1 = at(b->FLS, m) / fsq5 - Q(2) / (Q(5) * F) * at(b->EZ, m);
        return {factor * lhs1 + last, factor * rhs1 + last};
    }
    case T2A: {
        const Q first = (Q(-2) / s5F).pow(n) * (Q(2) / sqrt5());
        const Q second = F / c.pow(n + 1);
        const Q cl = at(b->A1, n + 1) / Rational(n + 1);
        const Q cr = at(b->A2, n + 1) / Rational(n + 1);
        return {first * cl - second * cr, first * cr - second * cr};
    }
    case T2A_PART: {
        if (n == 0) {
            return {Q(), Q()};
        }
        const long m = 2 * n - 1;
        const Q f = -(Q(2) / L) * (Q(2) / sqrt5()) * (Q(-2) / L).pow(m) / Rational(m + 1);
        return {f * at(b->A1, m + 1), f * at(b->A2, m + 1)};
    }
    case T2B: {
        const Q f = Q(2) * (Q(-2) / s5F).pow(n);
        const Q mask(1 + neg_one_pow(n));
        return {f * at(b->A3, n) - mask * at(b->BE, n), f * at(b->CS, n) - mask * at(b->G, n)};
    }
    case T2B_PART: {
        if (n == 0) {
            return {Q(), Q()};
        }
        const long m = 2 * n - 1;
        const Q f = Q(2) * (Q(-2) / L).pow(m);
        return {f * at(b->A3, m), f * at(b->CS, m)};
    }
    case T2_CONSEQ: return {at(b->BE, n), at(b->G, n)};
    case T3A: {
        const Q sub = F * at(b->Ecosh2, n) / Rational(2).pow(n);
        return {at(b->VW, n) - sub, F * at(b->Ehalf_cosh, n) - sub};
    }
    case T3B: {
        const Q sub = at(b->Esinh2, n) / (s5F * Rational(2).pow(n));
        return {at(b->Ltanh, n) / s5F - sub, at(b->Ehalf_sinh, n) / c - sub};
    }
    case T3A_EVEN: return {at(b->VW, n), F * at(b->Ehalf_cosh, n)};
    default: break;
    }
    throw NoOracleError("no generating-function oracle for " + std::string(identity_tag(id)));
}

// ---- Binet closed forms ----

Rational Cb(long n, long k) { return Rational(binomial(n, k)); }

struct Golden {
    Q a, b;  // alpha^j, beta^j
    Q L;     // alpha^j + beta^j
    Q c;     // alpha^j - beta^j = sqrt5 F_j
    explicit Golden(long j)
        : a(golden_alpha().pow(j)), b(golden_beta().pow(j)), L(a + b), c(a - b)
    {
    }
};

template <class Fn>
std::vector<TransformTerm> make_terms(long lo, long hi, Fn v)
{
    std::vector<TransformTerm> terms;
    for (long k = lo; k <= hi; ++k) {
        terms.push_back({v(k), k});
    }
    return terms;
}

IdentityValue closed(const std::vector<TransformTerm> &terms, long i, long m, LucasKind kind, const Q &z = Q(1))
{
    return lucas_transform_closed(terms, i, m, z, kind);
}

// sum_k (+-1)^k C(n,k) w^k B_{n-k} / L_j^k against S_{jk+m}
IdentityValue ratio_closed(const IdentityParams &p, LucasKind kind, long m, int sgn, long k0 = 0, long weight = 1)
{
    const long n = p.n;
    const Golden g(p.j);
    const auto terms = make_terms(k0, n, [&](long k) -> IdentityValue {
        const int s = sgn < 0 ? neg_one_pow(k) : 1;
        return Q(Rational(s) * Cb(n, k) * Rational(weight).pow(k) * bernoulli_number(n - k)) / g.L.pow(k);
    });
    return closed(terms, p.j, m, kind);
}

// sum_k C(n,k) 2^k c^{n-k} B_{n-k}(x) against F_{jk}, for a scalar point x
IdentityValue scaled_closed(long n, long i, const Q &c, const Q &x, long weight = 2)
{
    const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
        return Q(Cb(n, k) * Rational(weight).pow(k)) * c.pow(n - k) * bernoulli_poly_at(n - k, x);
    });
    return closed(terms, i, 0, LucasKind::F);
}

IdentityValue binet_lhs(IdentityId id, const IdentityParams &p)
{
    const long n = p.n;
    switch (id) {
    case T7A:
    case T7B: {
        const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
            return bernoulli_poly(n - k) * Q(Cb(n, k));
        });
        return closed(terms, p.j, *p.m, id == T7A ? LucasKind::F : LucasKind::L, *p.z);
    }
    case C8A:
    case C8B: {
        std::vector<Q> coeffs;
        for (long k = 0; k <= n; ++k) {
            const std::vector<TransformTerm> one{{Q(Cb(n, k) * bernoulli_number(n - k)), k}};
            coeffs.push_back(std::get<Q>(closed(one, p.j, *p.m, id == C8A ? LucasKind::F : LucasKind::L)));
        }
        return P(coeffs);
    }
    case T9A: return ratio_closed(p, LucasKind::F, *p.m, 1);
    case T9B: return ratio_closed(p, LucasKind::L, *p.m, 1);
    case C10A: return ratio_closed(p, LucasKind::F, -1, 1);
    case C10B: return ratio_closed(p, LucasKind::F, 0, 1, 1);
    case C10C: return ratio_closed(p, LucasKind::L, -1, 1);
    case C10D: return ratio_closed(p, LucasKind::L, 0, 1);
    case T11A: return ratio_closed(p, LucasKind::F, *p.m, -1);
    case T11B: return ratio_closed(p, LucasKind::L, *p.m, -1);
    case T12A: return ratio_closed(p, LucasKind::F, 0, 1, 0, 2);
    case T12B: return ratio_closed(p, LucasKind::L, 0, 1, 0, 2);
    case T13: {
        const Q c = Q(*p.sign) * Golden(p.j).c;
        const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
            return bernoulli_poly(n - k) * (Q(Cb(n, k) * Rational(2).pow(k)) * c.pow(n - k));
        });
        return closed(terms, p.j, 0, LucasKind::F);
    }
    case C21: return scaled_closed(n, p.j, Q(*p.sign) * Golden(p.j).c, Q());
    case C22A: return scaled_closed(n, p.j, Golden(p.j).c, golden_alpha());
    case C22B: return scaled_closed(n, p.j, -Golden(p.j).c, golden_alpha());
    case EX_J3: return scaled_closed(n, 3, -sqrt5(), golden_alpha(), 1);
    case EX_BETA: return scaled_closed(n, 1, sqrt5(), golden_beta());
    case C23:
    case EX_Q2_GEN: {
        const long q = id == C23 ? *p.q : 2;
        const Q c = Q(id == C23 ? *p.sign : 1) * Golden(p.j).c;
        const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
            return Q(Cb(n, k) * Rational(2).pow(k) * (Rational(q).pow(1 - (n - k)) - Rational(1)) *
                     bernoulli_number(n - k)) *
                   c.pow(n - k);
        });
        return closed(terms, p.j, 0, LucasKind::F);
    }
    case EX_Q2_J1: {
        const Q r = sqrt5() / Rational(4);
        const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
            return Q(Cb(n, k) * (Rational(2) - Rational(2).pow(k)) * bernoulli_number(k)) * r.pow(k);
        });
        // F_{n-k} = F_{(-1)k + n}
        return closed(terms, -1, n, LucasKind::F);
    }
    case EX_Q3_GEN:
    case EX_Q3_J1: {
        const Q c = id == EX_Q3_GEN ? Golden(p.j).c : sqrt5();
        const long i = id == EX_Q3_GEN ? p.j : 1;
        const auto terms = make_terms(0, n, [&](long k) -> IdentityValue {
            return Q(Cb(n, k) * Rational(6).pow(k) * (Rational(1) - Rational(3).pow(n - k - 1)) *
                     bernoulli_number(n - k)) *
                   c.pow(n - k);
        });
        return closed(terms, i, 0, LucasKind::F);
    }
    case LEM6_F:
    case LEM6_L: {
        const Golden g(p.j);
        const Q ha = bernoulli_poly_at(n, *p.x + g.a * *p.z);
        const Q hb = bernoulli_poly_at(n, *p.x + g.b * *p.z);
        const Q am = golden_alpha().pow(*p.m), bm = golden_beta().pow(*p.m);
        return id == LEM6_F ? (am * ha - bm * hb) / sqrt5() : am * ha + bm * hb;
    }
    default: break;
    }
    throw NoOracleError("no Binet oracle for " + std::string(identity_tag(id)));
}

} // namespace

bool has_oracle(IdentityId) { return true; }

namespace
{

IdentityVerdict run_oracle(IdentityId id, const IdentityParams &params, const OracleOptions &options,
                           const IdentityValue *known_rhs)
{
    const auto &info = identity_info(id);
    if (!has_oracle(id)) {
        throw NoOracleError("no oracle for " + std::string(info.tag));
    }
    IdentityVerdict v;
    v.id = id;
    v.params = params;
    if (!info.uses_j) {
        v.params.j = 1;
    }
    if (auto reason = check_domain(info, params)) {
        v.status = VerdictStatus::NotApplicable;
        v.note = std::move(*reason);
        if (info.kind != ValueKind::scalar) {
            v.lhs = P();
            v.rhs = P();
        }
        return v;
    }
    if (info.oracle == OracleKind::egf) {
        auto [l, r] = egf_sides(id, v.params, options.order);
        v.lhs = std::move(l);
        v.rhs = std::move(r);
        v.note = "generating-function oracle";
    } else {
        v.lhs = binet_lhs(id, v.params);
        v.rhs = known_rhs ? *known_rhs : evaluate_sides(id, v.params).rhs;
        v.note = "Binet oracle";
    }
    v.status = v.lhs == v.rhs ? VerdictStatus::Equal : VerdictStatus::Unequal;
    return v;
}

} // namespace

IdentityVerdict oracle_check(IdentityId id, const IdentityParams &params, const OracleOptions &options)
{
    return run_oracle(id, params, options, nullptr);
}

IdentityVerdict oracle_check(const IdentityVerdict &direct, const OracleOptions &options)
{
    const bool reuse = direct.status != VerdictStatus::NotApplicable;
    return run_oracle(direct.id, direct.params, options, reuse ? &direct.rhs : nullptr);
}

bool oracle_agrees(const IdentityVerdict &direct, const IdentityVerdict &oracle)
{
    return direct.status == oracle.status && direct.lhs == oracle.lhs && direct.rhs == oracle.rhs;
}

} // namespace fibbern
