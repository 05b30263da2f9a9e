#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <set>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/grid.hpp>
#include <fibbern/identities.hpp>
#include <fibbern/ledger.hpp>
#include <fibbern/oracle.hpp>
#include <fibbern/sequences.hpp>

using namespace fibbern;
using enum IdentityId;

namespace
{

QuadExt scalar(const IdentityValue &v) { return std::get<QuadExt>(v); }

IdentityParams at(long n, long j)
{
    IdentityParams p;
    p.n = n;
    p.j = j;
    return p;
}

IdentityParams with_m(long n, long j, long m)
{
    auto p = at(n, j);
    p.m = m;
    return p;
}

QuadExt F(long n) { return QuadExt(Rational(fib(n))); }

} // namespace

TEST_CASE("catalog is closed and ordered")
{
    const auto cat = identity_catalog();
    CHECK(cat.size() == 47);
    std::set<std::string_view> tags;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(static_cast<std::size_t>(cat[i].id) == i);
        CHECK(parse_identity_tag(cat[i].tag) == cat[i].id);
        CHECK(identity_tag(cat[i].id) == cat[i].tag);
        tags.insert(cat[i].tag);
    }
    CHECK(tags.size() == cat.size());
    CHECK_FALSE(parse_identity_tag("NOSUCH").has_value());
}

TEST_CASE("listed evaluations")
{
    auto v = evaluate_identity(L1C, at(1, 1));
    CHECK(v.status == VerdictStatus::Equal);
    CHECK(scalar(v.lhs) == QuadExt(2));
    CHECK(scalar(v.rhs) == QuadExt(2));

    v = evaluate_identity(T12A, at(2, 1));
    CHECK(v.status == VerdictStatus::Equal);
    CHECK(scalar(v.lhs) == QuadExt(2));

    v = evaluate_identity(T12A, at(3, 1));
    CHECK(v.status == VerdictStatus::NotApplicable);
    CHECK(v.note == "requires n even");

    v = evaluate_identity(T9A, with_m(1, 1, 0));
    CHECK(v.status == VerdictStatus::Equal);
    CHECK(scalar(v.lhs) == QuadExt(1));
    CHECK(scalar(v.rhs) == QuadExt(1));

    v = evaluate_identity(C10B, at(2, 1));
    CHECK(v.status == VerdictStatus::Equal);
    CHECK(scalar(v.lhs).is_zero());

    v = evaluate_identity(T2_CONSEQ, at(2, 1));
    CHECK(v.status == VerdictStatus::Equal);
    CHECK(scalar(v.lhs).is_zero());
    CHECK(evaluate_identity(T2_CONSEQ, at(0, 1)).status == VerdictStatus::NotApplicable);

    // T13 at n = 1: the k = 0 term vanishes and both sides are 2 F_j.
    for (long j = 1; j <= 5; ++j) {
        for (int s : {1, -1}) {
            auto p = at(1, j);
            p.sign = s;
            v = evaluate_identity(T13, p);
            CHECK(v.status == VerdictStatus::Equal);
            CHECK(std::get<DensePoly>(v.lhs) == DensePoly::constant(QuadExt(2) * F(j)));
        }
    }
}

TEST_CASE("listed oracle runs")
{
    auto o = oracle_check(L1A, at(2, 1));
    CHECK(o.status == VerdictStatus::Equal);
    CHECK(scalar(o.lhs) == QuadExt(2));
    CHECK(oracle_agrees(evaluate_identity(L1A, at(2, 1)), o));

    for (long j = 1; j <= 4; ++j) {
        for (long m = -4; m <= 4; ++m) {
            const auto p = with_m(0, j, m);
            const auto d = evaluate_identity(C8A, p);
            const auto c = oracle_check(C8A, p);
            CHECK(std::get<DensePoly>(d.lhs) == DensePoly::constant(F(m)));
            CHECK(std::get<DensePoly>(c.lhs) == DensePoly::constant(F(m)));
        }
    }
}

TEST_CASE("domain violations are errors, side conditions are not")
{
    auto p = at(3, 1);
    p.q = 1;
    p.sign = 1;
    CHECK_THROWS_AS(evaluate_identity(C23, p), ParameterError);
    CHECK_THROWS_AS(evaluate_identity(C22B, at(3, 2)), ParameterError);
    CHECK_NOTHROW(evaluate_identity(C22B, at(3, 3)));
    CHECK_THROWS_AS(evaluate_identity(T9A, at(2, 1)), ParameterError);
    CHECK_THROWS_AS(evaluate_identity(L1A, at(-1, 1)), ParameterError);
    CHECK_THROWS_AS(evaluate_identity(L1A, at(2, 0)), ParameterError);
    CHECK_THROWS_AS(evaluate_identity(EX_J3, at(2, 1)), ParameterError);
    p.q = 3;
    p.sign = 2;
    CHECK_THROWS_AS(evaluate_identity(C23, p), ParameterError);
    CHECK_THROWS_AS(oracle_check(C23, p), ParameterError);
    // The golden-ratio families accept any integer j.
    CHECK(evaluate_identity(T9A, with_m(4, -3, 2)).status == VerdictStatus::Equal);
}

TEST_CASE("transform sums and their closed forms")
{
    const std::vector<TransformTerm> square{{QuadExt(1), 2}};
    CHECK(scalar(lucas_transform(square, 1, 0, QuadExt(1), LucasKind::F)) == QuadExt(1));
    CHECK(scalar(lucas_transform_closed(square, 1, 0, QuadExt(1), LucasKind::F)) == QuadExt(1));
    const std::vector<TransformTerm> constant{{QuadExt(1), 0}};
    CHECK(scalar(lucas_transform(constant, 5, 3, QuadExt(1), LucasKind::L)) == QuadExt(4));
    CHECK(scalar(lucas_transform_closed(constant, 5, 3, QuadExt(1), LucasKind::L)) == QuadExt(4));

    // h = B_2(x + z) at x = 0 reproduces the polynomial identity at x = 0.
    std::vector<TransformTerm> b2;
    for (long k = 0; k <= 2; ++k) {
        b2.push_back({QuadExt(Rational(binomial(2, k))) * QuadExt(bernoulli_number(2 - k)), k});
    }
    auto p = with_m(2, 1, 0);
    p.z = QuadExt(1);
    const auto t7 = evaluate_identity(T7A, p);
    CHECK(scalar(lucas_transform(b2, 1, 0, QuadExt(1), LucasKind::F)) == std::get<DensePoly>(t7.lhs)(QuadExt(0)));

    const std::vector<TransformTerm> mixed{{QuadExt(1), 0}, {DensePoly::identity(), 1}};
    CHECK_THROWS_AS(lucas_transform(mixed, 1, 0, QuadExt(1), LucasKind::F), std::invalid_argument);
}

TEST_CASE("fault injection changes the verdict")
{
    EvalOptions opt;
    opt.fault = L1B;
    const auto v = evaluate_identity(L1B, at(3, 2), opt);
    CHECK(v.status == VerdictStatus::Unequal);
    CHECK(v.note == "fault injected");
    CHECK(evaluate_identity(L1A, at(3, 2), opt).status == VerdictStatus::Equal);
}

TEST_CASE("mod-free forms agree with the parity-restricted sums")
{
    for (long j = 1; j <= 8; ++j) {
        const QuadExt c = sqrt5() * F(j);
        for (long n = 0; n <= 30; n += 2) {
            INFO("n = " << n << ", j = " << j);
            const auto p = at(n, j);
            const auto a = evaluate_identity(REM1_A, p), ta = evaluate_identity(T1A, p);
            const auto b = evaluate_identity(REM1_B, p), tb = evaluate_identity(T1B, p);
            const auto cc = evaluate_identity(REM1_C, p), tc = evaluate_identity(T1C, p);
            CHECK(a.status == ta.status);
            CHECK(b.status == tb.status);
            CHECK(cc.status == tc.status);
            CHECK(scalar(b.rhs) * c.pow(n) == scalar(tb.rhs));
            CHECK(scalar(b.lhs) * c.pow(n) == scalar(tb.lhs));
        }
        CHECK(evaluate_identity(REM1_A, at(3, j)).status == VerdictStatus::NotApplicable);
    }
}

TEST_CASE("rational and irrational parts of the golden-ratio sum")
{
    for (long j = 1; j <= 8; ++j) {
        const QuadExt L(Rational(lucas(j)));
        for (long n = 0; n <= 30; n += 2) {
            QuadExt s;
            for (long k = 0; k <= n; ++k) {
                s += QuadExt(Rational(binomial(n, k)) * bernoulli_number(k)) * golden_alpha().pow(j * (n - k)) /
                     L.pow(n - k);
            }
            CHECK(s.irr().is_zero());
            const auto a = evaluate_identity(C10A, at(n, j));
            const auto b = evaluate_identity(C10B, at(n, j));
            CHECK(a.status == VerdictStatus::Equal);
            CHECK(b.status == VerdictStatus::Equal);
            CHECK(scalar(a.rhs) == s);
            CHECK(scalar(a.rhs).irr().is_zero());
        }
    }
}

TEST_CASE("polynomial identities hold coefficient-wise")
{
    GridSpec spec;
    spec.n_max = 20;
    spec.j_max = 6;
    spec.m_min = -3;
    spec.m_max = 3;
    VerifyOptions opt;
    opt.jobs = 4;
    const auto r = verify_grid({T7A, T7B, C8A, C8B, T13, T11A, T11B}, spec, opt);
    CHECK(r.count_unequal() == 0);
    CHECK(r.count_oracle_disagreements() == 0);
    for (const auto &rec : r.records) {
        if (identity_info(rec.verdict.id).kind != ValueKind::scalar) {
            REQUIRE(std::holds_alternative<DensePoly>(rec.verdict.lhs));
        }
    }
    // Pointwise spot checks of the certified polynomials.
    for (const auto &rec : r.records) {
        if (rec.verdict.id != T7A || rec.verdict.params.n != 7) {
            continue;
        }
        const auto &lhs = std::get<DensePoly>(rec.verdict.lhs);
        const auto &p = rec.verdict.params;
        for (const auto &x : GridSpec::default_x_values()) {
            QuadExt direct;
            for (long k = 0; k <= p.n; ++k) {
                direct += QuadExt(Rational(binomial(p.n, k))) * bernoulli_poly_at(p.n - k, x) * F(p.j * k + *p.m) *
                          p.z->pow(k);
            }
            CHECK(lhs(x) == direct);
        }
    }
}

TEST_CASE("grid examples")
{
    const GridSpec spec;
    const auto squares = verify_grid({L1A, L1B, L1C}, spec, {4});
    CHECK(squares.count_unequal() == 0);
    CHECK(squares.summaries.size() == 3);
    for (const auto &s : squares.summaries) {
        CHECK(s.oracle_checked == s.equal);
    }

    const auto t12 = verify_grid({T12A}, spec, {4});
    CHECK(t12.count_unequal() == 0);
    CHECK(t12.summaries[0].equal == 16 * 8);
    CHECK(t12.summaries[0].not_applicable == 15 * 8);

    const auto c10 = verify_grid({C10A}, spec, {4});
    CHECK(c10.count_unequal() == 0);
    for (const auto &rec : c10.records) {
        if (rec.verdict.status == VerdictStatus::Equal) {
            CHECK(scalar(rec.verdict.rhs).irr().is_zero());
        }
    }
}

TEST_CASE("grid parameters cover the degenerate indices")
{
    const GridSpec spec;
    const auto t9 = grid_params(identity_info(T9A), spec);
    bool n0 = false, m0 = false, mneg = false;
    for (const auto &p : t9) {
        n0 |= p.n == 0;
        m0 |= p.m == 0L;
        mneg |= p.m && *p.m < 0;
    }
    CHECK((n0 && m0 && mneg));
    CHECK(t9.size() == 31 * 8 * 11);
    CHECK(grid_params(identity_info(C22B), spec).front().j == 3);
    CHECK(grid_params(identity_info(EX_J3), spec).front().j == 3);
    CHECK(grid_params(identity_info(C23), spec).size() == 31 * 8 * 5 * 2);
    for (const auto &p : grid_params(identity_info(T7A), spec)) {
        CHECK(p.z.has_value());
        CHECK_FALSE(p.x.has_value());
    }
}

TEST_CASE("oracle agreement on a reduced grid of every identity")
{
    GridSpec spec;
    spec.n_max = 14;
    spec.j_max = 4;
    spec.m_min = -2;
    spec.m_max = 2;
    spec.q_max = 4;
    std::vector<IdentityId> all;
    for (const auto &info : identity_catalog()) {
        all.push_back(info.id);
    }
    const auto r = verify_grid(all, spec, {4});
    CHECK(r.count_unequal() == 0);
    CHECK(r.count_oracle_disagreements() == 0);
    for (const auto &s : r.summaries) {
        INFO(identity_tag(s.id));
        CHECK(s.oracle_checked == s.equal + s.not_applicable);
    }
}

TEST_CASE("reports are independent of the worker count")
{
    GridSpec spec;
    spec.n_max = 10;
    spec.j_max = 3;
    const std::vector<IdentityId> ids{T7A, C23, LEM6_L, T2B, REM1_C};
    const auto a = verify_grid(ids, spec, {1});
    const auto b = verify_grid(ids, spec, {6});
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].verdict.params == b.records[i].verdict.params);
        CHECK(a.records[i].verdict.lhs == b.records[i].verdict.lhs);
        CHECK(a.records[i].verdict.note == b.records[i].verdict.note);
    }
}

TEST_CASE("corrections ledger")
{
    const auto entries = discrepancy_ledger();
    std::set<IdentityId> ids;
    for (const auto &e : entries) {
        INFO(identity_tag(e.id));
        CHECK(e.confirmed);
        CHECK_FALSE(e.oracle_evidence.empty());
        CHECK(e.evidence.oracle_agreements == e.evidence.oracle_checked);
        CHECK(e.evidence.corrected_equal == e.evidence.tuples);
        ids.insert(e.id);
    }
    for (auto id : {LEM6_F, LEM6_L, C22A, EX_Q3_GEN, T2_CONSEQ}) {
        CHECK(ids.count(id) == 1);
    }
}
