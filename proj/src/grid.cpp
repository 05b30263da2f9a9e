#include <fibbern/grid.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

#include <fibbern/bernoulli.hpp>
#include <fibbern/binomial.hpp>
#include <fibbern/oracle.hpp>
#include <fibbern/sequences.hpp>

namespace fibbern
{

std::vector<QuadExt> GridSpec::default_x_values()
{
    return {QuadExt(0), QuadExt(1), QuadExt(Rational(1, 2)), QuadExt(-1), QuadExt(Rational(2, 3)), golden_alpha(),
            golden_beta()};
}

std::vector<ZSample> GridSpec::default_z_values()
{
    return {{Rational(1), true}, {Rational(-1), true}, {Rational(2), true}, {Rational(1), false}};
}

namespace
{

QuadExt z_value(const ZSample &s, long j)
{
    if (!s.over_lucas) {
        return QuadExt(s.scale);
    }
    return QuadExt(s.scale / Rational(lucas(j)));
}

std::vector<long> j_values(const IdentityInfo &info, const GridSpec &spec)
{
    if (!info.uses_j) {
        return {1};
    }
    if (info.j_fixed) {
        return {*info.j_fixed};
    }
    std::vector<long> out;
    for (long j = std::max(spec.j_min, info.j_min); j <= spec.j_max; ++j) {
        out.push_back(j);
    }
    return out;
}

template <class T>
std::vector<std::optional<T>> maybe(bool used, std::vector<T> values)
{
    if (!used) {
        return {std::nullopt};
    }
    return {values.begin(), values.end()};
}

std::vector<long> range(long lo, long hi)
{
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

} // namespace

std::vector<IdentityParams> grid_params(const IdentityInfo &info, const GridSpec &spec)
{
    std::vector<IdentityParams> out;
    const auto ms = maybe(info.uses_m, range(spec.m_min, spec.m_max));
    const auto qs = maybe(info.uses_q, range(2, spec.q_max));
    const auto xs = maybe(info.uses_x, spec.x_values);
    const auto signs = maybe(info.uses_sign, std::vector<int>{1, -1});
    const bool pointwise = info.uses_x;
    for (long n = std::max(0L, spec.n_min); n <= spec.n_max; ++n) {
        for (long j : j_values(info, spec)) {
            std::vector<std::optional<QuadExt>> zs{std::nullopt};
            if (info.uses_z) {
                zs.clear();
                for (const auto &s : pointwise ? spec.transform_z_values : spec.z_values) {
                    zs.emplace_back(z_value(s, j));
                }
            }
            for (const auto &m : ms) {
                for (const auto &q : qs) {
                    for (const auto &x : xs) {
                        for (const auto &z : zs) {
                            for (const auto &s : signs) {
                                out.push_back({n, j, m, q, x, z, s});
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t VerificationReport::count_unequal() const
{
    std::size_t total = 0;
    for (const auto &s : summaries) {
        total += s.unequal;
    }
    return total;
}

std::size_t VerificationReport::count_oracle_disagreements() const
{
    std::size_t total = 0;
    for (const auto &s : summaries) {
        total += s.oracle_disagreements;
    }
    return total;
}

VerificationReport verify_grid(const std::vector<IdentityId> &ids_in, const GridSpec &spec,
                               const VerifyOptions &options)
{
    auto ids = ids_in;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    struct Task {
        IdentityId id;
        IdentityParams params;
    };
    std::vector<Task> tasks;
    for (IdentityId id : ids) {
        for (auto &p : grid_params(identity_info(id), spec)) {
            tasks.push_back({id, std::move(p)});
        }
    }

    // Fill the shared tables once, before any worker reads them.
    const long reach = 2 * std::max(spec.n_max, 0L) + 4;
    bernoulli_prefetch(reach);
    binomial(reach, reach / 2);

    VerificationReport report;
    report.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    const OracleOptions oracle_options{options.oracle_order};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto &t = tasks[i];
            GridRecord rec;
            rec.verdict = evaluate_identity(t.id, t.params, options.eval);
            if (options.with_oracle && has_oracle(t.id)) {
                const auto o = oracle_check(rec.verdict, oracle_options);
                rec.oracle_agrees = oracle_agrees(rec.verdict, o);
                if (!*rec.oracle_agrees) {
                    if (!rec.verdict.note.empty()) {
                        rec.verdict.note += "; ";
                    }
                    rec.verdict.note += "oracle disagrees: " + value_to_string(o.lhs) + " vs " + value_to_string(o.rhs);
                }
            }
            report.records[i] = std::move(rec);
        }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < jobs; ++k) {
            pool.emplace_back(work);
        }
    }

    std::stable_sort(report.records.begin(), report.records.end(), [](const GridRecord &a, const GridRecord &b) {
        if (a.verdict.id != b.verdict.id) {
            return a.verdict.id < b.verdict.id;
        }
        return a.verdict.params < b.verdict.params;
    });

    for (IdentityId id : ids) {
        report.summaries.push_back({id});
    }
    for (const auto &rec : report.records) {
        auto &s = *std::find_if(report.summaries.begin(), report.summaries.end(),
                                [&](const IdentitySummary &x) { return x.id == rec.verdict.id; });
        switch (rec.verdict.status) {
        case VerdictStatus::Equal: ++s.equal; break;
        case VerdictStatus::Unequal: ++s.unequal; break;
        case VerdictStatus::NotApplicable: ++s.not_applicable; break;
        }
        if (rec.oracle_agrees) {
            ++s.oracle_checked;
            if (!*rec.oracle_agrees) {
                ++s.oracle_disagreements;
            }
        }
    }
    return report;
}

} // namespace fibbern
