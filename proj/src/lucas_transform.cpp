#include <fibbern/identities.hpp>

#include <stdexcept>

#include <fibbern/sequences.hpp>

namespace fibbern
{

namespace
{

struct Accumulator {
    std::optional<IdentityValue> total;

    void add(const IdentityValue &v, const QuadExt &factor)
    {
        if (const auto *q = std::get_if<QuadExt>(&v)) {
            add_value(*q * factor);
        } else {
            add_value(std::get<DensePoly>(v) * factor);
        }
    }

    void add_value(IdentityValue v)
    {
        if (!total) {
            total = std::move(v);
            return;
        }
        if (total->index() != v.index()) {
            throw std::invalid_argument("lucas_transform: mixed scalar and polynomial coefficients");
        }
        if (auto *q = std::get_if<QuadExt>(&*total)) {
            *q += std::get<QuadExt>(v);
        } else {
            std::get<DensePoly>(*total) += std::get<DensePoly>(v);
        }
    }

    IdentityValue result() const { return total ? *total : IdentityValue(QuadExt()); }
};

// h(u) = sum_k v_k u^{w_k}
IdentityValue evaluate_h(std::span<const TransformTerm> terms, const QuadExt &u)
{
    Accumulator acc;
    QuadExt power(1);
    long at = 0;
    for (const auto &t : terms) {
        // Terms usually come in increasing w; step the power instead of recomputing it.
        if (t.w == at + 1) {
            power *= u;
        } else if (t.w != at) {
            power = u.pow(t.w);
        }
        at = t.w;
        acc.add(t.v, power);
    }
    return acc.result();
}

} // namespace

IdentityValue lucas_transform(std::span<const TransformTerm> terms, long i, long m, const QuadExt &z, LucasKind kind)
{
    Accumulator acc;
    for (const auto &t : terms) {
        const BigInt s = kind == LucasKind::F ? fib(i * t.w + m) : lucas(i * t.w + m);
        acc.add(t.v, QuadExt(Rational(s)) * z.pow(t.w));
    }
    return acc.result();
}

IdentityValue lucas_transform_closed(std::span<const TransformTerm> terms, long i, long m, const QuadExt &z,
                                     LucasKind kind)
{
    const QuadExt &a = golden_alpha();
    const QuadExt &b = golden_beta();
    const IdentityValue ha = evaluate_h(terms, a.pow(i) * z);
    const IdentityValue hb = evaluate_h(terms, b.pow(i) * z);
    Accumulator acc;
    if (kind == LucasKind::F) {
        const QuadExt inv = sqrt5().inverse();
        acc.add(ha, a.pow(m) * inv);
        acc.add(hb, -(b.pow(m) * inv));
    } else {
        acc.add(ha, a.pow(m));
        acc.add(hb, b.pow(m));
    }
    return acc.result();
}

} // namespace fibbern
