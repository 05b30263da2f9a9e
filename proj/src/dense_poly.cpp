#include <fibbern/dense_poly.hpp>

#include <algorithm>

namespace fibbern
{

DensePoly::DensePoly(std::vector<QuadExt> coeffs) : m_coeffs(std::move(coeffs)) { trim(); }

void DensePoly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

DensePoly DensePoly::constant(const QuadExt &c) { return DensePoly(std::vector<QuadExt>{c}); }

DensePoly DensePoly::monomial(const QuadExt &c, unsigned k)
{
    std::vector<QuadExt> v(k + 1);
    v[k] = c;
    return DensePoly(std::move(v));
}

QuadExt DensePoly::coeff(unsigned k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : QuadExt();
}

QuadExt DensePoly::operator()(const QuadExt &x) const { return poly_eval(*this, x); }

DensePoly DensePoly::operator-() const
{
    DensePoly r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

DensePoly &DensePoly::operator+=(const DensePoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

DensePoly &DensePoly::operator-=(const DensePoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    trim();
    return *this;
}

DensePoly &DensePoly::operator*=(const QuadExt &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

DensePoly operator*(const DensePoly &a, const DensePoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<QuadExt> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < b.m_coeffs.size(); ++k) {
            out[i + k] += a.m_coeffs[i] * b.m_coeffs[k];
        }
    }
    return DensePoly(std::move(out));
}

std::string DensePoly::to_string() const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
        if (m_coeffs[k].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        const bool compound = !m_coeffs[k].is_rational() && !m_coeffs[k].rat().is_zero();
        std::string c = m_coeffs[k].to_string();
        if (compound && k != 0) {
            c = "[" + c + "]";
        }
        if (k == 0) {
            out += c;
        } else {
            out += c + (k == 1 ? "*x" : "*x^" + std::to_string(k));
        }
    }
    return out;
}

QuadExt poly_eval(const DensePoly &p, const QuadExt &x)
{
    QuadExt acc;
    const auto &c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= x;
        acc += c[k];
    }
    return acc;
}

DensePoly poly_compose(const DensePoly &p, const DensePoly &q)
{
    DensePoly acc;
    const auto &c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * q;
        acc += DensePoly::constant(c[k]);
    }
    return acc;
}

DensePoly poly_shift(const DensePoly &p, const QuadExt &c)
{
    return poly_compose(p, DensePoly{c, QuadExt(1)});
}

DensePoly poly_dilate(const DensePoly &p, const QuadExt &c)
{
    std::vector<QuadExt> out = p.coeffs();
    QuadExt scale(1);
    for (auto &x : out) {
        x *= scale;
        scale *= c;
    }
    return DensePoly(std::move(out));
}

DensePoly poly_pow(const DensePoly &p, unsigned k)
{
    DensePoly result = DensePoly::constant(QuadExt(1));
    DensePoly base = p;
    while (k != 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

} // namespace fibbern
