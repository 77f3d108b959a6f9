#include <spbw/algebra.hpp>
#include <spbw/errors.hpp>

#include <algorithm>

namespace spbw
{

StdPoly StdPoly::constant(std::size_t generators, const RingElem &r)
{
    StdPoly p(generators);
    p.add_term(ExpVec(generators), r);
    return p;
}

StdPoly StdPoly::monomial(const ExpVec &e, const RingElem &r)
{
    StdPoly p(e.size());
    p.add_term(e, r);
    return p;
}

StdPoly StdPoly::generator(std::size_t generators, std::size_t i)
{
    return monomial(ExpVec::unit(generators, i), RingElem(1));
}

RingElem StdPoly::coefficient(const ExpVec &e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? RingElem() : it->second;
}

bool StdPoly::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_zero());
}

int StdPoly::max_degree() const
{
    int d = 0;
    for (const auto &[e, r] : m_terms)
        d = std::max(d, e.degree());
    return d;
}

void StdPoly::add_term(const ExpVec &e, const RingElem &r)
{
    if (r.is_zero())
        return;
    if (e.size() != m_n)
        throw Error(ErrorCode::DimensionMismatch, "monomial length does not match the generator count");
    auto [it, fresh] = m_terms.try_emplace(e, r);
    if (!fresh) {
        it->second += r;
        if (it->second.is_zero())
            m_terms.erase(it);
    }
}

StdPoly StdPoly::operator-() const
{
    StdPoly p = *this;
    for (auto &[e, r] : p.m_terms)
        r = -r;
    return p;
}

StdPoly &StdPoly::operator+=(const StdPoly &o)
{
    if (m_n == 0 && m_terms.empty())
        m_n = o.m_n;
    for (const auto &[e, r] : o.m_terms)
        add_term(e, r);
    return *this;
}

StdPoly &StdPoly::operator-=(const StdPoly &o)
{
    if (m_n == 0 && m_terms.empty())
        m_n = o.m_n;
    for (const auto &[e, r] : o.m_terms)
        add_term(e, -r);
    return *this;
}

StdPoly StdPoly::operator+(const StdPoly &o) const
{
    StdPoly p = *this;
    p += o;
    return p;
}

StdPoly StdPoly::operator-(const StdPoly &o) const
{
    StdPoly p = *this;
    p -= o;
    return p;
}

StdPoly StdPoly::scaled(const Scalar &k) const
{
    if (k.is_zero())
        return StdPoly(m_n);
    StdPoly p = *this;
    for (auto &[e, r] : p.m_terms)
        r = r.scaled(k);
    return p;
}

StdPoly StdPoly::left_scaled(const RingElem &c) const
{
    StdPoly p(m_n);
    for (const auto &[e, r] : m_terms)
        p.add_term(e, c * r);
    return p;
}

} // namespace spbw
