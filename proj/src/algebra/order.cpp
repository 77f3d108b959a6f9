#include <spbw/algebra.hpp>
#include <spbw/errors.hpp>

#include <algorithm>
#include <numeric>

namespace spbw
{

ExpVec ExpVec::unit(std::size_t n, std::size_t i, int power)
{
    ExpVec e(n);
    e.m_e.at(i) = power;
    return e;
}

int ExpVec::degree() const noexcept
{
    return std::accumulate(m_e.begin(), m_e.end(), 0);
}

bool ExpVec::is_zero() const noexcept
{
    return std::all_of(m_e.begin(), m_e.end(), [](int v) { return v == 0; });
}

ExpVec ExpVec::operator+(const ExpVec &o) const
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "exponent vectors of different length");
    ExpVec r = *this;
    for (std::size_t i = 0; i < m_e.size(); ++i)
        r.m_e[i] += o.m_e[i];
    return r;
}

ExpVec ExpVec::operator-(const ExpVec &o) const
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "exponent vectors of different length");
    ExpVec r = *this;
    for (std::size_t i = 0; i < m_e.size(); ++i)
        r.m_e[i] -= o.m_e[i];
    return r;
}

ExpVec ExpVec::scaled(int k) const
{
    ExpVec r = *this;
    for (int &v : r.m_e)
        v *= k;
    return r;
}

bool ExpVec::divides(const ExpVec &o) const
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "exponent vectors of different length");
    for (std::size_t i = 0; i < m_e.size(); ++i)
        if (m_e[i] > o.m_e[i])
            return false;
    return true;
}

std::string_view to_string(OrderKind kind)
{
    switch (kind) {
        case OrderKind::Lex:
            return "lex";
        case OrderKind::DegLex:
            return "deglex";
        case OrderKind::DegRevLex:
            return "degrevlex";
    }
    return "unknown";
}

OrderKind order_kind_from_string(std::string_view text)
{
    if (text == "lex")
        return OrderKind::Lex;
    if (text == "deglex")
        return OrderKind::DegLex;
    if (text == "degrevlex")
        return OrderKind::DegRevLex;
    throw Error(ErrorCode::InvalidArgument, "unknown monomial order kind '" + std::string(text) + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : m_kind(kind), m_precedence(std::move(precedence))
{
    std::vector<std::size_t> sorted = m_precedence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw Error(ErrorCode::InvalidArgument, "order precedence is not a permutation of the generators");
}

MonomialOrder MonomialOrder::standard(OrderKind kind, std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(kind, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const ExpVec &a, const ExpVec &b) const
{
    if (a.size() != m_precedence.size() || b.size() != m_precedence.size())
        throw Error(ErrorCode::DimensionMismatch, "exponent vector length does not match the order");
    if (m_kind != OrderKind::Lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0)
            return c;
    }
    if (m_kind == OrderKind::DegRevLex) {
        for (auto it = m_precedence.rbegin(); it != m_precedence.rend(); ++it) {
            if (auto c = b[*it] <=> a[*it]; c != 0)
                return c;
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t v : m_precedence) {
        if (auto c = a[v] <=> b[v]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

} // namespace spbw
