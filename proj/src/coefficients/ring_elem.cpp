#include <spbw/coefficients.hpp>
#include <spbw/errors.hpp>

#include <algorithm>
#include <map>

namespace spbw
{

RingElem::RingElem(const Scalar &c)
{
    if (!c.is_zero())
        m_terms.emplace_back(Exponents(), c);
}

RingElem RingElem::variable(std::size_t var, int power)
{
    return monomial(Exponents::unit(var, power), Scalar(1));
}

RingElem RingElem::monomial(Exponents e, Scalar c)
{
    RingElem r;
    if (!c.is_zero())
        r.m_terms.emplace_back(std::move(e), std::move(c));
    return r;
}

RingElem RingElem::from_unsorted(std::vector<Term> terms)
{
    std::map<Exponents, Scalar, std::greater<>> acc;
    for (auto &[e, c] : terms) {
        auto [it, fresh] = acc.try_emplace(e, c);
        if (!fresh)
            it->second += c;
    }
    RingElem r;
    for (auto &[e, c] : acc)
        if (!c.is_zero())
            r.m_terms.emplace_back(e, std::move(c));
    return r;
}

bool RingElem::is_scalar() const noexcept
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first.is_zero());
}

std::optional<Scalar> RingElem::as_scalar() const
{
    if (m_terms.empty())
        return Scalar();
    if (!is_scalar())
        return std::nullopt;
    return m_terms.front().second;
}

bool RingElem::is_one() const
{
    return is_scalar() && !m_terms.empty() && m_terms.front().second.is_one();
}

std::size_t RingElem::variable_span() const noexcept
{
    std::size_t n = 0;
    for (const auto &t : m_terms)
        n = std::max(n, t.first.size());
    return n;
}

RingElem RingElem::operator-() const
{
    RingElem r = *this;
    for (auto &t : r.m_terms)
        t.second = -t.second;
    return r;
}

RingElem RingElem::operator+(const RingElem &o) const
{
    RingElem r;
    r.m_terms.reserve(m_terms.size() + o.m_terms.size());
    auto a = m_terms.begin();
    auto b = o.m_terms.begin();
    while (a != m_terms.end() || b != o.m_terms.end()) {
        if (b == o.m_terms.end() || (a != m_terms.end() && a->first > b->first))
            r.m_terms.push_back(*a++);
        else if (a == m_terms.end() || b->first > a->first)
            r.m_terms.push_back(*b++);
        else {
            Scalar c = a->second + b->second;
            if (!c.is_zero())
                r.m_terms.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return r;
}

RingElem RingElem::operator-(const RingElem &o) const
{
    return *this + (-o);
}

RingElem RingElem::operator*(const RingElem &o) const
{
    if (is_zero() || o.is_zero())
        return RingElem();
    if (o.is_scalar())
        return scaled(o.m_terms.front().second);
    if (is_scalar())
        return o.scaled(m_terms.front().second);
    std::vector<Term> terms;
    terms.reserve(m_terms.size() * o.m_terms.size());
    for (const auto &a : m_terms)
        for (const auto &b : o.m_terms)
            terms.emplace_back(a.first + b.first, a.second * b.second);
    return from_unsorted(std::move(terms));
}

RingElem RingElem::scaled(const Scalar &c) const
{
    if (c.is_zero())
        return RingElem();
    if (c.is_one())
        return *this;
    RingElem r = *this;
    for (auto &t : r.m_terms)
        t.second *= c;
    return r;
}

RingElem RingElem::pow(int k) const
{
    if (k < 0) {
        if (!is_monomial())
            throw Error(ErrorCode::DomainViolation, "negative power of a non-monomial coefficient");
        const auto &[e, c] = m_terms.front();
        return monomial(e.scaled(k), c.pow(k));
    }
    RingElem result(1);
    RingElem base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::strong_ordering operator<=>(const RingElem &a, const RingElem &b)
{
    std::size_t n = std::min(a.m_terms.size(), b.m_terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.m_terms[i].first <=> b.m_terms[i].first; c != 0)
            return c;
        if (auto c = a.m_terms[i].second <=> b.m_terms[i].second; c != 0)
            return c;
    }
    return a.m_terms.size() <=> b.m_terms.size();
}

// ---- CoefficientRing ----

CoefficientRing::CoefficientRing(std::vector<std::string> names, std::vector<bool> laurent)
    : m_names(std::move(names)), m_laurent(std::move(laurent))
{
    if (m_names.size() != m_laurent.size())
        throw Error(ErrorCode::DimensionMismatch, "coefficient ring: names and Laurent flags differ in length");
}

bool CoefficientRing::contains(const RingElem &r) const noexcept
{
    if (r.variable_span() > m_names.size())
        return false;
    for (const auto &[e, c] : r.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] < 0 && !m_laurent[v])
                return false;
    return true;
}

void CoefficientRing::check(const RingElem &r) const
{
    if (r.variable_span() > m_names.size())
        throw Error(ErrorCode::DomainViolation, "coefficient uses an undeclared ring variable");
    for (const auto &[e, c] : r.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] < 0 && !m_laurent[v])
                throw Error(ErrorCode::DomainViolation, "negative exponent on non-Laurent variable " + m_names[v]);
}

RingElem ring_arith(const CoefficientRing &ring, const RingElem &r, const RingElem &s, ArithOp op)
{
    ring.check(r);
    ring.check(s);
    switch (op) {
        case ArithOp::Add:
            return r + s;
        case ArithOp::Sub:
            return r - s;
        case ArithOp::Mul:
            return r * s;
        case ArithOp::Div:
            break;
    }
    throw Error(ErrorCode::InvalidArgument, "division is not a ring operation");
}

std::optional<Scalar> scalar_ratio(const RingElem &r, const RingElem &s)
{
    if (s.is_zero())
        throw Error(ErrorCode::ZeroDivisor, "scalar ratio against zero");
    if (r.is_zero())
        return Scalar();
    const auto &rt = r.terms();
    const auto &st = s.terms();
    if (rt.size() != st.size())
        return std::nullopt;
    Scalar k = rt.front().second / st.front().second;
    for (std::size_t i = 0; i < rt.size(); ++i) {
        if (rt[i].first != st[i].first)
            return std::nullopt;
        if (i > 0 && rt[i].second != k * st[i].second)
            return std::nullopt;
    }
    if (rt.front().first != st.front().first)
        return std::nullopt;
    return k;
}

// ---- SigmaAction ----

SigmaAction::SigmaAction(std::size_t generators, std::size_t coeff_vars)
    : m_factors(generators, std::vector<Scalar>(coeff_vars, Scalar(1)))
{
}

SigmaAction::SigmaAction(std::vector<std::vector<Scalar>> factors) : m_factors(std::move(factors))
{
    for (const auto &row : m_factors)
        for (const auto &c : row) {
            if (c.is_zero())
                throw Error(ErrorCode::InvalidArgument, "sigma factor must be nonzero");
            if (!c.is_one())
                m_identity = false;
        }
}

RingElem SigmaAction::apply(std::size_t generator, const RingElem &r) const
{
    std::vector<int> alpha(m_factors.size(), 0);
    alpha.at(generator) = 1;
    return apply_power(alpha, r);
}

RingElem SigmaAction::apply_power(std::span<const int> alpha, const RingElem &r) const
{
    if (m_identity || r.is_scalar())
        return r;
    RingElem out;
    for (const auto &[e, c] : r.terms()) {
        Scalar f(1);
        for (std::size_t i = 0; i < alpha.size() && i < m_factors.size(); ++i) {
            if (alpha[i] == 0)
                continue;
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] != 0)
                    f *= m_factors[i].at(j).pow(alpha[i] * e[j]);
        }
        out += RingElem::monomial(e, c * f);
    }
    return out;
}

} // namespace spbw
