#include "parser.hpp"

#include <spbw/errors.hpp>

#include <cctype>
#include <limits>

namespace spbw::cli
{

namespace
{

class Parser
{
public:
    Parser(const Algebra &a, std::string_view text, bool standard_only)
        : m_alg(a), m_text(text), m_standard_only(standard_only)
    {
    }

    StdPoly run()
    {
        skip();
        if (m_pos == m_text.size())
            throw SyntaxError(m_pos, "empty expression");
        StdPoly v = expr();
        skip();
        if (m_pos != m_text.size())
            throw SyntaxError(m_pos, std::string("unexpected '") + m_text[m_pos] + "'");
        return v;
    }

private:
    void skip()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
            ++m_pos;
    }

    bool accept(char c)
    {
        skip();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    StdPoly expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        StdPoly acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    StdPoly term()
    {
        StdPoly acc = factor();
        for (;;) {
            skip();
            std::size_t at = m_pos;
            if (accept('*'))
                acc = multiply(acc, factor(), at);
            else if (accept('/')) {
                std::size_t divisor_at = m_pos;
                StdPoly d = factor();
                acc = multiply(acc, invert(d, divisor_at), at);
            } else
                return acc;
        }
    }

    StdPoly factor()
    {
        skip();
        std::size_t at = m_pos;
        StdPoly base = atom();
        if (!accept('^'))
            return base;
        skip();
        bool negative = accept('-');
        skip();
        std::size_t digits_at = m_pos;
        long k = integer();
        if (m_pos == digits_at)
            throw SyntaxError(m_pos, "expected an integer exponent");
        if (k > std::numeric_limits<int>::max())
            throw SyntaxError(digits_at, "exponent too large");
        if (negative)
            return power(invert(base, at), static_cast<unsigned>(k), at);
        return power(base, static_cast<unsigned>(k), at);
    }

    StdPoly atom()
    {
        skip();
        if (m_pos == m_text.size())
            throw SyntaxError(m_pos, "unexpected end of expression");
        char c = m_text[m_pos];
        if (c == '(') {
            ++m_pos;
            StdPoly v = expr();
            if (!accept(')'))
                throw SyntaxError(m_pos, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
                ++m_pos;
            Rational value(std::string(m_text.substr(start, m_pos - start)));
            return m_alg.constant(RingElem(Scalar(value)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = m_pos;
            while (m_pos < m_text.size() &&
                   (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_'))
                ++m_pos;
            return name(std::string(m_text.substr(start, m_pos - start)), start);
        }
        throw SyntaxError(m_pos, std::string("unexpected '") + c + "'");
    }

    long integer()
    {
        long v = 0;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            v = v * 10 + (m_text[m_pos] - '0');
            if (v > std::numeric_limits<int>::max())
                throw SyntaxError(m_pos, "exponent too large");
            ++m_pos;
        }
        return v;
    }

    StdPoly name(const std::string &n, std::size_t at)
    {
        const auto &p = m_alg.presentation();
        for (std::size_t i = 0; i < p.parameters.size(); ++i)
            if (p.parameters[i] == n)
                return m_alg.constant(RingElem(Scalar::parameter(i)));
        for (std::size_t i = 0; i < p.ring.size(); ++i)
            if (p.ring.names()[i] == n)
                return m_alg.constant(RingElem::variable(i));
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            if (p.generators[i] == n)
                return m_alg.generator(i);
        throw Error(ErrorCode::UnknownName, "unknown name '" + n + "' at position " + std::to_string(at));
    }

    StdPoly multiply(const StdPoly &f, const StdPoly &g, std::size_t at)
    {
        if (m_standard_only && !already_standard(f, g))
            throw Error(ErrorCode::SchemaError, "product at position " + std::to_string(at) +
                                                    " is not written in standard form (coefficients first, "
                                                    "generators in increasing index order)");
        return m_alg.mul(f, g);
    }

    // Every monomial of f ends at or before the first generator of every monomial of g,
    // and g carries no coefficient that would have to pass a generator of f.
    bool already_standard(const StdPoly &f, const StdPoly &g) const
    {
        std::size_t n = m_alg.generators();
        for (const auto &[a, r] : f.terms()) {
            std::size_t last = 0;
            bool any = false;
            for (std::size_t v = 0; v < n; ++v)
                if (a[v] > 0) {
                    last = v;
                    any = true;
                }
            if (!any)
                continue;
            for (const auto &[b, s] : g.terms()) {
                if (!s.is_scalar())
                    return false;
                for (std::size_t v = 0; v < last; ++v)
                    if (b[v] > 0)
                        return false;
            }
        }
        return true;
    }

    StdPoly invert(const StdPoly &d, std::size_t at)
    {
        if (d.is_zero())
            throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        if (!d.is_constant())
            throw Error(ErrorCode::DomainViolation,
                        "only coefficients can be inverted (position " + std::to_string(at) + ")");
        const RingElem &r = d.terms().begin()->second;
        if (auto k = r.as_scalar())
            return m_alg.constant(RingElem(k->inverse()));
        if (!r.is_monomial())
            throw Error(ErrorCode::DomainViolation,
                        "coefficient at position " + std::to_string(at) + " is not invertible");
        RingElem inv = r.pow(-1);
        if (!m_alg.ring().contains(inv))
            throw Error(ErrorCode::DomainViolation,
                        "negative power of a non-Laurent variable at position " + std::to_string(at));
        return m_alg.constant(inv);
    }

    StdPoly power(const StdPoly &base, unsigned k, std::size_t at)
    {
        StdPoly acc = m_alg.one();
        for (unsigned i = 0; i < k; ++i)
            acc = multiply(acc, base, at);
        return acc;
    }

    const Algebra &m_alg;
    std::string_view m_text;
    bool m_standard_only;
    std::size_t m_pos = 0;
};

} // namespace

StdPoly parse_expression(const Algebra &a, std::string_view text, bool standard_only)
{
    return Parser(a, text, standard_only).run();
}

StdPoly parse_poly(const Algebra &a, std::string_view text)
{
    return parse_expression(a, text, false);
}

Scalar parse_scalar(const Algebra &a, std::string_view text)
{
    StdPoly v = parse_poly(a, text);
    if (v.is_zero())
        return Scalar();
    if (!v.is_constant())
        throw Error(ErrorCode::SchemaError, "'" + std::string(text) + "' is not a scalar");
    auto k = v.terms().begin()->second.as_scalar();
    if (!k)
        throw Error(ErrorCode::SchemaError, "'" + std::string(text) + "' is not a scalar");
    return *k;
}

std::string render_canonical(const Algebra &a, const StdPoly &f)
{
    return a.render(f);
}

} // namespace spbw::cli
