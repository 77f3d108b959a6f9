#include <spbw/algebra.hpp>

namespace spbw
{

namespace
{

void append_power(std::string &out, const std::string &name, int power)
{
    if (!out.empty())
        out += "*";
    out += name;
    if (power != 1)
        out += "^" + std::to_string(power);
}

} // namespace

std::string Algebra::render_monomial(const ExpVec &e) const
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            append_power(out, m_p.generators[i], e[i]);
    return out.empty() ? "1" : out;
}

std::string Algebra::render_scalar(const Scalar &k) const
{
    return k.to_string(m_p.parameters);
}

std::string Algebra::render_ring(const RingElem &r) const
{
    StdPoly p = constant(r);
    return render(p);
}

std::string Algebra::render(const StdPoly &f) const
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto &[alpha, r] : sorted_terms(f)) {
        for (const auto &[e, c] : r.terms()) {
            bool negative = c.leading_negative();
            Scalar mag = negative ? -c : c;
            std::string term;
            if (!mag.is_one()) {
                term = mag.to_string(m_p.parameters);
                if (mag.denominator().is_constant() && mag.numerator().terms().size() > 1)
                    term = "(" + term + ")";
            }
            for (std::size_t v = 0; v < e.size(); ++v)
                if (e[v] != 0)
                    append_power(term, m_p.ring.names().at(v), e[v]);
            for (std::size_t i = 0; i < alpha.size(); ++i)
                if (alpha[i] != 0)
                    append_power(term, m_p.generators[i], alpha[i]);
            if (term.empty())
                term = "1";
            if (negative)
                out += "-";
            else if (!out.empty())
                out += "+";
            out += term;
        }
    }
    return out;
}

} // namespace spbw
