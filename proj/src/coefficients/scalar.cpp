#include <spbw/coefficients.hpp>
#include <spbw/errors.hpp>
#include <algorithm>

namespace spbw
{

Scalar Scalar::canonical(MPoly num, MPoly den)
{
    if (den.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero in the base field");
    if (num.is_zero())
        return Scalar();
    if (!den.is_constant()) {
        MPoly g = MPoly::gcd(num, den);
        if (!g.is_constant()) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
    }
    Rational lead = den.leading().second;
    if (lead != 1) {
        Rational inv = 1 / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return Scalar(std::move(num), std::move(den), true);
}

Scalar Scalar::parameter(std::size_t index)
{
    return Scalar(MPoly::variable(index));
}

Scalar Scalar::fraction(MPoly num, MPoly den)
{
    return canonical(std::move(num), std::move(den));
}

bool Scalar::is_one() const
{
    return m_den.is_constant() && m_num.is_constant() && m_num.constant_value() == 1;
}

bool Scalar::is_rational() const
{
    return m_den.is_constant() && m_num.is_constant();
}

bool Scalar::leading_negative() const
{
    return !m_num.is_zero() && sgn(m_num.leading().second) < 0;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return canonical(m_den, m_num);
}

Scalar Scalar::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    // gcd(num, den) == 1 implies gcd(num^k, den^k) == 1, so no reduction is needed.
    return Scalar(m_num.pow(static_cast<unsigned>(k)), m_den.pow(static_cast<unsigned>(k)), true);
}

Scalar Scalar::operator-() const
{
    return Scalar(-m_num, m_den, true);
}

Scalar Scalar::operator+(const Scalar &o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (m_den == o.m_den) {
        if (m_den.is_constant())
            return Scalar(m_num + o.m_num, m_den, true);
        return canonical(m_num + o.m_num, m_den);
    }
    return canonical(m_num * o.m_den + o.m_num * m_den, m_den * o.m_den);
}

Scalar Scalar::operator-(const Scalar &o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar &o) const
{
    if (is_zero() || o.is_zero())
        return Scalar();
    if (m_den.is_constant() && o.m_den.is_constant())
        return Scalar(m_num * o.m_num, MPoly(1), true);
    return canonical(m_num * o.m_num, m_den * o.m_den);
}

Scalar Scalar::operator/(const Scalar &o) const
{
    return *this * o.inverse();
}

std::string Scalar::to_string(const std::vector<std::string> &params) const
{
    std::string num = m_num.to_string(params);
    if (m_den.is_constant())
        return num;
    if (m_num.terms().size() > 1)
        num = "(" + num + ")";
    std::string den = m_den.to_string(params);
    const auto &lead = m_den.leading();
    bool bare_power = m_den.is_monomial() && lead.second == 1 &&
                      std::count_if(lead.first.data().begin(), lead.first.data().end(), [](int v) { return v != 0; }) == 1;
    if (!bare_power)
        den = "(" + den + ")";
    return num + "/" + den;
}

std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
{
    if (auto c = a.m_num <=> b.m_num; c != 0)
        return c;
    return a.m_den <=> b.m_den;
}

Scalar scalar_arith(const Scalar &a, const Scalar &b, ArithOp op)
{
    switch (op) {
        case ArithOp::Add:
            return a + b;
        case ArithOp::Sub:
            return a - b;
        case ArithOp::Mul:
            return a * b;
        case ArithOp::Div:
            return a / b;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

} // namespace spbw
