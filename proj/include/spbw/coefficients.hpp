#pragma once

// Exact arithmetic for the base field K = Q(p_1, ..., p_m) and the commutative
// coefficient ring R = K[y_1, ..., y_k] (some y_j may carry negative powers).
//
// Every value here is immutable once built and kept in a canonical form, so
// structural equality is field/ring equality.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace spbw
{

using Rational = mpq_class;

// Exponent vector over an implicit list of variables. Trailing zeros are
// trimmed so that values built in different contexts compare equal.
class Exponents
{
public:
    Exponents() = default;
    explicit Exponents(std::vector<int> e);

    static Exponents unit(std::size_t var, int power = 1);

    int operator[](std::size_t i) const noexcept
    {
        return i < m_e.size() ? m_e[i] : 0;
    }
    // Number of significant positions (index of the last nonzero entry + 1).
    std::size_t size() const noexcept
    {
        return m_e.size();
    }
    bool is_zero() const noexcept
    {
        return m_e.empty();
    }
    bool nonnegative() const noexcept;
    int degree() const noexcept;
    const std::vector<int> &data() const noexcept
    {
        return m_e;
    }

    Exponents operator+(const Exponents &o) const;
    Exponents operator-(const Exponents &o) const;
    Exponents scaled(int k) const;
    // Componentwise minimum.
    Exponents meet(const Exponents &o) const;
    // True iff every entry of *this is <= the matching entry of o.
    bool divides(const Exponents &o) const noexcept;

    friend bool operator==(const Exponents &, const Exponents &) = default;
    // Pure lex with variable 0 most significant.
    friend std::strong_ordering operator<=>(const Exponents &a, const Exponents &b) noexcept;

private:
    void trim();

    std::vector<int> m_e;
};

// Multivariate polynomial over Q. Terms are kept sorted by decreasing lex order
// of their exponents; no zero coefficients are stored.
class MPoly
{
public:
    using Term = std::pair<Exponents, Rational>;

    MPoly() = default;
    MPoly(const Rational &c);
    MPoly(long c) : MPoly(Rational(c)) {}

    static MPoly variable(std::size_t var, int power = 1);
    static MPoly monomial(Exponents e, Rational c);

    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    Rational constant_value() const;
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    const Term &leading() const
    {
        return m_terms.front();
    }
    // One past the highest variable index that occurs.
    std::size_t variable_span() const noexcept;
    int degree_in(std::size_t var) const noexcept;
    // Coefficient of var^k, as a polynomial in which var no longer occurs.
    MPoly coefficient_in(std::size_t var, int k) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly &o) const;
    MPoly operator-(const MPoly &o) const;
    MPoly operator*(const MPoly &o) const;
    MPoly scaled(const Rational &c) const;
    MPoly shifted(const Exponents &e) const;
    MPoly pow(unsigned k) const;
    // Divided by the coefficient of its lex-leading term.
    MPoly monic() const;
    // Quotient when o divides *this exactly, nullopt otherwise.
    std::optional<MPoly> divide_exact(const MPoly &o) const;

    // Monic greatest common divisor; gcd(0, 0) == 0.
    static MPoly gcd(const MPoly &a, const MPoly &b);

    std::string to_string(const std::vector<std::string> &names) const;

    friend bool operator==(const MPoly &a, const MPoly &b);
    friend std::strong_ordering operator<=>(const MPoly &a, const MPoly &b);

private:
    static MPoly from_unsorted(std::vector<Term> terms);

    std::vector<Term> m_terms;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Element of K = Q(parameters): numerator / denominator with gcd 1 and a
// denominator whose lex-leading coefficient is 1.
class Scalar
{
public:
    Scalar() : m_den(1) {}
    Scalar(long c) : m_num(c), m_den(1) {}
    Scalar(const Rational &c) : m_num(c), m_den(1) {}
    explicit Scalar(MPoly num) : m_num(std::move(num)), m_den(1) {}

    static Scalar parameter(std::size_t index);
    // Throws DivisionByZero when den == 0.
    static Scalar fraction(MPoly num, MPoly den);

    const MPoly &numerator() const noexcept
    {
        return m_num;
    }
    const MPoly &denominator() const noexcept
    {
        return m_den;
    }
    bool is_zero() const noexcept
    {
        return m_num.is_zero();
    }
    bool is_one() const;
    bool is_rational() const;
    // Both numerator and denominator are single terms.
    bool is_atomic() const noexcept
    {
        return m_num.is_monomial() && m_den.is_monomial();
    }
    // Sign of the lex-leading numerator coefficient is negative.
    bool leading_negative() const;

    Scalar inverse() const;
    Scalar pow(int k) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const;
    Scalar &operator+=(const Scalar &o)
    {
        return *this = *this + o;
    }
    Scalar &operator-=(const Scalar &o)
    {
        return *this = *this - o;
    }
    Scalar &operator*=(const Scalar &o)
    {
        return *this = *this * o;
    }

    std::string to_string(const std::vector<std::string> &params) const;

    friend bool operator==(const Scalar &, const Scalar &) = default;
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b);

private:
    Scalar(MPoly num, MPoly den, bool /*canonical*/) : m_num(std::move(num)), m_den(std::move(den)) {}
    static Scalar canonical(MPoly num, MPoly den);

    MPoly m_num;
    MPoly m_den;
};

Scalar scalar_arith(const Scalar &a, const Scalar &b, ArithOp op);

// Element of R = K[y_1^{(+-)1}, ...]: finite map from exponent vectors to
// nonzero scalars, sorted by decreasing lex order.
class RingElem
{
public:
    using Term = std::pair<Exponents, Scalar>;

    RingElem() = default;
    RingElem(const Scalar &c);
    RingElem(long c) : RingElem(Scalar(c)) {}

    static RingElem variable(std::size_t var, int power = 1);
    static RingElem monomial(Exponents e, Scalar c);

    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    // Zero or a single term with zero exponents.
    bool is_scalar() const noexcept;
    std::optional<Scalar> as_scalar() const;
    bool is_one() const;
    bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t variable_span() const noexcept;

    RingElem operator-() const;
    RingElem operator+(const RingElem &o) const;
    RingElem operator-(const RingElem &o) const;
    RingElem operator*(const RingElem &o) const;
    RingElem scaled(const Scalar &c) const;
    RingElem &operator+=(const RingElem &o)
    {
        return *this = *this + o;
    }
    RingElem &operator-=(const RingElem &o)
    {
        return *this = *this - o;
    }
    // Negative powers only exist for monomials; anything else throws DomainViolation.
    RingElem pow(int k) const;

    friend bool operator==(const RingElem &, const RingElem &) = default;
    friend std::strong_ordering operator<=>(const RingElem &a, const RingElem &b);

private:
    static RingElem from_unsorted(std::vector<Term> terms);

    std::vector<Term> m_terms;
};

// Declared coefficient ring: variable names and which of them are Laurent.
class CoefficientRing
{
public:
    CoefficientRing() = default;
    CoefficientRing(std::vector<std::string> names, std::vector<bool> laurent);

    std::size_t size() const noexcept
    {
        return m_names.size();
    }
    bool is_field() const noexcept
    {
        return m_names.empty();
    }
    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }
    bool is_laurent(std::size_t var) const
    {
        return m_laurent.at(var);
    }
    // Throws DomainViolation if r uses an undeclared variable or a negative
    // power of a non-Laurent variable.
    void check(const RingElem &r) const;
    bool contains(const RingElem &r) const noexcept;

private:
    std::vector<std::string> m_names;
    std::vector<bool> m_laurent;
};

// Add, Sub or Mul inside a declared ring; Div is rejected.
RingElem ring_arith(const CoefficientRing &ring, const RingElem &r, const RingElem &s, ArithOp op);

// k with r == k * s when such a k in K exists. Throws ZeroDivisor if s == 0.
std::optional<Scalar> scalar_ratio(const RingElem &r, const RingElem &s);

// Diagonal twist sigma_i(y_j) = c_ij * y_j, extended multiplicatively and K-linearly.
class SigmaAction
{
public:
    SigmaAction() = default;
    // Identity action.
    SigmaAction(std::size_t generators, std::size_t coeff_vars);
    // factors[i][j] is c_ij; every entry must be nonzero.
    explicit SigmaAction(std::vector<std::vector<Scalar>> factors);

    std::size_t generators() const noexcept
    {
        return m_factors.size();
    }
    const Scalar &factor(std::size_t generator, std::size_t var) const
    {
        return m_factors.at(generator).at(var);
    }
    bool is_identity() const noexcept
    {
        return m_identity;
    }

    RingElem apply(std::size_t generator, const RingElem &r) const;
    // sigma_1^{a_1} o ... o sigma_n^{a_n}.
    RingElem apply_power(std::span<const int> alpha, const RingElem &r) const;

private:
    std::vector<std::vector<Scalar>> m_factors;
    bool m_identity = true;
};

} // namespace spbw
