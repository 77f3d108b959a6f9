#pragma once

// Skew PBW extensions: presentations, validation, standard-form arithmetic and
// leading data under a chosen monomial order.

#include <spbw/coefficients.hpp>
#include <spbw/errors.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spbw
{

// Exponent vector of a standard monomial x_1^a_1 ... x_n^a_n (fixed length n).
class ExpVec
{
public:
    ExpVec() = default;
    explicit ExpVec(std::size_t n) : m_e(n, 0) {}
    explicit ExpVec(std::vector<int> e) : m_e(std::move(e)) {}

    static ExpVec unit(std::size_t n, std::size_t i, int power = 1);

    std::size_t size() const noexcept
    {
        return m_e.size();
    }
    int operator[](std::size_t i) const
    {
        return m_e[i];
    }
    int &operator[](std::size_t i)
    {
        return m_e[i];
    }
    const std::vector<int> &data() const noexcept
    {
        return m_e;
    }
    int degree() const noexcept;
    bool is_zero() const noexcept;

    ExpVec operator+(const ExpVec &o) const;
    ExpVec operator-(const ExpVec &o) const;
    ExpVec scaled(int k) const;
    bool divides(const ExpVec &o) const;

    friend bool operator==(const ExpVec &, const ExpVec &) = default;
    // Raw lexicographic comparison, used only as a container key order.
    friend auto operator<=>(const ExpVec &a, const ExpVec &b) = default;

private:
    std::vector<int> m_e;
};

enum class OrderKind { Lex, DegLex, DegRevLex };

std::string_view to_string(OrderKind kind);
OrderKind order_kind_from_string(std::string_view text);

// Monomial order over generator indices. precedence lists generator indices
// from most to least significant, independently of the generator numbering.
class MonomialOrder
{
public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);
    static MonomialOrder standard(OrderKind kind, std::size_t n);

    OrderKind kind() const noexcept
    {
        return m_kind;
    }
    const std::vector<std::size_t> &precedence() const noexcept
    {
        return m_precedence;
    }
    std::size_t size() const noexcept
    {
        return m_precedence.size();
    }
    bool degree_compatible() const noexcept
    {
        return m_kind != OrderKind::Lex;
    }

    // Throws DimensionMismatch when lengths differ from the order's size.
    std::strong_ordering compare(const ExpVec &a, const ExpVec &b) const;
    bool less(const ExpVec &a, const ExpVec &b) const
    {
        return compare(a, b) < 0;
    }

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    OrderKind m_kind = OrderKind::DegLex;
    std::vector<std::size_t> m_precedence;
};

// Element of A in standard form: left R-linear combination of standard monomials.
class StdPoly
{
public:
    using Map = std::map<ExpVec, RingElem>;

    StdPoly() = default;
    explicit StdPoly(std::size_t generators) : m_n(generators) {}

    static StdPoly constant(std::size_t generators, const RingElem &r);
    static StdPoly monomial(const ExpVec &e, const RingElem &r);
    static StdPoly generator(std::size_t generators, std::size_t i);

    std::size_t generators() const noexcept
    {
        return m_n;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    const Map &terms() const noexcept
    {
        return m_terms;
    }
    // Zero if e is not in the support.
    RingElem coefficient(const ExpVec &e) const;
    bool is_constant() const;
    int max_degree() const;

    void add_term(const ExpVec &e, const RingElem &r);

    StdPoly operator-() const;
    StdPoly operator+(const StdPoly &o) const;
    StdPoly operator-(const StdPoly &o) const;
    StdPoly &operator+=(const StdPoly &o);
    StdPoly &operator-=(const StdPoly &o);
    StdPoly scaled(const Scalar &k) const;
    // r * f, coefficientwise (A is a left R-module on the standard basis).
    StdPoly left_scaled(const RingElem &r) const;

    friend bool operator==(const StdPoly &a, const StdPoly &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    std::size_t m_n = 0;
    Map m_terms;
};

// x_j x_i = d * x_i x_j + lower, with j > i.
struct RelationSpec {
    std::size_t j = 0;
    std::size_t i = 0;
    Scalar d{1};
    StdPoly lower;
};

struct Presentation {
    std::vector<std::string> parameters;
    CoefficientRing ring;
    std::vector<std::string> generators;
    // Pairs without a relation commute.
    std::vector<RelationSpec> relations;
    // Empty means identity.
    SigmaAction sigma;
    MonomialOrder order;
    // Lower parts restricted to R + R x_1 + ... + R x_n.
    bool strict = false;
};

struct Leading {
    ExpVec lm;
    RingElem lc;
};

// One factor of a written product: a generator index or a coefficient.
using WordItem = std::variant<std::size_t, RingElem>;

// Validated, immutable algebra. Copies share the multiplication caches.
class Algebra
{
public:
    // Throws ValidationErrors listing every problem found.
    static Algebra validate(Presentation p);

    const Presentation &presentation() const noexcept
    {
        return m_p;
    }
    std::size_t generators() const noexcept
    {
        return m_p.generators.size();
    }
    const MonomialOrder &order() const noexcept
    {
        return m_p.order;
    }
    const CoefficientRing &ring() const noexcept
    {
        return m_p.ring;
    }
    const SigmaAction &sigma() const noexcept
    {
        return m_p.sigma;
    }
    // Coefficient d_{i,j} of x_i x_j in x_j x_i (i < j); 1 on the diagonal.
    const Scalar &d(std::size_t i, std::size_t j) const;
    const StdPoly &lower(std::size_t j, std::size_t i) const;

    // Same presentation under another order; revalidated.
    Algebra with_order(MonomialOrder order) const;

    StdPoly zero() const
    {
        return StdPoly(generators());
    }
    StdPoly one() const;
    StdPoly generator(std::size_t i) const;
    StdPoly constant(const RingElem &r) const;

    StdPoly mul(const StdPoly &f, const StdPoly &g) const;
    StdPoly pow(const StdPoly &f, unsigned k) const;
    // Product of standard monomials x^a * x^b.
    const StdPoly &mul_monomials(const ExpVec &a, const ExpVec &b) const;
    // Left-to-right product of a written word.
    StdPoly normalize(const std::vector<WordItem> &word) const;

    std::optional<Leading> leading(const StdPoly &f) const;
    // Leading data of the product of two leading terms, without expanding.
    Leading lead_product(const Leading &a, const Leading &b) const;
    std::optional<int> deg(const StdPoly &f) const;

    // Terms ordered by decreasing monomial under the active order.
    std::vector<std::pair<ExpVec, RingElem>> sorted_terms(const StdPoly &f) const;
    // Total order on polynomials: compare term by term from the top.
    std::strong_ordering compare_polys(const StdPoly &f, const StdPoly &g) const;

    // Canonical text: flat terms, decreasing order, generators in index order.
    std::string render(const StdPoly &f) const;
    std::string render_monomial(const ExpVec &e) const;
    std::string render_scalar(const Scalar &k) const;
    std::string render_ring(const RingElem &r) const;

private:
    struct Cache;

    explicit Algebra(Presentation p);
    const StdPoly &mul_mono_gen(const ExpVec &a, std::size_t i) const;
    void check_structure(std::vector<ValidationIssue> &issues) const;
    void check_associativity(std::vector<ValidationIssue> &issues) const;

    Presentation m_p;
    // Dense tables indexed [j][i] for j > i.
    std::vector<std::vector<Scalar>> m_d;
    std::vector<std::vector<StdPoly>> m_lower;
    std::shared_ptr<Cache> m_cache;
};

} // namespace spbw
