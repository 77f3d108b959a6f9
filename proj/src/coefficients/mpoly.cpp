#include <spbw/coefficients.hpp>
#include <spbw/errors.hpp>

#include <algorithm>
#include <map>

namespace spbw
{

// ---- Exponents ----

Exponents::Exponents(std::vector<int> e) : m_e(std::move(e))
{
    trim();
}

Exponents Exponents::unit(std::size_t var, int power)
{
    std::vector<int> e(var + 1, 0);
    e[var] = power;
    return Exponents(std::move(e));
}

void Exponents::trim()
{
    while (!m_e.empty() && m_e.back() == 0)
        m_e.pop_back();
}

bool Exponents::nonnegative() const noexcept
{
    return std::all_of(m_e.begin(), m_e.end(), [](int v) { return v >= 0; });
}

int Exponents::degree() const noexcept
{
    int d = 0;
    for (int v : m_e)
        d += v;
    return d;
}

Exponents Exponents::operator+(const Exponents &o) const
{
    std::vector<int> e(std::max(m_e.size(), o.m_e.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (*this)[i] + o[i];
    return Exponents(std::move(e));
}

Exponents Exponents::operator-(const Exponents &o) const
{
    std::vector<int> e(std::max(m_e.size(), o.m_e.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (*this)[i] - o[i];
    return Exponents(std::move(e));
}

Exponents Exponents::scaled(int k) const
{
    std::vector<int> e = m_e;
    for (int &v : e)
        v *= k;
    return Exponents(std::move(e));
}

Exponents Exponents::meet(const Exponents &o) const
{
    std::vector<int> e(std::max(m_e.size(), o.m_e.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min((*this)[i], o[i]);
    return Exponents(std::move(e));
}

bool Exponents::divides(const Exponents &o) const noexcept
{
    std::size_t n = std::max(m_e.size(), o.m_e.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((*this)[i] > o[i])
            return false;
    return true;
}

std::strong_ordering operator<=>(const Exponents &a, const Exponents &b) noexcept
{
    std::size_t n = std::max(a.m_e.size(), b.m_e.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

// ---- MPoly ----

namespace
{

std::strong_ordering cmp_rational(const Rational &a, const Rational &b)
{
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

} // namespace

MPoly::MPoly(const Rational &c)
{
    if (sgn(c) != 0)
        m_terms.emplace_back(Exponents(), c);
}

MPoly MPoly::variable(std::size_t var, int power)
{
    return monomial(Exponents::unit(var, power), Rational(1));
}

MPoly MPoly::monomial(Exponents e, Rational c)
{
    MPoly p;
    if (sgn(c) != 0)
        p.m_terms.emplace_back(std::move(e), std::move(c));
    return p;
}

MPoly MPoly::from_unsorted(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
    MPoly p;
    for (auto &t : terms) {
        if (!p.m_terms.empty() && p.m_terms.back().first == t.first)
            p.m_terms.back().second += t.second;
        else {
            if (!p.m_terms.empty() && sgn(p.m_terms.back().second) == 0)
                p.m_terms.pop_back();
            p.m_terms.push_back(std::move(t));
        }
    }
    if (!p.m_terms.empty() && sgn(p.m_terms.back().second) == 0)
        p.m_terms.pop_back();
    return p;
}

bool MPoly::is_constant() const noexcept
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first.is_zero());
}

Rational MPoly::constant_value() const
{
    if (m_terms.empty() || !m_terms.back().first.is_zero())
        return Rational(0);
    return m_terms.back().second;
}

std::size_t MPoly::variable_span() const noexcept
{
    std::size_t n = 0;
    for (const auto &t : m_terms)
        n = std::max(n, t.first.size());
    return n;
}

int MPoly::degree_in(std::size_t var) const noexcept
{
    int d = 0;
    for (const auto &t : m_terms)
        d = std::max(d, t.first[var]);
    return d;
}

MPoly MPoly::coefficient_in(std::size_t var, int k) const
{
    std::vector<Term> out;
    for (const auto &t : m_terms) {
        if (t.first[var] != k)
            continue;
        std::vector<int> e = t.first.data();
        if (var < e.size())
            e[var] = 0;
        out.emplace_back(Exponents(std::move(e)), t.second);
    }
    return from_unsorted(std::move(out));
}

MPoly MPoly::operator-() const
{
    MPoly p = *this;
    for (auto &t : p.m_terms)
        t.second = -t.second;
    return p;
}

MPoly MPoly::operator+(const MPoly &o) const
{
    MPoly p;
    p.m_terms.reserve(m_terms.size() + o.m_terms.size());
    auto a = m_terms.begin();
    auto b = o.m_terms.begin();
    while (a != m_terms.end() || b != o.m_terms.end()) {
        if (b == o.m_terms.end() || (a != m_terms.end() && a->first > b->first))
            p.m_terms.push_back(*a++);
        else if (a == m_terms.end() || b->first > a->first)
            p.m_terms.push_back(*b++);
        else {
            Rational c = a->second + b->second;
            if (sgn(c) != 0)
                p.m_terms.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return p;
}

MPoly MPoly::operator-(const MPoly &o) const
{
    return *this + (-o);
}

MPoly MPoly::operator*(const MPoly &o) const
{
    if (is_zero() || o.is_zero())
        return MPoly();
    if (o.is_constant())
        return scaled(o.constant_value());
    if (is_constant())
        return o.scaled(constant_value());
    std::map<Exponents, Rational, std::greater<>> acc;
    for (const auto &a : m_terms)
        for (const auto &b : o.m_terms) {
            Rational c = a.second * b.second;
            auto [it, fresh] = acc.try_emplace(a.first + b.first, c);
            if (!fresh)
                it->second += c;
        }
    MPoly p;
    for (auto &[e, c] : acc)
        if (sgn(c) != 0)
            p.m_terms.emplace_back(e, c);
    return p;
}

MPoly MPoly::scaled(const Rational &c) const
{
    if (sgn(c) == 0)
        return MPoly();
    MPoly p = *this;
    for (auto &t : p.m_terms)
        t.second *= c;
    return p;
}

MPoly MPoly::shifted(const Exponents &e) const
{
    MPoly p = *this;
    for (auto &t : p.m_terms)
        t.first = t.first + e;
    return p;
}

MPoly MPoly::pow(unsigned k) const
{
    MPoly result(1);
    MPoly base = *this;
    while (k) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k)
            base = base * base;
    }
    return result;
}

MPoly MPoly::monic() const
{
    if (is_zero())
        return *this;
    Rational inv = 1 / m_terms.front().second;
    return scaled(inv);
}

std::optional<MPoly> MPoly::divide_exact(const MPoly &o) const
{
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (is_zero())
        return MPoly();
    if (o.is_constant())
        return scaled(1 / o.constant_value());
    std::vector<Term> quotient;
    MPoly r = *this;
    const Term &lead = o.m_terms.front();
    while (!r.is_zero()) {
        const Term &lr = r.m_terms.front();
        if (!lead.first.divides(lr.first))
            return std::nullopt;
        Term q{lr.first - lead.first, lr.second / lead.second};
        r = r - o.shifted(q.first).scaled(q.second);
        quotient.push_back(std::move(q));
    }
    return from_unsorted(std::move(quotient));
}

namespace
{

// Pseudo-remainder of a by b with respect to var.
MPoly pseudo_remainder(MPoly a, const MPoly &b, std::size_t var)
{
    int db = b.degree_in(var);
    MPoly lb = b.coefficient_in(var, db);
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db)
            break;
        MPoly la = a.coefficient_in(var, da);
        a = a * lb - (b * la).shifted(Exponents::unit(var, da - db));
    }
    return a;
}

MPoly content_in(const MPoly &p, std::size_t var)
{
    MPoly g;
    for (int k = p.degree_in(var); k >= 0; --k) {
        MPoly c = p.coefficient_in(var, k);
        if (c.is_zero())
            continue;
        g = MPoly::gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

MPoly primitive_in(const MPoly &p, std::size_t var)
{
    if (p.is_zero())
        return p;
    return *p.divide_exact(content_in(p, var));
}

// Scales p to integer coefficients with gcd 1; keeps remainder sequences from
// growing numerically (scaling by a rational is a unit over Q).
MPoly integer_primitive(const MPoly &p)
{
    if (p.is_zero())
        return p;
    mpz_class den = 1, num = 0;
    for (const auto &t : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
    }
    Rational factor(den, num);
    factor.canonicalize();
    return p.scaled(factor);
}

Exponents min_exponents(const MPoly &p)
{
    Exponents m = p.terms().front().first;
    for (const auto &t : p.terms())
        m = m.meet(t.first);
    return m;
}

} // namespace

MPoly MPoly::gcd(const MPoly &a, const MPoly &b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return MPoly(1);
    if (a == b)
        return a.monic();
    if (a.is_monomial() || b.is_monomial()) {
        Exponents m = min_exponents(a).meet(min_exponents(b));
        return monomial(m, Rational(1));
    }
    std::size_t var = std::max(a.variable_span(), b.variable_span()) - 1;
    // Treat both as univariate in the highest variable over Q[lower variables].
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        const MPoly &free = a.degree_in(var) == 0 ? a : b;
        const MPoly &other = a.degree_in(var) == 0 ? b : a;
        return gcd(free, content_in(other, var)).monic();
    }
    MPoly ca = content_in(a, var);
    MPoly cb = content_in(b, var);
    MPoly g_content = gcd(ca, cb);
    MPoly p = integer_primitive(*a.divide_exact(ca));
    MPoly q = integer_primitive(*b.divide_exact(cb));
    if (p.degree_in(var) < q.degree_in(var))
        std::swap(p, q);
    while (!q.is_zero() && q.degree_in(var) > 0) {
        MPoly r = pseudo_remainder(p, q, var);
        p = std::move(q);
        q = integer_primitive(primitive_in(r, var));
    }
    MPoly g = q.is_zero() ? p : MPoly(1);
    return (g * g_content).monic();
}

std::string MPoly::to_string(const std::vector<std::string> &names) const
{
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : m_terms) {
        Rational mag = abs(c);
        if (sgn(c) < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        bool need_star = false;
        if (e.is_zero() || mag != 1) {
            out += mag.get_str();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                out += "*";
            out += v < names.size() ? names[v] : "p" + std::to_string(v);
            if (e[v] != 1)
                out += "^" + std::to_string(e[v]);
            need_star = true;
        }
    }
    return out;
}

bool operator==(const MPoly &a, const MPoly &b)
{
    return a.m_terms == b.m_terms;
}

std::strong_ordering operator<=>(const MPoly &a, const MPoly &b)
{
    std::size_t n = std::min(a.m_terms.size(), b.m_terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.m_terms[i].first <=> b.m_terms[i].first; c != 0)
            return c;
        if (auto c = cmp_rational(a.m_terms[i].second, b.m_terms[i].second); c != 0)
            return c;
    }
    return a.m_terms.size() <=> b.m_terms.size();
}

} // namespace spbw
