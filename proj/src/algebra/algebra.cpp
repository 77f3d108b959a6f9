#include <spbw/algebra.hpp>
#include <spbw/errors.hpp>

#include <algorithm>
#include <mutex>
#include <set>

namespace spbw
{

struct Algebra::Cache {
    std::mutex mutex;
    std::map<std::pair<ExpVec, std::size_t>, StdPoly> mono_gen;
    std::map<std::pair<ExpVec, ExpVec>, StdPoly> mono_mono;
};

Algebra::Algebra(Presentation p) : m_p(std::move(p)), m_cache(std::make_shared<Cache>())
{
    std::size_t n = m_p.generators.size();
    if (m_p.sigma.generators() == 0)
        m_p.sigma = SigmaAction(n, m_p.ring.size());
    m_d.assign(n, std::vector<Scalar>(n, Scalar(1)));
    m_lower.assign(n, std::vector<StdPoly>(n, StdPoly(n)));
    for (const auto &rel : m_p.relations) {
        if (rel.j < n && rel.i < n && rel.j > rel.i) {
            m_d[rel.j][rel.i] = rel.d;
            m_lower[rel.j][rel.i] = rel.lower.generators() == n ? rel.lower : StdPoly(n);
        }
    }
}

const Scalar &Algebra::d(std::size_t i, std::size_t j) const
{
    return m_d.at(j).at(i);
}

const StdPoly &Algebra::lower(std::size_t j, std::size_t i) const
{
    return m_lower.at(j).at(i);
}

void Algebra::check_structure(std::vector<ValidationIssue> &issues) const
{
    std::size_t n = generators();
    const auto &gens = m_p.generators;
    if (m_p.order.size() != n)
        issues.push_back({ValidationIssueKind::MalformedRelation, "monomial order covers " +
                                                                      std::to_string(m_p.order.size()) +
                                                                      " generators, presentation has " + std::to_string(n)});
    if (m_p.sigma.generators() != n)
        issues.push_back({ValidationIssueKind::MalformedRelation, "sigma action has the wrong number of generators"});
    if (!issues.empty())
        return;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t v = 0; v < m_p.ring.size(); ++v)
            (void)m_p.sigma.factor(g, v);

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &rel : m_p.relations) {
        if (rel.j >= n || rel.i >= n) {
            issues.push_back({ValidationIssueKind::MalformedRelation, "relation refers to a missing generator"});
            continue;
        }
        std::string pair = gens[rel.j] + "*" + gens[rel.i];
        if (rel.j == rel.i) {
            if (!rel.d.is_one() || !rel.lower.is_zero())
                issues.push_back({ValidationIssueKind::DiagonalNotOne, pair + " must equal " + gens[rel.i] + "^2"});
            continue;
        }
        if (rel.j < rel.i) {
            issues.push_back({ValidationIssueKind::MalformedRelation,
                              "left side " + pair + " is already standard; relations rewrite x_j*x_i with j > i"});
            continue;
        }
        if (!seen.insert({rel.j, rel.i}).second)
            issues.push_back({ValidationIssueKind::MalformedRelation, "duplicate relation for " + pair});
        if (rel.d.is_zero())
            issues.push_back({ValidationIssueKind::ZeroD, "coefficient of the swapped word in " + pair + " is zero"});
        if (!rel.lower.is_zero() && rel.lower.generators() != n) {
            issues.push_back({ValidationIssueKind::MalformedRelation, "lower part of " + pair + " has the wrong shape"});
            continue;
        }
        ExpVec top = ExpVec::unit(n, rel.i) + ExpVec::unit(n, rel.j);
        for (const auto &[e, r] : rel.lower.terms()) {
            if (!m_p.ring.contains(r))
                issues.push_back({ValidationIssueKind::MalformedRelation,
                                  "coefficient " + render_ring(r) + " in " + pair + " lies outside the coefficient ring"});
            if (!m_p.order.less(e, top))
                issues.push_back({ValidationIssueKind::LowerPartNotSmaller,
                                  render_monomial(e) + " in the lower part of " + pair + " is not below " +
                                      render_monomial(top) + " under " + std::string(to_string(m_p.order.kind()))});
            if (m_p.strict && e.degree() > 1)
                issues.push_back({ValidationIssueKind::StrictnessViolation,
                                  render_monomial(e) + " in the lower part of " + pair + " has degree above 1"});
        }
    }
}

void Algebra::check_associativity(std::vector<ValidationIssue> &issues) const
{
    std::size_t n = generators();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i <= j; ++i) {
                StdPoly xk = generator(k), xj = generator(j), xi = generator(i);
                StdPoly diff = mul(mul(xk, xj), xi) - mul(xk, mul(xj, xi));
                if (!diff.is_zero()) {
                    const auto &g = m_p.generators;
                    issues.push_back({ValidationIssueKind::AssociativityFailure,
                                      "(" + g[k] + "*" + g[j] + ")*" + g[i] + " - " + g[k] + "*(" + g[j] + "*" + g[i] +
                                          ") = " + render(diff)});
                }
            }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (std::size_t v = 0; v < m_p.ring.size(); ++v) {
                StdPoly y = constant(RingElem::variable(v));
                StdPoly xj = generator(j), xi = generator(i);
                StdPoly diff = mul(mul(xj, xi), y) - mul(xj, mul(xi, y));
                if (!diff.is_zero()) {
                    const auto &g = m_p.generators;
                    issues.push_back({ValidationIssueKind::AssociativityFailure,
                                      "(" + g[j] + "*" + g[i] + ")*" + m_p.ring.names()[v] + " - " + g[j] + "*(" + g[i] +
                                          "*" + m_p.ring.names()[v] + ") = " + render(diff)});
                }
            }
}

Algebra Algebra::validate(Presentation p)
{
    Algebra a(std::move(p));
    std::vector<ValidationIssue> issues;
    a.check_structure(issues);
    if (!issues.empty())
        throw ValidationErrors(std::move(issues));
    a.check_associativity(issues);
    if (!issues.empty())
        throw ValidationErrors(std::move(issues));
    return a;
}

Algebra Algebra::with_order(MonomialOrder order) const
{
    // Products do not depend on the order, so the caches stay shared.
    Algebra a = *this;
    a.m_p.order = std::move(order);
    std::vector<ValidationIssue> issues;
    a.check_structure(issues);
    if (!issues.empty())
        throw ValidationErrors(std::move(issues));
    return a;
}

StdPoly Algebra::one() const
{
    return StdPoly::constant(generators(), RingElem(1));
}

StdPoly Algebra::generator(std::size_t i) const
{
    return StdPoly::generator(generators(), i);
}

StdPoly Algebra::constant(const RingElem &r) const
{
    return StdPoly::constant(generators(), r);
}

const StdPoly &Algebra::mul_mono_gen(const ExpVec &a, std::size_t i) const
{
    auto key = std::make_pair(a, i);
    {
        std::lock_guard lock(m_cache->mutex);
        if (auto it = m_cache->mono_gen.find(key); it != m_cache->mono_gen.end())
            return it->second;
    }
    std::size_t n = generators();
    std::size_t k = n;
    for (std::size_t v = n; v-- > 0;)
        if (a[v] > 0) {
            k = v;
            break;
        }
    StdPoly result(n);
    if (k == n || k <= i) {
        result.add_term(a + ExpVec::unit(n, i), RingElem(1));
    } else {
        // x^a x_i = x^a' (x_k x_i) = d x^a' x_i x_k + x^a' p_{k,i}
        ExpVec rest = a - ExpVec::unit(n, k);
        const StdPoly &head = mul_mono_gen(rest, i);
        StdPoly swapped(n);
        for (const auto &[g, r] : head.terms())
            swapped += mul_mono_gen(g, k).left_scaled(r);
        result = swapped.scaled(d(i, k));
        for (const auto &[e, s] : lower(k, i).terms())
            result += mul_monomials(rest, e).left_scaled(m_p.sigma.apply_power(rest.data(), s));
    }
    std::lock_guard lock(m_cache->mutex);
    return m_cache->mono_gen.try_emplace(std::move(key), std::move(result)).first->second;
}

const StdPoly &Algebra::mul_monomials(const ExpVec &a, const ExpVec &b) const
{
    auto key = std::make_pair(a, b);
    {
        std::lock_guard lock(m_cache->mutex);
        if (auto it = m_cache->mono_mono.find(key); it != m_cache->mono_mono.end())
            return it->second;
    }
    std::size_t n = generators();
    std::size_t first_b = n;
    for (std::size_t v = 0; v < n; ++v)
        if (b[v] > 0) {
            first_b = v;
            break;
        }
    std::size_t last_a = 0;
    bool a_empty = true;
    for (std::size_t v = n; v-- > 0;)
        if (a[v] > 0) {
            last_a = v;
            a_empty = false;
            break;
        }
    StdPoly result(n);
    if (first_b == n || a_empty || last_a <= first_b) {
        result.add_term(a + b, RingElem(1));
    } else {
        ExpVec rest = b - ExpVec::unit(n, first_b);
        const StdPoly &head = mul_mono_gen(a, first_b);
        for (const auto &[g, r] : head.terms())
            result += mul_monomials(g, rest).left_scaled(r);
    }
    std::lock_guard lock(m_cache->mutex);
    return m_cache->mono_mono.try_emplace(std::move(key), std::move(result)).first->second;
}

StdPoly Algebra::mul(const StdPoly &f, const StdPoly &g) const
{
    StdPoly out(generators());
    for (const auto &[a, r] : f.terms())
        for (const auto &[b, s] : g.terms()) {
            RingElem c = r * m_p.sigma.apply_power(a.data(), s);
            if (c.is_zero())
                continue;
            const StdPoly &prod = mul_monomials(a, b);
            for (const auto &[e, t] : prod.terms())
                out.add_term(e, c * t);
        }
    return out;
}

StdPoly Algebra::pow(const StdPoly &f, unsigned k) const
{
    StdPoly result = one();
    for (unsigned i = 0; i < k; ++i)
        result = mul(result, f);
    return result;
}

StdPoly Algebra::normalize(const std::vector<WordItem> &word) const
{
    StdPoly acc = one();
    for (const auto &item : word) {
        StdPoly next(generators());
        if (const auto *gi = std::get_if<std::size_t>(&item)) {
            if (*gi >= generators())
                throw Error(ErrorCode::InvalidArgument, "word refers to a missing generator");
            for (const auto &[e, r] : acc.terms())
                next += mul_mono_gen(e, *gi).left_scaled(r);
        } else {
            const RingElem &s = std::get<RingElem>(item);
            for (const auto &[e, r] : acc.terms())
                next.add_term(e, r * m_p.sigma.apply_power(e.data(), s));
        }
        acc = std::move(next);
    }
    return acc;
}

std::optional<Leading> Algebra::leading(const StdPoly &f) const
{
    if (f.is_zero())
        return std::nullopt;
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (m_p.order.less(best->first, it->first))
            best = it;
    return Leading{best->first, best->second};
}

Leading Algebra::lead_product(const Leading &a, const Leading &b) const
{
    std::size_t n = generators();
    Scalar twist(1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int passes = a.lm[j] * b.lm[i];
            if (passes != 0 && !d(i, j).is_one())
                twist *= d(i, j).pow(passes);
        }
    RingElem lc = m_p.sigma.is_identity() ? a.lc * b.lc : a.lc * m_p.sigma.apply_power(a.lm.data(), b.lc);
    if (!twist.is_one())
        lc = lc.scaled(twist);
    return Leading{a.lm + b.lm, lc};
}

std::optional<int> Algebra::deg(const StdPoly &f) const
{
    if (f.is_zero())
        return std::nullopt;
    return f.max_degree();
}

std::vector<std::pair<ExpVec, RingElem>> Algebra::sorted_terms(const StdPoly &f) const
{
    std::vector<std::pair<ExpVec, RingElem>> out(f.terms().begin(), f.terms().end());
    std::sort(out.begin(), out.end(), [&](const auto &x, const auto &y) { return m_p.order.less(y.first, x.first); });
    return out;
}

std::strong_ordering Algebra::compare_polys(const StdPoly &f, const StdPoly &g) const
{
    auto a = sorted_terms(f);
    auto b = sorted_terms(g);
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = m_p.order.compare(a[i].first, b[i].first); c != 0)
            return c;
        if (auto c = a[i].second <=> b[i].second; c != 0)
            return c;
    }
    return a.size() <=> b.size();
}

} // namespace spbw
