#include <spbw/sagbi.hpp>

#include <algorithm>
#include <map>

namespace spbw
{

namespace detail
{
bool enumerate_fmonomials(const Subalgebra &F, int D, std::size_t cap, std::vector<FMonomial> &out);
}

MembershipResult membership(const Subalgebra &F, const StdPoly &s, const Caps &caps, std::optional<int> verified_bound)
{
    MembershipResult out;
    SnfResult r = snf_all(F, s, caps);
    auto zero = std::find_if(r.traces.begin(), r.traces.end(),
                             [](const ReductionTrace &t) { return t.remainder.is_zero(); });
    if (zero != r.traces.end()) {
        out.kind = MembershipKind::Member;
        out.traces.push_back(*zero);
        out.certified = true;
        out.note = "the trace writes s as a combination of F-monomials";
        return out;
    }
    out.traces = std::move(r.traces);
    if (r.caps_hit) {
        out.kind = MembershipKind::Inconclusive;
        out.note = "normal form search hit a cap";
        return out;
    }
    out.kind = MembershipKind::NoReductionFound;
    int degree = F.algebra().deg(s).value_or(0);
    if (verified_bound && *verified_bound >= degree && F.algebra().order().degree_compatible()) {
        out.certified = true;
        out.note = "F is verified up to degree " + std::to_string(*verified_bound) +
                   ": s is not a combination of F-monomials of lm-degree <= " + std::to_string(*verified_bound);
    } else {
        out.note = "not certified: no SAGBI verification of F covering degree " + std::to_string(degree);
    }
    return out;
}

namespace
{

// Coordinates over K: (standard monomial, monomial of R).
using Key = std::pair<ExpVec, Exponents>;
using Vec = std::map<Key, Scalar>;

Vec flatten(const StdPoly &f)
{
    Vec v;
    for (const auto &[e, r] : f.terms())
        for (const auto &[m, c] : r.terms())
            v.emplace(Key{e, m}, c);
    return v;
}

void axpy(Vec &v, const Scalar &k, const Vec &w)
{
    for (const auto &[key, c] : w) {
        Scalar x = c * k;
        auto [it, fresh] = v.try_emplace(key, x);
        if (!fresh) {
            it->second += x;
            if (it->second.is_zero())
                v.erase(it);
        }
    }
}

struct Row {
    Vec v;
    // v == sum comb[i] * value(monomial i)
    std::map<std::size_t, Scalar> comb;
};

// Rows keyed by pivot, the largest key of their vector.
class Echelon
{
public:
    // Eliminates every pivot occurring in v; comb tracks the subtracted rows.
    void reduce(Vec &v, std::map<std::size_t, Scalar> &comb) const
    {
        auto it = v.end();
        while (it != v.begin()) {
            --it;
            auto row = m_rows.find(it->first);
            if (row == m_rows.end())
                continue;
            Key key = it->first;
            Scalar k = -(it->second / row->second.v.rbegin()->second);
            axpy(v, k, row->second.v);
            for (const auto &[i, c] : row->second.comb) {
                auto [ci, fresh] = comb.try_emplace(i, c * k);
                if (!fresh) {
                    ci->second += c * k;
                    if (ci->second.is_zero())
                        comb.erase(ci);
                }
            }
            // Everything above key is untouched; continue just below it.
            it = v.lower_bound(key);
        }
    }

    void insert(Row r)
    {
        Key pivot = r.v.rbegin()->first;
        m_rows.emplace(std::move(pivot), std::move(r));
    }

private:
    std::map<Key, Row> m_rows;
};

} // namespace

SpanResult span_membership(const Subalgebra &F, const StdPoly &s, int D, const Caps &caps)
{
    SpanResult out;
    out.bound = D;
    if (s.is_zero()) {
        out.found = true;
        return out;
    }
    std::vector<FMonomial> monomials;
    if (!detail::enumerate_fmonomials(F, D, caps.max_span, monomials))
        throw Error(ErrorCode::CapsExceeded, "more than " + std::to_string(caps.max_span) +
                                                 " F-monomials of lm-degree <= " + std::to_string(D));
    out.monomials = monomials.size();

    Echelon basis;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        Row r{flatten(F.value(monomials[i])), {{i, Scalar(1)}}};
        basis.reduce(r.v, r.comb);
        if (!r.v.empty())
            basis.insert(std::move(r));
    }

    Vec v = flatten(s);
    std::map<std::size_t, Scalar> comb;
    basis.reduce(v, comb);
    if (!v.empty())
        return out;
    // s + sum comb_i value(m_i) == 0
    out.found = true;
    for (const auto &[i, c] : comb)
        out.combination.push_back(Term{-c, monomials[i]});
    return out;
}

} // namespace spbw
