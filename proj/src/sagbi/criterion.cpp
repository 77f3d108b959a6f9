#include <spbw/sagbi.hpp>

#include <algorithm>
#include <map>

namespace spbw
{

namespace
{

struct ExpLess {
    const MonomialOrder *order;
    bool operator()(const ExpVec &a, const ExpVec &b) const
    {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return order->less(a, b);
    }
};

} // namespace

namespace detail
{

// Every F-monomial of lm-degree <= D in index-lexicographic order, the empty
// one first. Returns false when more than cap sequences exist.
bool enumerate_fmonomials(const Subalgebra &F, int D, std::size_t cap, std::vector<FMonomial> &out)
{
    std::vector<std::size_t> seq;
    bool ok = true;
    auto visit = [&](auto &self, int budget) -> void {
        if (out.size() >= cap) {
            ok = false;
            return;
        }
        out.push_back(FMonomial{seq});
        for (std::size_t i = 0; i < F.size() && ok; ++i) {
            int d = F.lead(i).lm.degree();
            if (d > budget)
                continue;
            seq.push_back(i);
            self(self, budget - d);
            seq.pop_back();
        }
    };
    if (D >= 0)
        visit(visit, D);
    return ok;
}

} // namespace detail

PairList critical_pairs(const Subalgebra &F, int D, const Caps &caps)
{
    PairList out;
    std::vector<FMonomial> all;
    if (!detail::enumerate_fmonomials(F, D, caps.max_span, all))
        out.truncated = true;

    std::map<ExpVec, std::vector<std::size_t>, ExpLess> groups(ExpLess{&F.algebra().order()});
    for (std::size_t k = 0; k < all.size(); ++k)
        groups[F.lm_of(all[k])].push_back(k);

    for (const auto &[lm, members] : groups) {
        if (members.size() < 2)
            continue;
        std::vector<Leading> leads;
        for (std::size_t k : members)
            leads.push_back(F.lead_of(all[k]));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                if (out.pairs.size() >= caps.max_pairs) {
                    out.truncated = true;
                    return out;
                }
                out.pairs.push_back(
                    CriticalPair{all[members[a]], all[members[b]], lm, scalar_ratio(leads[a].lc, leads[b].lc)});
            }
    }
    return out;
}

StdPoly t_polynomial(const Subalgebra &F, const CriticalPair &pair)
{
    if (!pair.k)
        throw Error(ErrorCode::NoScalarRatio, "leading coefficients of " + F.render(pair.left) + " and " +
                                                  F.render(pair.right) + " have no ratio in K");
    StdPoly t = F.value(pair.left) - F.value(pair.right).scaled(*pair.k);
    if (auto lead = F.algebra().leading(t); lead && !F.algebra().order().less(lead->lm, pair.lm))
        throw std::logic_error("T-polynomial does not drop below the common leading monomial");
    return t;
}

SagbiReport sagbi_test(const Subalgebra &F, int D, const Caps &caps, TestOptions options)
{
    SagbiReport report;
    report.bound = D;
    if (!F.algebra().order().degree_compatible())
        report.warnings.push_back("order is not degree compatible: the degree bound does not bound the search");

    PairList pairs = critical_pairs(F, D, caps);
    report.stats.pairs = pairs.pairs.size();
    bool incomplete = pairs.truncated;
    if (pairs.truncated)
        report.reason = "critical pair enumeration hit a cap";

    // Equal T-polynomials have equal normal-form sets; reduce each once.
    auto poly_less = [](const StdPoly &f, const StdPoly &g) { return f.terms() < g.terms(); };
    std::map<StdPoly, bool, decltype(poly_less)> seen(poly_less);
    bool found = false;
    NormalFormSearch search(F, caps);

    for (const auto &pair : pairs.pairs) {
        if (!pair.k) {
            ++report.stats.no_ratio_pairs;
            report.warnings.push_back("no scalar ratio for pair (" + F.render(pair.left) + ", " +
                                      F.render(pair.right) + "); skipped");
            continue;
        }
        StdPoly t = t_polynomial(F, pair);
        if (t.is_zero()) {
            ++report.stats.zero_t_polynomials;
            continue;
        }
        if (seen.count(t))
            continue;
        ++report.stats.reductions;
        SnfResult r = search.run(t);
        seen.emplace(t, true);
        auto bad = std::find_if(r.traces.begin(), r.traces.end(),
                                [](const ReductionTrace &tr) { return !tr.remainder.is_zero(); });
        if (bad != r.traces.end()) {
            if (!found) {
                found = true;
                report.pair = pair;
                report.t_polynomial = t;
                report.witness = *bad;
            }
            if (!options.examine_all)
                break;
        } else if (r.caps_hit) {
            if (!incomplete)
                report.reason = "normal form search for T(" + F.render(pair.left) + ", " + F.render(pair.right) +
                                ") hit a cap";
            incomplete = true;
        }
    }
    if (found)
        report.verdict = Verdict::Counterexample;
    else if (incomplete)
        report.verdict = Verdict::Inconclusive;
    else
        report.verdict = Verdict::VerifiedUpTo;
    return report;
}

BuildResult sagbi_build(const Algebra &a, const std::vector<StdPoly> &F, int D, int max_iter, const Caps &caps)
{
    BuildResult out;
    out.G = F;
    auto contains = [&](const StdPoly &p) { return std::find(out.G.begin(), out.G.end(), p) != out.G.end(); };

    for (;;) {
        if (out.iterations >= max_iter) {
            out.report.verdict = Verdict::Inconclusive;
            out.report.bound = D;
            out.report.reason = "iteration limit reached before the generating set stabilized";
            return out;
        }
        ++out.iterations;
        Subalgebra H(a, out.G);
        std::size_t before = out.G.size();
        std::vector<AdjoinedElement> fresh;
        // Pairs come lowest degree first; adjoining one remainder per round
        // lets it reduce the T-polynomials examined afterwards.
        PairList pairs = critical_pairs(H, D, caps);
        for (const auto &pair : pairs.pairs) {
            if (!pair.k)
                continue;
            StdPoly t = t_polynomial(H, pair);
            if (t.is_zero())
                continue;
            ReductionTrace tr = snf_first(H, t, caps);
            if (tr.remainder.is_zero() || tr.remainder.is_constant() || contains(tr.remainder))
                continue;
            fresh.push_back(AdjoinedElement{tr.remainder, pair, tr, before, out.iterations});
            break;
        }
        if (fresh.empty()) {
            // The canonical branch is quiet; confirm with the exhaustive test.
            SagbiReport r = sagbi_test(H, D, caps);
            if (r.verdict != Verdict::Counterexample || r.witness.remainder.is_constant() ||
                contains(r.witness.remainder)) {
                if (r.verdict == Verdict::Counterexample) {
                    r.verdict = Verdict::Inconclusive;
                    r.reason = "irreducible remainder cannot be adjoined: " + a.render(r.witness.remainder);
                }
                out.report = std::move(r);
                return out;
            }
            fresh.push_back(AdjoinedElement{r.witness.remainder, *r.pair, r.witness, before, out.iterations});
        }
        for (auto &e : fresh) {
            out.G.push_back(e.element);
            out.adjoined.push_back(std::move(e));
        }
    }
}

} // namespace spbw
