#include <spbw/compose.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace spbw
{

Composition::Composition(const Algebra &a, std::vector<StdPoly> theta) : m_theta(std::move(theta))
{
    if (!a.ring().is_field())
        throw Error(ErrorCode::CoefficientRingNotScalar, "composition needs the coefficient ring to be the base field");
    if (m_theta.size() != a.generators())
        throw Error(ErrorCode::DimensionMismatch, "Theta has " + std::to_string(m_theta.size()) + " entries for " +
                                                      std::to_string(a.generators()) + " generators");
    for (std::size_t i = 0; i < m_theta.size(); ++i) {
        if (m_theta[i].is_zero() || m_theta[i].is_constant())
            throw Error(ErrorCode::InvalidArgument, "theta_" + std::to_string(i + 1) + " is constant");
        m_hat.push_back(a.leading(m_theta[i])->lm);
    }
}

ExpVec Composition::hat_exponent(const ExpVec &e) const
{
    ExpVec out(m_hat.front().size());
    for (std::size_t i = 0; i < m_hat.size(); ++i)
        if (e[i] != 0)
            out = out + m_hat[i].scaled(e[i]);
    return out;
}

int Composition::hat_degree() const
{
    int d = 0;
    for (const auto &h : m_hat)
        d = std::max(d, h.degree());
    return d;
}

StdPoly substitute(const Algebra &a, const StdPoly &f, const Composition &theta)
{
    const auto &th = theta.theta();
    if (f.generators() != a.generators() || th.size() != a.generators())
        throw Error(ErrorCode::DimensionMismatch, "substitution dimensions do not match");
    // powers[i][k] = theta_i^k
    std::vector<std::vector<StdPoly>> powers(th.size(), std::vector<StdPoly>{a.one()});
    auto power = [&](std::size_t i, int k) -> const StdPoly & {
        while (static_cast<int>(powers[i].size()) <= k)
            powers[i].push_back(a.mul(powers[i].back(), th[i]));
        return powers[i][k];
    };
    StdPoly out = a.zero();
    for (const auto &[e, r] : f.terms()) {
        auto k = r.as_scalar();
        if (!k)
            throw Error(ErrorCode::CoefficientRingNotScalar, "substitution needs scalar coefficients");
        StdPoly term = a.one();
        for (std::size_t i = 0; i < th.size(); ++i)
            if (e[i] > 0)
                term = a.mul(term, power(i, e[i]));
        out += term.scaled(*k);
    }
    return out;
}

std::vector<StdPoly> substitute_all(const Algebra &a, const std::vector<StdPoly> &F, const Composition &theta)
{
    std::vector<StdPoly> out;
    for (const auto &f : F)
        out.push_back(substitute(a, f, theta));
    return out;
}

AdmissibilityReport check_admissible(const Algebra &a, const Composition &theta)
{
    AdmissibilityReport out;
    const auto &th = theta.theta();
    for (std::size_t j = 0; j < a.generators(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            StdPoly diff = a.mul(th[j], th[i]) - a.mul(th[i], th[j]).scaled(a.d(i, j)) -
                           substitute(a, a.lower(j, i), theta);
            if (!diff.is_zero()) {
                out.admissible = false;
                out.violations.push_back(RelationViolation{j, i, std::move(diff)});
            }
        }
    return out;
}

namespace
{

std::vector<ExpVec> monomials_up_to(std::size_t n, int D)
{
    std::vector<ExpVec> out;
    ExpVec e(n);
    auto visit = [&](auto &self, std::size_t var, int budget) -> void {
        if (var == n) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= budget; ++k) {
            e[var] = k;
            self(self, var + 1, budget - k);
        }
        e[var] = 0;
    };
    visit(visit, 0, D);
    return out;
}

std::vector<ExpVec> sorted_monomials(const Algebra &a, int D)
{
    std::vector<ExpVec> all = monomials_up_to(a.generators(), D);
    std::sort(all.begin(), all.end(), [&](const ExpVec &x, const ExpVec &y) { return a.order().less(x, y); });
    return all;
}

} // namespace

CompatibilityReport check_order_compatible(const Algebra &a, const Composition &theta, int D)
{
    CompatibilityReport out;
    out.bound = D;
    // The images are totally ordered, so it is enough that they increase
    // along the sorted monomials.
    std::vector<ExpVec> all = sorted_monomials(a, D);
    for (std::size_t k = 1; k < all.size(); ++k)
        if (!a.order().less(theta.hat_exponent(all[k - 1]), theta.hat_exponent(all[k]))) {
            out.holds = false;
            out.witness = std::make_pair(all[k - 1], all[k]);
            return out;
        }
    return out;
}

CompatibilityReport check_nonequality_compatible(const Algebra &a, const Composition &theta, int D)
{
    CompatibilityReport out;
    out.bound = D;
    std::map<ExpVec, ExpVec> seen;
    for (const auto &e : sorted_monomials(a, D)) {
        auto [it, fresh] = seen.try_emplace(theta.hat_exponent(e), e);
        if (!fresh) {
            out.holds = false;
            out.witness = std::make_pair(it->second, e);
            return out;
        }
    }
    return out;
}

bool CommutationReport::consistent() const
{
    return implication_ok && (!forward || forward->passed) && hat_failures.empty() && lemma_failures.empty();
}

CommutationReport check_commutation(const Algebra &a, const std::vector<StdPoly> &F, const Composition &theta, int D,
                                    const Caps &caps)
{
    CommutationReport out;
    out.admissibility = check_admissible(a, theta);
    int composed_bound = D * theta.hat_degree();
    out.order = check_order_compatible(a, theta, composed_bound);
    out.nonequality = check_nonequality_compatible(a, theta, composed_bound);
    out.implication_ok = !out.order.holds || out.nonequality.holds;
    if (!out.admissibility.admissible) {
        out.notes.push_back("Theta does not respect the defining relations; substitution is not multiplicative and "
                            "the commutation checks were skipped");
        return out;
    }

    if (out.order.holds) {
        // Exponent-level leading terms on every monomial of degree <= D and on
        // a few random combinations.
        std::vector<ExpVec> monos = sorted_monomials(a, D);
        std::vector<StdPoly> samples;
        for (const auto &e : monos)
            samples.push_back(StdPoly::monomial(e, RingElem(1)));
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int k = 0; k < 10; ++k) {
            StdPoly f = a.zero();
            for (int t = 0; t < 3; ++t)
                if (int c = coef(rng))
                    f.add_term(monos[pick(rng)], RingElem(Scalar(c)));
            if (!f.is_zero())
                samples.push_back(f);
        }
        for (const auto &f : samples) {
            ++out.hat_samples;
            StdPoly image = substitute(a, f, theta);
            auto lead = a.leading(image);
            if (!lead || lead->lm != theta.hat_exponent(a.leading(f)->lm))
                out.hat_failures.push_back(f);
        }

        ForwardCheck fc;
        fc.composed_bound = composed_bound;
        Subalgebra S(a, F);
        fc.original = sagbi_test(S, D, caps);
        std::vector<StdPoly> FT = substitute_all(a, F, theta);
        bool constant = std::any_of(FT.begin(), FT.end(), [](const StdPoly &f) { return f.is_constant(); });
        if (constant) {
            out.notes.push_back("F o Theta contains a constant; forward check skipped");
        } else {
            Subalgebra ST(a, FT);
            PairList pairs = critical_pairs(ST, composed_bound, caps);
            for (const auto &p : pairs.pairs) {
                ++out.lemma_pairs;
                if (S.lm_of(p.left) != S.lm_of(p.right))
                    out.lemma_failures.push_back(p);
            }
            if (fc.original.verdict == Verdict::VerifiedUpTo) {
                fc.applicable = true;
                fc.composed = sagbi_test(ST, composed_bound, caps);
                fc.passed = fc.composed.verdict != Verdict::Counterexample;
            } else {
                out.notes.push_back("F is not verified up to the bound; forward implication has no premise");
            }
        }
        out.forward = std::move(fc);
    } else if (out.order.witness) {
        ConverseProbe probe;
        probe.v = out.order.witness->first;
        probe.u = out.order.witness->second;
        StdPoly u = StdPoly::monomial(probe.u, RingElem(1));
        StdPoly v = StdPoly::monomial(probe.v, RingElem(1));
        bool equal_images = theta.hat_exponent(probe.u) == theta.hat_exponent(probe.v);
        probe.H = {equal_images ? u - a.one() : u - v, v};
        probe.original = sagbi_test(Subalgebra(a, probe.H), D, caps);
        std::vector<StdPoly> HT = substitute_all(a, probe.H, theta);
        if (std::any_of(HT.begin(), HT.end(), [](const StdPoly &f) { return f.is_constant(); })) {
            out.notes.push_back("H o Theta contains a constant; converse probe not run");
        } else {
            probe.composed = sagbi_test(Subalgebra(a, HT), composed_bound, caps);
            probe.demonstrated = probe.original.verdict == Verdict::VerifiedUpTo &&
                                 probe.composed.verdict == Verdict::Counterexample;
        }
        out.converse = std::move(probe);
    }
    return out;
}

} // namespace spbw
