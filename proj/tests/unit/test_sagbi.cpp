#include "oracle.hpp"
#include "support.hpp"

#include <spbw/errors.hpp>
#include <spbw/sagbi.hpp>

#include <doctest.h>

#include <set>

using namespace spbw;
using namespace test_support;

namespace
{

std::vector<StdPoly> polys(const Algebra &a, const std::vector<std::string> &texts)
{
    std::vector<StdPoly> out;
    for (const auto &t : texts)
        out.push_back(P(a, t));
    return out;
}

std::set<std::string> remainder_set(const Algebra &a, const SnfResult &r)
{
    std::set<std::string> out;
    for (const auto &t : r.traces)
        out.insert(R(a, t.remainder));
    return out;
}

std::set<std::string> oracle_set(const Algebra &a, const std::vector<StdPoly> &F, const StdPoly &s)
{
    std::set<std::string> out;
    for (const auto &r : oracle::all_remainders(a, F, s).remainders)
        out.insert(R(a, r));
    return out;
}

FMonomial seq(std::vector<std::size_t> s)
{
    return FMonomial{std::move(s)};
}

Algebra tdim_zyx()
{
    Algebra a = fixture("tdim");
    return a.with_order(cli::parse_order(a, "deglex:z,y,x"));
}

} // namespace

TEST_CASE("candidates follow leading-monomial subset sums")
{
    Algebra a = fixture("jordan");
    Subalgebra F(a, polys(a, {"x^2", "y", "x*y+y"}));
    Caps caps;

    CandidateList c = candidates(F, P(a, "x^3*y+y"), caps);
    REQUIRE(c.items.size() == 2);
    CHECK(c.items[0].m == seq({0, 2}));
    CHECK(c.items[1].m == seq({2, 0}));
    CHECK(c.items[0].k.is_one());
    CHECK(c.items[1].k.is_one());
    CHECK_FALSE(c.truncated);

    CHECK(candidates(F, P(a, "x^3"), caps).items.empty());

    CandidateList one = candidates(F, P(a, "1"), caps);
    REQUIRE(one.items.size() == 1);
    CHECK(one.items[0].m.seq.empty());
    CHECK(one.items[0].k.is_one());

    CandidateList scaled = candidates(F, P(a, "-3*x^2"), caps);
    REQUIRE(scaled.items.size() == 1);
    CHECK(scaled.items[0].k == Scalar(-3));

    CHECK_THROWS_AS(Subalgebra(a, polys(a, {"x", "5"})), Error);
    CHECK_THROWS_AS(Subalgebra(a, {a.zero()}), Error);
}

TEST_CASE("normal forms: Jordan plane weak reduction")
{
    Algebra a = fixture("jordan");
    auto Fv = polys(a, {"x^2", "y", "x*y+y"});
    Subalgebra F(a, Fv);
    StdPoly g = P(a, "x^3*y+y");

    SnfResult all = snf_all(F, g, Caps{});
    auto got = remainder_set(a, all);
    CHECK(got.count("0"));
    CHECK(got.count("-2*x^3+y"));
    CHECK(got == oracle_set(a, Fv, g));
    CHECK(got == std::set<std::string>{"0", "2*x^3+y", "-2*x^3+y"});
    CHECK(classify(all) == Reduction::WeakOnly);
    for (const auto &t : all.traces) {
        CHECK(replay(F, g, t));
        CHECK(height(F, t.steps) == a.leading(g)->lm);
        if (!t.remainder.is_zero())
            CHECK(candidates(F, t.remainder, Caps{}).items.empty());
    }
    // Remainders come out in canonical order, zero first.
    CHECK(all.traces.front().remainder.is_zero());

    ReductionTrace first = snf_first(F, g, Caps{});
    CHECK(replay(F, g, first));
    CHECK(got.count(R(a, first.remainder)));
    CHECK(first.steps.front().m == seq({0, 2}));

    SnfResult irreducible = snf_all(F, P(a, "x"), Caps{});
    REQUIRE(irreducible.traces.size() == 1);
    CHECK(irreducible.traces[0].steps.empty());
    CHECK(R(a, irreducible.traces[0].remainder) == "x");
    CHECK(reduces(F, P(a, "x"), Caps{}) == Reduction::None);
}

TEST_CASE("normal forms: strong reduction in the three-dimensional algebra")
{
    Algebra a = fixture("tdim");
    auto Fv = polys(a, {"x^2", "z", "x*y+z", "x^3"});
    Subalgebra F(a, Fv);
    StdPoly s = P(a, "x^3*y+z");
    SnfResult all = snf_all(F, s, Caps{});
    CHECK(remainder_set(a, all) == std::set<std::string>{"0"});
    CHECK(oracle_set(a, Fv, s) == std::set<std::string>{"0"});
    CHECK(reduces(F, s, Caps{}) == Reduction::Strong);
    for (const auto &t : all.traces)
        CHECK(replay(F, s, t));
}

TEST_CASE("normal forms agree with the branch oracle on random inputs")
{
    std::mt19937 rng(20261016);
    for (const char *name : {"jordan", "tdim", "dispin", "sklyanin0"}) {
        Algebra a = fixture(name);
        for (int round = 0; round < 6; ++round) {
            std::vector<StdPoly> Fv;
            while (Fv.size() < 3) {
                StdPoly f = random_poly(a, rng, 2, 2);
                if (!f.is_zero() && !f.is_constant())
                    Fv.push_back(f);
            }
            Subalgebra F(a, Fv);
            StdPoly s = random_poly(a, rng, 3, 3);
            if (s.is_zero())
                continue;
            SnfResult r = snf_all(F, s, Caps{});
            CAPTURE(name);
            CAPTURE(R(a, s));
            CHECK(remainder_set(a, r) == oracle_set(a, Fv, s));
            for (const auto &t : r.traces)
                CHECK(replay(F, s, t));
        }
    }
}

TEST_CASE("critical pairs and T-polynomials")
{
    Algebra t = tdim_zyx();
    Subalgebra G(t, polys(t, {"z*y", "-z*y+x", "-y+x"}));
    PairList tp = critical_pairs(G, 2, Caps{});
    bool found = false;
    for (const auto &p : tp.pairs)
        found = found || (p.left == seq({0}) && p.right == seq({1}));
    CHECK(found);
    for (const auto &p : tp.pairs) {
        REQUIRE(p.k);
        StdPoly T = t_polynomial(G, p);
        if (auto l = t.leading(T))
            CHECK(t.order().less(l->lm, p.lm));
    }

    Algebra j = fixture("jordan");
    Subalgebra xy(j, polys(j, {"x", "y"}));
    PairList jp = critical_pairs(xy, 2, Caps{});
    REQUIRE(jp.pairs.size() == 1);
    CHECK(jp.pairs[0].left == seq({0, 1}));
    CHECK(jp.pairs[0].right == seq({1, 0}));

    Subalgebra single(j, polys(j, {"x^2"}));
    CHECK(critical_pairs(single, 12, Caps{}).pairs.empty());

    Algebra d = fixture("dispin");
    Subalgebra dispin(d, polys(d, {"x*y", "y*z", "x*z", "z^2", "x*y+x*z", "y*z+z^2"}));
    CriticalPair dp{seq({4, 1}), seq({0, 5}), dispin.lm_of(seq({4, 1})), Scalar(1)};
    CHECK(R(d, t_polynomial(dispin, dp)) == "-x*z^2");

    Algebra s = fixture("sklyanin0");
    Subalgebra sk(s, polys(s, {"y*z+z^2", "y*z+z", "z^2-z"}));
    CriticalPair sp{seq({0, 0}), seq({1, 1}), sk.lm_of(seq({0, 0})), Scalar(1)};
    CHECK(t_polynomial(sk, sp) == P(s, "(1+b^2/a^2)*y*z^3 + z^4 + (b/a-1)*y*z^2 - z^2"));

    CriticalPair no_ratio = sp;
    no_ratio.k.reset();
    CHECK_THROWS_AS(t_polynomial(sk, no_ratio), Error);
}

TEST_CASE("SAGBI test verdicts")
{
    Algebra t = tdim_zyx();
    Subalgebra G(t, polys(t, {"z*y", "-z*y+x", "-y+x"}));
    SagbiReport r = sagbi_test(G, 4, Caps{});
    CHECK(r.verdict == Verdict::Counterexample);
    REQUIRE(r.pair);
    CHECK_FALSE(r.witness.remainder.is_zero());
    CHECK(replay(G, r.t_polynomial, r.witness));
    CHECK(r.t_polynomial == t_polynomial(G, *r.pair));

    Algebra d = fixture("dispin");
    Subalgebra dispin(d, polys(d, {"x*y", "y*z", "x*z", "z^2", "x*y+x*z", "y*z+z^2"}));
    CHECK(sagbi_test(dispin, 4, Caps{}).verdict == Verdict::Counterexample);

    Algebra s = fixture("sklyanin0");
    Subalgebra sk(s, polys(s, {"y*z+z^2", "y*z+z", "z^2-z"}));
    CHECK(sagbi_test(sk, 4, Caps{}).verdict == Verdict::Counterexample);

    Subalgebra terms(s, polys(s, {"x^2", "2*y*z", "-a*z"}));
    SagbiReport ok = sagbi_test(terms, 4, Caps{});
    CHECK(ok.verdict == Verdict::VerifiedUpTo);
    CHECK(ok.bound == 4);
    CHECK(ok.stats.pairs > 0);
    CHECK(ok.stats.zero_t_polynomials == ok.stats.pairs);

    Caps tiny;
    tiny.max_pairs = 1;
    CHECK(sagbi_test(terms, 4, tiny).verdict == Verdict::Inconclusive);
}

TEST_CASE("completion adjoins certified elements")
{
    Algebra t = tdim_zyx();
    auto Fv = polys(t, {"z*y", "-z*y+x", "-y+x"});
    BuildResult b = sagbi_build(t, Fv, 4, 10, Caps{});
    REQUIRE(b.G.size() > Fv.size());
    CHECK(std::equal(Fv.begin(), Fv.end(), b.G.begin()));
    for (const auto &e : b.adjoined) {
        std::vector<StdPoly> before(b.G.begin(), b.G.begin() + static_cast<long>(e.generators_before));
        Subalgebra H(t, before);
        StdPoly T = t_polynomial(H, e.pair);
        CHECK(replay(H, T, e.trace));
        CHECK(e.trace.remainder == e.element);
        // Independent check: the element lies in the span of F-monomials.
        Subalgebra F(t, Fv);
        CHECK(span_membership(F, e.element, 4, Caps{}).found);
    }
    CHECK(b.report.verdict == Verdict::VerifiedUpTo);

    Algebra s = fixture("sklyanin0");
    auto terms = polys(s, {"x^2", "y*z"});
    BuildResult same = sagbi_build(s, terms, 4, 3, Caps{});
    CHECK(same.G == terms);
    CHECK(same.adjoined.empty());
    CHECK(same.report.verdict == Verdict::VerifiedUpTo);
}

TEST_CASE("membership and the linear-span check")
{
    Algebra a = fixture("jordan");
    Subalgebra F(a, polys(a, {"x^2", "y", "x*y+y"}));
    StdPoly g = P(a, "x^3*y+y");

    MembershipResult m = membership(F, g, Caps{});
    CHECK(m.kind == MembershipKind::Member);
    REQUIRE(m.traces.size() == 1);
    CHECK(m.traces[0].remainder.is_zero());
    CHECK(replay(F, g, m.traces[0]));

    std::vector<Term> expected{{Scalar(1), seq({0, 2})}, {Scalar(-1), seq({0, 1})}, {Scalar(1), seq({1})}};
    CHECK(evaluate(F, expected) == g);
    CHECK(height(F, {expected[0], expected[1]}) == ExpVec(std::vector<int>{3, 1}));
    CHECK_THROWS_AS(height(F, {}), Error);

    SpanResult sp = span_membership(F, g, 4, Caps{});
    CHECK(sp.found);
    CHECK(evaluate(F, sp.combination) == g);

    MembershipResult x = membership(F, P(a, "x"), Caps{});
    CHECK(x.kind == MembershipKind::NoReductionFound);
    CHECK_FALSE(x.certified);
    CHECK_FALSE(span_membership(F, P(a, "x"), 6, Caps{}).found);

    MembershipResult q2 = membership(F, P(a, "y"), Caps{});
    CHECK(q2.kind == MembershipKind::Member);
    CHECK(q2.traces[0].steps.size() == 1);

    SpanResult zero = span_membership(F, a.zero(), 3, Caps{});
    CHECK(zero.found);
    CHECK(zero.combination.empty());

    Caps tiny;
    tiny.max_span = 5;
    CHECK_THROWS_AS(span_membership(F, g, 6, tiny), Error);
}

TEST_CASE("verified sets reduce every element of their span to zero")
{
    std::mt19937 rng(7);
    Algebra s = fixture("sklyanin0");
    Subalgebra F(s, polys(s, {"x^2", "y*z", "3*z^2"}));
    REQUIRE(sagbi_test(F, 6, Caps{}).verdict == Verdict::VerifiedUpTo);
    std::vector<FMonomial> small{seq({}), seq({0}), seq({1}), seq({2}), seq({1, 2}), seq({2, 1}), seq({0, 1})};
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int round = 0; round < 10; ++round) {
        std::vector<Term> combo;
        for (const auto &m : small)
            if (int c = coef(rng))
                combo.push_back(Term{Scalar(c), m});
        StdPoly v = evaluate(F, combo);
        SnfResult r = snf_all(F, v, Caps{});
        CHECK(remainder_set(s, r) == std::set<std::string>{"0"});
        MembershipResult m = membership(F, v, Caps{}, 6);
        CHECK(m.kind == MembershipKind::Member);
    }
    MembershipResult no = membership(F, P(s, "x*y"), Caps{}, 6);
    CHECK(no.kind == MembershipKind::NoReductionFound);
    CHECK(no.certified);
}

TEST_CASE("caps parsing")
{
    Caps c = Caps::parse("max_branches=5,max_pairs=7");
    CHECK(c.max_branches == 5);
    CHECK(c.max_pairs == 7);
    CHECK(c.max_steps == Caps{}.max_steps);
    CHECK_THROWS_AS(Caps::parse("max_branches"), Error);
    CHECK_THROWS_AS(Caps::parse("bogus=1"), Error);
    CHECK_THROWS_AS(Caps::parse("max_steps=-1"), Error);

    Algebra a = fixture("jordan");
    Subalgebra F(a, polys(a, {"x^2", "y", "x*y+y"}));
    Caps tiny;
    tiny.max_branches = 2;
    CHECK(reduces(F, P(a, "x^3*y+y"), tiny) == Reduction::Inconclusive);
}
