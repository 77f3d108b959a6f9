#include "support.hpp"

#include <spbw/compose.hpp>
#include <spbw/errors.hpp>

#include <doctest.h>

using namespace spbw;
using namespace test_support;

namespace
{

Composition theta(const Algebra &a, const std::vector<std::string> &texts)
{
    std::vector<StdPoly> th;
    for (const auto &t : texts)
        th.push_back(P(a, t));
    return Composition(a, th);
}

const char *commutative_xy = R"({"generators": ["x", "y"], "order": {"kind": "deglex", "precedence": ["x", "y"]}})";

} // namespace

TEST_CASE("substitution")
{
    Algebra j = fixture("jordan");
    Composition sq = theta(j, {"x^2", "y^2"});
    CHECK(R(j, substitute(j, P(j, "x*y"), sq)) == "x^2*y^2");
    CHECK(substitute(j, P(j, "3"), sq) == P(j, "3"));

    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        StdPoly f = random_poly(j, rng, 3, 3);
        StdPoly g = random_poly(j, rng, 3, 3);
        CHECK(substitute(j, f + g, sq) == substitute(j, f, sq) + substitute(j, g, sq));
    }

    CHECK_THROWS_AS(theta(j, {"x"}), Error);
    CHECK_THROWS_AS(theta(j, {"x", "2"}), Error);
    Algebra diff = fixture("diffusion");
    CHECK_THROWS_AS(theta(diff, {"D1", "D2", "D3"}), Error);
}

TEST_CASE("admissibility")
{
    Algebra j = fixture("jordan");
    CHECK(check_admissible(j, theta(j, {"x", "y"})).admissible);
    AdmissibilityReport sq = check_admissible(j, theta(j, {"x^2", "y^2"}));
    REQUIRE_FALSE(sq.admissible);
    REQUIRE(sq.violations.size() == 1);
    CHECK(sq.violations[0].j == 1);
    CHECK(sq.violations[0].i == 0);
    CHECK(sq.violations[0].difference ==
          j.mul(P(j, "y^2"), P(j, "x^2")) - j.mul(P(j, "x^2"), P(j, "y^2")) - j.mul(P(j, "x^2"), P(j, "x^2")));

    // x -> a x, y -> a y + c x + e respects yx = xy + x^2.
    Composition affine = theta(j, {"2*x", "2*y+3*x+1"});
    CHECK(check_admissible(j, affine).admissible);
    CHECK_FALSE(check_admissible(j, theta(j, {"2*x", "3*y"})).admissible);

    Algebra s = fixture("sklyanin0");
    CHECK(check_admissible(s, theta(s, {"2*x", "a*y", "-z"})).admissible);
    // y^2 x^2 = d^4 x^2 y^2 while the relation asks for d.
    CHECK_FALSE(check_admissible(s, theta(s, {"x^2", "y^2", "z^2"})).admissible);

    Algebra t = fixture("tdim");
    CHECK(check_admissible(t, theta(t, {"5*x", "y+2", "-z"})).admissible);
    CHECK_FALSE(check_admissible(t, theta(t, {"x", "y", "z+1"})).admissible);
}

TEST_CASE("admissible substitution is multiplicative")
{
    std::mt19937 rng(5);
    Algebra j = fixture("jordan");
    Composition affine = theta(j, {"2*x", "2*y+3*x+1"});
    std::vector<StdPoly> H{P(j, "x^2+y"), P(j, "x*y-1")};
    std::vector<StdPoly> HT = substitute_all(j, H, affine);
    Subalgebra SH(j, H), SHT(j, HT);
    std::uniform_int_distribution<std::size_t> idx(0, 1), len(0, 3);
    for (int k = 0; k < 20; ++k) {
        FMonomial m;
        for (std::size_t l = len(rng); l > 0; --l)
            m.seq.push_back(idx(rng));
        CHECK(substitute(j, SH.value(m), affine) == SHT.value(m));
    }
    for (int k = 0; k < 20; ++k) {
        StdPoly f = random_poly(j, rng, 3, 2), g = random_poly(j, rng, 3, 2);
        CHECK(substitute(j, j.mul(f, g), affine) == j.mul(substitute(j, f, affine), substitute(j, g, affine)));
    }
}

TEST_CASE("order and nonequality compatibility")
{
    Algebra j = fixture("jordan");
    CompatibilityReport sq = check_order_compatible(j, theta(j, {"x^2", "y^2"}), 6);
    CHECK(sq.holds);
    CHECK(sq.bound == 6);
    CHECK(check_nonequality_compatible(j, theta(j, {"x^2", "y^2"}), 6).holds);
    CHECK(check_order_compatible(j, theta(j, {"x", "y"}), 6).holds);

    Algebra c = cli::load_algebra_text(commutative_xy);
    CompatibilityReport swap = check_order_compatible(c, theta(c, {"y", "x"}), 3);
    REQUIRE_FALSE(swap.holds);
    CHECK(R(c, StdPoly::monomial(swap.witness->first, RingElem(1))) == "y");
    CHECK(R(c, StdPoly::monomial(swap.witness->second, RingElem(1))) == "x");
    CHECK(check_nonequality_compatible(c, theta(c, {"y", "x"}), 3).holds);

    CompatibilityReport same = check_nonequality_compatible(c, theta(c, {"x*y", "x*y"}), 3);
    REQUIRE_FALSE(same.holds);
    CHECK(same.witness->first.degree() == 1);
    CHECK(same.witness->second.degree() == 1);
    CHECK_FALSE(check_order_compatible(c, theta(c, {"x*y", "x*y"}), 3).holds);
}

TEST_CASE("commutation report")
{
    Algebra s = fixture("sklyanin0");
    std::vector<StdPoly> F{P(s, "x^2"), P(s, "y*z")};
    CommutationReport r = check_commutation(s, F, theta(s, {"2*x", "a*y", "-z"}), 4, Caps{});
    CHECK(r.admissibility.admissible);
    CHECK(r.order.holds);
    CHECK(r.nonequality.holds);
    REQUIRE(r.forward);
    CHECK(r.forward->applicable);
    CHECK(r.forward->passed);
    CHECK(r.forward->composed.verdict == Verdict::VerifiedUpTo);
    CHECK(r.hat_samples > 0);
    CHECK(r.hat_failures.empty());
    CHECK(r.lemma_pairs > 0);
    CHECK(r.lemma_failures.empty());
    CHECK(r.consistent());

    Algebra j = fixture("jordan");
    CommutationReport id = check_commutation(j, {P(j, "x^2"), P(j, "y")}, theta(j, {"x", "y"}), 3, Caps{});
    CHECK(id.order.holds);
    CHECK(id.consistent());

    // y -> y + x^2 is admissible but sends y and x^2 to the same leading monomial.
    CommutationReport bad = check_commutation(j, {P(j, "x^2"), P(j, "y")}, theta(j, {"x", "y+x^2"}), 2, Caps{});
    CHECK(bad.admissibility.admissible);
    CHECK_FALSE(bad.order.holds);
    CHECK_FALSE(bad.nonequality.holds);
    REQUIRE(bad.converse);
    CHECK(bad.converse->H.size() == 2);
    CHECK_FALSE(bad.forward);

    CommutationReport skipped = check_commutation(s, F, theta(s, {"x^2", "y^2", "z^2"}), 2, Caps{});
    CHECK_FALSE(skipped.admissibility.admissible);
    CHECK_FALSE(skipped.forward);
    CHECK_FALSE(skipped.notes.empty());
}
