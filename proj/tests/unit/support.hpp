#pragma once

#include <spbw/cli.hpp>

#include <string>

namespace test_support
{

inline spbw::Algebra fixture(const std::string &name)
{
    return spbw::cli::load_algebra(std::string(SPBW_FIXTURE_DIR) + "/" + name + ".alg");
}

inline spbw::StdPoly P(const spbw::Algebra &a, const std::string &text)
{
    return spbw::cli::parse_poly(a, text);
}

inline std::string R(const spbw::Algebra &a, const spbw::StdPoly &f)
{
    return spbw::cli::render_canonical(a, f);
}

} // namespace test_support

#include <random>

namespace test_support
{

inline spbw::ExpVec random_exp(std::size_t n, int max_degree, std::mt19937 &rng)
{
    spbw::ExpVec e(n);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    int d = deg(rng);
    for (int k = 0; k < d; ++k)
        e[var(rng)] += 1;
    return e;
}

// Small random coefficient in R: integer times a parameter power times an R-monomial.
inline spbw::RingElem random_coefficient(const spbw::Algebra &a, std::mt19937 &rng)
{
    using namespace spbw;
    std::uniform_int_distribution<int> c(-3, 3), pick(0, 3);
    int v = c(rng);
    if (v == 0)
        v = 1;
    Scalar k(v);
    const auto &params = a.presentation().parameters;
    if (!params.empty() && pick(rng) == 0)
        k *= Scalar::parameter(std::uniform_int_distribution<std::size_t>(0, params.size() - 1)(rng));
    std::vector<int> e(a.ring().size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        int lo = a.ring().is_laurent(i) ? -1 : 0;
        e[i] = std::uniform_int_distribution<int>(lo, 1)(rng);
    }
    return RingElem::monomial(Exponents(e), k);
}

inline spbw::StdPoly random_poly(const spbw::Algebra &a, std::mt19937 &rng, int terms, int max_degree)
{
    spbw::StdPoly f = a.zero();
    for (int k = 0; k < terms; ++k)
        f.add_term(random_exp(a.generators(), max_degree, rng), random_coefficient(a, rng));
    return f;
}

inline const std::vector<std::string> &fixture_names()
{
    static const std::vector<std::string> names{"jordan", "tdim",  "dispin", "diffusion",
                                                 "so3q",   "aw3",   "uqsl2",  "sklyanin0"};
    return names;
}

} // namespace test_support
