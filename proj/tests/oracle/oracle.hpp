#pragma once

// Slow reference implementations used only to cross-check the engine. They
// share the presentation data with the engine but none of its algorithms:
// products are computed by rewriting the leftmost inversion of explicit words,
// and normal forms by trying every index sequence of matching degree.

#include <spbw/algebra.hpp>

#include <vector>

namespace spbw::oracle
{

// Exponent comparison written out per order kind (no use of MonomialOrder::compare).
int compare(const MonomialOrder &order, const ExpVec &a, const ExpVec &b);
ExpVec leading_monomial(const MonomialOrder &order, const StdPoly &f);

StdPoly word_product(const Algebra &a, const StdPoly &f, const StdPoly &g);
StdPoly word_value(const Algebra &a, const std::vector<std::size_t> &word);

struct BranchResult {
    std::vector<StdPoly> remainders;
    std::size_t leaves = 0;
};

// Every remainder reachable by Algorithm-style one-step reductions over F,
// with candidate products found by expanding all index sequences whose total
// lm-degree matches. Degree-compatible orders only.
BranchResult all_remainders(const Algebra &a, const std::vector<StdPoly> &F, const StdPoly &s);

} // namespace spbw::oracle
