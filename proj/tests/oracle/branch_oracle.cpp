#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace spbw::oracle
{

namespace
{

struct Search {
    const Algebra &a;
    const std::vector<StdPoly> &F;
    std::vector<int> degrees;
    std::map<std::vector<std::size_t>, StdPoly> values;
    BranchResult result;

    const StdPoly &value(const std::vector<std::size_t> &seq)
    {
        auto it = values.find(seq);
        if (it != values.end())
            return it->second;
        StdPoly v = a.one();
        for (std::size_t idx : seq)
            v = word_product(a, v, F[idx]);
        return values.emplace(seq, std::move(v)).first->second;
    }

    void sequences(int remaining, std::vector<std::size_t> &seq, std::vector<std::vector<std::size_t>> &out)
    {
        if (remaining == 0) {
            out.push_back(seq);
            return;
        }
        for (std::size_t i = 0; i < F.size(); ++i)
            if (degrees[i] <= remaining) {
                seq.push_back(i);
                sequences(remaining - degrees[i], seq, out);
                seq.pop_back();
            }
    }

    void explore(const StdPoly &s, int depth)
    {
        if (depth > 200)
            throw std::runtime_error("branch oracle: reduction chain too long");
        if (s.is_zero()) {
            record(s);
            return;
        }
        ExpVec lm = leading_monomial(a.order(), s);
        RingElem lc = s.coefficient(lm);
        std::vector<std::vector<std::size_t>> seqs;
        std::vector<std::size_t> scratch;
        sequences(lm.degree(), scratch, seqs);
        bool reduced = false;
        for (const auto &seq : seqs) {
            const StdPoly &v = value(seq);
            if (v.is_zero())
                continue;
            ExpVec vlm = leading_monomial(a.order(), v);
            if (vlm != lm)
                continue;
            auto k = scalar_ratio(lc, v.coefficient(vlm));
            if (!k)
                continue;
            reduced = true;
            explore(s - v.scaled(*k), depth + 1);
        }
        if (!reduced)
            record(s);
    }

    void record(const StdPoly &s)
    {
        ++result.leaves;
        if (std::find(result.remainders.begin(), result.remainders.end(), s) == result.remainders.end())
            result.remainders.push_back(s);
    }
};

} // namespace

BranchResult all_remainders(const Algebra &a, const std::vector<StdPoly> &F, const StdPoly &s)
{
    if (!a.order().degree_compatible())
        throw std::invalid_argument("branch oracle needs a degree-compatible order");
    Search search{a, F, {}, {}, {}};
    for (const auto &f : F) {
        if (f.is_zero())
            throw std::invalid_argument("zero element in F");
        int d = leading_monomial(a.order(), f).degree();
        if (d == 0)
            throw std::invalid_argument("constant element in F");
        search.degrees.push_back(d);
    }
    search.explore(s, 0);
    return std::move(search.result);
}

} // namespace spbw::oracle
