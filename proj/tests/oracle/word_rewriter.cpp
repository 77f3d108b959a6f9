#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace spbw::oracle
{

namespace
{

using Word = std::vector<std::size_t>;
using WordPoly = std::map<Word, RingElem>;

ExpVec counts(const Word &w, std::size_t n)
{
    ExpVec e(n);
    for (std::size_t g : w)
        e[g] += 1;
    return e;
}

void add(WordPoly &p, const Word &w, const RingElem &r)
{
    if (r.is_zero())
        return;
    auto [it, fresh] = p.try_emplace(w, r);
    if (!fresh) {
        it->second += r;
        if (it->second.is_zero())
            p.erase(it);
    }
}

Word standard_word(const ExpVec &e)
{
    Word w;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k)
            w.push_back(i);
    return w;
}

// Rewrites until every word is nondecreasing.
StdPoly reduce(const Algebra &a, WordPoly p)
{
    std::size_t n = a.generators();
    StdPoly out(n);
    std::size_t guard = 0;
    while (!p.empty()) {
        if (++guard > 10'000'000)
            throw std::runtime_error("word rewriting did not terminate");
        auto node = p.extract(p.begin());
        const Word &w = node.key();
        const RingElem &r = node.mapped();
        std::size_t pos = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                pos = k;
                break;
            }
        if (pos == w.size()) {
            out.add_term(counts(w, n), r);
            continue;
        }
        std::size_t j = w[pos], i = w[pos + 1];
        Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
        Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
        Word swapped = prefix;
        swapped.push_back(i);
        swapped.push_back(j);
        swapped.insert(swapped.end(), suffix.begin(), suffix.end());
        add(p, swapped, r.scaled(a.d(i, j)));
        ExpVec pre = counts(prefix, n);
        for (const auto &[e, s] : a.lower(j, i).terms()) {
            Word nw = prefix;
            Word mid = standard_word(e);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            add(p, nw, r * a.sigma().apply_power(pre.data(), s));
        }
    }
    return out;
}

} // namespace

StdPoly word_product(const Algebra &a, const StdPoly &f, const StdPoly &g)
{
    WordPoly p;
    for (const auto &[ea, r] : f.terms())
        for (const auto &[eb, s] : g.terms()) {
            Word w = standard_word(ea);
            Word wb = standard_word(eb);
            w.insert(w.end(), wb.begin(), wb.end());
            add(p, w, r * a.sigma().apply_power(ea.data(), s));
        }
    return reduce(a, std::move(p));
}

StdPoly word_value(const Algebra &a, const std::vector<std::size_t> &word)
{
    WordPoly p;
    add(p, word, RingElem(1));
    return reduce(a, std::move(p));
}

int compare(const MonomialOrder &order, const ExpVec &a, const ExpVec &b)
{
    const auto &prec = order.precedence();
    if (order.kind() != OrderKind::Lex) {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db)
            return da < db ? -1 : 1;
    }
    if (order.kind() == OrderKind::DegRevLex) {
        for (std::size_t k = prec.size(); k-- > 0;) {
            std::size_t v = prec[k];
            if (a[v] != b[v])
                return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t v : prec)
        if (a[v] != b[v])
            return a[v] < b[v] ? -1 : 1;
    return 0;
}

ExpVec leading_monomial(const MonomialOrder &order, const StdPoly &f)
{
    if (f.is_zero())
        throw std::invalid_argument("leading monomial of zero");
    const ExpVec *best = nullptr;
    for (const auto &[e, r] : f.terms())
        if (!best || compare(order, *best, e) < 0)
            best = &e;
    return *best;
}

} // namespace spbw::oracle
