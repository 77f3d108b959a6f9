#include <spbw/sagbi.hpp>

#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>

namespace spbw
{

Caps Caps::parse(std::string_view text)
{
    return parse(text, Caps{});
}

Caps Caps::parse(std::string_view text, Caps base)
{
    while (!text.empty()) {
        std::size_t comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
        if (item.empty())
            continue;
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::InvalidArgument, "caps entry '" + std::string(item) + "' is not key=value");
        std::string_view key = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        std::size_t v = 0;
        auto [end, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || end != val.data() + val.size() || v == 0)
            throw Error(ErrorCode::InvalidArgument, "caps value '" + std::string(val) + "' is not a positive integer");
        if (key == "max_branches")
            base.max_branches = v;
        else if (key == "max_steps")
            base.max_steps = v;
        else if (key == "max_pairs")
            base.max_pairs = v;
        else if (key == "max_span")
            base.max_span = v;
        else
            throw Error(ErrorCode::InvalidArgument, "unknown caps key '" + std::string(key) + "'");
    }
    return base;
}

Caps Caps::from_env()
{
    const char *env = std::getenv("SPBW_CAPS");
    return env ? parse(env) : Caps{};
}

std::string_view to_string(Reduction r)
{
    switch (r) {
    case Reduction::Strong:
        return "Strong";
    case Reduction::WeakOnly:
        return "WeakOnly";
    case Reduction::None:
        return "None";
    case Reduction::Inconclusive:
        break;
    }
    return "Inconclusive";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::VerifiedUpTo:
        return "VerifiedUpTo";
    case Verdict::Counterexample:
        return "Counterexample";
    case Verdict::Inconclusive:
        break;
    }
    return "Inconclusive";
}

std::string_view to_string(MembershipKind k)
{
    switch (k) {
    case MembershipKind::Member:
        return "Member";
    case MembershipKind::NoReductionFound:
        return "NoReductionFound";
    case MembershipKind::Inconclusive:
        break;
    }
    return "Inconclusive";
}

struct Subalgebra::Memo {
    std::mutex mutex;
    std::map<std::vector<std::size_t>, StdPoly> values;
};

Subalgebra::Subalgebra(Algebra a, std::vector<StdPoly> F)
    : m_alg(std::move(a)), m_F(std::move(F)), m_memo(std::make_shared<Memo>())
{
    for (std::size_t i = 0; i < m_F.size(); ++i) {
        if (m_F[i].is_zero() || m_F[i].is_constant())
            throw Error(ErrorCode::ConstantInF, "generator q" + std::to_string(i + 1) + " is " +
                                                    (m_F[i].is_zero() ? "zero" : "constant"));
        m_lead.push_back(*m_alg.leading(m_F[i]));
    }
}

const StdPoly &Subalgebra::value(const FMonomial &m) const
{
    std::lock_guard lock(m_memo->mutex);
    auto &values = m_memo->values;
    if (auto it = values.find(m.seq); it != values.end())
        return it->second;
    // Extend from the longest memoized prefix.
    std::size_t len = m.seq.size();
    const StdPoly *acc = nullptr;
    while (len > 0) {
        --len;
        std::vector<std::size_t> prefix(m.seq.begin(), m.seq.begin() + len);
        if (auto it = values.find(prefix); it != values.end()) {
            acc = &it->second;
            break;
        }
    }
    if (!acc) {
        auto [it, fresh] = values.emplace(std::vector<std::size_t>{}, m_alg.one());
        acc = &it->second;
        len = 0;
    }
    for (std::size_t k = len; k < m.seq.size(); ++k) {
        StdPoly next = m_alg.mul(*acc, m_F.at(m.seq[k]));
        std::vector<std::size_t> prefix(m.seq.begin(), m.seq.begin() + k + 1);
        acc = &values.emplace(std::move(prefix), std::move(next)).first->second;
    }
    return *acc;
}

Leading Subalgebra::lead_of(const FMonomial &m) const
{
    Leading acc{ExpVec(m_alg.generators()), RingElem(1)};
    for (std::size_t i : m.seq)
        acc = m_alg.lead_product(acc, m_lead.at(i));
    return acc;
}

ExpVec Subalgebra::lm_of(const FMonomial &m) const
{
    ExpVec e(m_alg.generators());
    for (std::size_t i : m.seq)
        e = e + m_lead.at(i).lm;
    return e;
}

int Subalgebra::lm_degree(const FMonomial &m) const
{
    int d = 0;
    for (std::size_t i : m.seq)
        d += m_lead.at(i).lm.degree();
    return d;
}

std::string Subalgebra::render(const FMonomial &m) const
{
    if (m.seq.empty())
        return "1";
    std::string out;
    for (std::size_t k = 0; k < m.seq.size();) {
        std::size_t run = k;
        while (run < m.seq.size() && m.seq[run] == m.seq[k])
            ++run;
        if (!out.empty())
            out += "*";
        out += "q" + std::to_string(m.seq[k] + 1);
        if (run - k > 1)
            out += "^" + std::to_string(run - k);
        k = run;
    }
    return out;
}

StdPoly evaluate(const Subalgebra &F, const std::vector<Term> &terms)
{
    StdPoly acc = F.algebra().zero();
    for (const auto &t : terms)
        acc += F.value(t.m).scaled(t.k);
    return acc;
}

ExpVec height(const Subalgebra &F, const SumRepresentation &rep)
{
    if (rep.empty())
        throw Error(ErrorCode::EmptyRepresentation, "height of an empty representation");
    const MonomialOrder &order = F.algebra().order();
    ExpVec best = F.lm_of(rep.front().m);
    for (const auto &t : rep) {
        ExpVec e = F.lm_of(t.m);
        if (order.less(best, e))
            best = e;
    }
    return best;
}

bool replay(const Subalgebra &F, const StdPoly &s, const ReductionTrace &trace)
{
    if (evaluate(F, trace.steps) + trace.remainder != s)
        return false;
    const MonomialOrder &order = F.algebra().order();
    for (std::size_t i = 1; i < trace.steps.size(); ++i)
        if (!order.less(F.lm_of(trace.steps[i].m), F.lm_of(trace.steps[i - 1].m)))
            return false;
    return true;
}

} // namespace spbw
