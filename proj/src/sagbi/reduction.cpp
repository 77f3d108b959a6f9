#include <spbw/sagbi.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace spbw
{

namespace
{

// Depth-first over index sequences whose lm exponents exhaust lm(s0).
class CandidateSearch
{
public:
    CandidateSearch(const Subalgebra &F, const Leading &target, std::size_t limit, std::size_t node_cap)
        : m_F(F), m_target(target), m_limit(limit), m_node_cap(node_cap)
    {
    }

    CandidateList run()
    {
        Leading one{ExpVec(m_F.algebra().generators()), RingElem(1)};
        visit(m_target.lm, one);
        return std::move(m_out);
    }

private:
    bool done() const
    {
        return m_out.truncated || m_out.items.size() >= m_limit;
    }

    void visit(const ExpVec &rest, const Leading &acc)
    {
        if (++m_nodes > m_node_cap) {
            m_out.truncated = true;
            return;
        }
        if (rest.is_zero()) {
            if (auto k = scalar_ratio(m_target.lc, acc.lc))
                m_out.items.push_back(Term{*k, FMonomial{m_seq}});
            return;
        }
        for (std::size_t i = 0; i < m_F.size() && !done(); ++i) {
            const Leading &li = m_F.lead(i);
            if (!li.lm.divides(rest))
                continue;
            m_seq.push_back(i);
            visit(rest - li.lm, m_F.algebra().lead_product(acc, li));
            m_seq.pop_back();
        }
    }

    const Subalgebra &m_F;
    const Leading &m_target;
    std::size_t m_limit;
    std::size_t m_node_cap;
    std::size_t m_nodes = 0;
    std::vector<std::size_t> m_seq;
    CandidateList m_out;
};

CandidateList find_candidates(const Subalgebra &F, const StdPoly &s0, std::size_t limit, const Caps &caps)
{
    auto lead = F.algebra().leading(s0);
    if (!lead)
        return {};
    return CandidateSearch(F, *lead, limit, caps.max_branches).run();
}

StdPoly step(const Subalgebra &F, const StdPoly &s0, const Term &t)
{
    return s0 - F.value(t.m).scaled(t.k);
}

// Structural order for memo keys; the monomial order is only needed for output.
struct PolyLess {
    bool operator()(const StdPoly &f, const StdPoly &g) const
    {
        return f.terms() < g.terms();
    }
};

} // namespace

CandidateList candidates(const Subalgebra &F, const StdPoly &s0, const Caps &caps)
{
    if (s0.is_zero())
        throw Error(ErrorCode::InvalidArgument, "candidates of the zero element");
    return find_candidates(F, s0, static_cast<std::size_t>(-1), caps);
}

ReductionTrace snf_first(const Subalgebra &F, const StdPoly &s, const Caps &caps, bool *caps_hit)
{
    ReductionTrace trace{{}, s};
    if (caps_hit)
        *caps_hit = false;
    while (!trace.remainder.is_zero()) {
        CandidateList c = find_candidates(F, trace.remainder, 1, caps);
        if (c.items.empty()) {
            if (c.truncated && caps_hit)
                *caps_hit = true;
            break;
        }
        if (trace.steps.size() >= caps.max_steps) {
            if (caps_hit)
                *caps_hit = true;
            break;
        }
        trace.remainder = step(F, trace.remainder, c.items.front());
        trace.steps.push_back(std::move(c.items.front()));
    }
    return trace;
}

// Exhaustive exploration. Every distinct intermediate value is a node; a node
// records, for each remainder reachable from it, the first step of one branch
// that reaches it. Strict descent of lm makes the node graph acyclic.
struct NormalFormSearch::Impl {
    Impl(const Subalgebra &F, const Caps &caps) : m_F(F), m_caps(caps) {}

    SnfResult run(const StdPoly &s)
    {
        m_caps_hit = m_aborted = false;
        m_created = 0;
        std::size_t kept = m_nodes.size();
        SnfResult out = explore(s);
        if (m_caps_hit) {
            // Nodes made by a run that was cut short may carry partial reach
            // sets; earlier nodes were finished before this run started.
            m_nodes.resize(kept);
            std::erase_if(m_index, [&](const auto &entry) { return entry.second >= kept; });
        }
        return out;
    }

    SnfResult explore(const StdPoly &s)
    {
        std::size_t root = node_for(s);
        std::vector<Frame> stack;
        if (!m_nodes[root].complete)
            stack.push_back(Frame{root, 0, {}});
        while (!stack.empty()) {
            std::size_t id = stack.back().node;
            if (!m_aborted && stack.back().next < m_nodes[id].moves.size()) {
                Term t = m_nodes[id].moves[stack.back().next++];
                StdPoly next = step(m_F, m_nodes[id].value, t);
                std::size_t child = node_for(next);
                stack.back().children.push_back(child);
                if (!m_nodes[child].complete) {
                    if (stack.size() >= m_caps.max_steps) {
                        m_caps_hit = m_aborted = true;
                        continue;
                    }
                    stack.push_back(Frame{child, 0, {}});
                }
                continue;
            }
            // All children explored (or the search was cut short): merge.
            const Frame &f = stack.back();
            Node &n = m_nodes[id];
            for (std::size_t k = 0; k < f.children.size(); ++k) {
                std::size_t child = f.children[k];
                for (const auto &[rid, via] : m_nodes[child].reach)
                    n.reach.try_emplace(rid, Via{k, child});
            }
            n.complete = true;
            stack.pop_back();
        }

        SnfResult out;
        out.caps_hit = m_caps_hit;
        out.states = m_nodes.size();
        for (const auto &[rid, via] : m_nodes[root].reach) {
            ReductionTrace t{{}, m_remainders[rid]};
            std::size_t at = root;
            for (;;) {
                const auto &v = m_nodes[at].reach.at(rid);
                if (!v.child_slot)
                    break;
                t.steps.push_back(m_nodes[at].moves[*v.child_slot]);
                at = *v.child;
            }
            out.traces.push_back(std::move(t));
        }
        const Algebra &a = m_F.algebra();
        std::sort(out.traces.begin(), out.traces.end(),
                  [&](const ReductionTrace &x, const ReductionTrace &y) {
                      return a.compare_polys(x.remainder, y.remainder) < 0;
                  });
        return out;
    }

    struct Via {
        // Index into moves, unset when the node itself is the remainder.
        std::optional<std::size_t> child_slot;
        std::optional<std::size_t> child;
    };
    struct Node {
        StdPoly value;
        std::vector<Term> moves;
        std::map<std::size_t, Via> reach;
        bool complete = false;
    };
    struct Frame {
        std::size_t node;
        std::size_t next;
        std::vector<std::size_t> children;
    };

    std::size_t node_for(const StdPoly &v)
    {
        if (auto it = m_index.find(v); it != m_index.end())
            return it->second;
        std::size_t id = m_nodes.size();
        m_index.emplace(v, id);
        Node n;
        n.value = v;
        if (++m_created > m_caps.max_branches) {
            m_caps_hit = m_aborted = true;
            n.complete = true;
        } else if (!v.is_zero()) {
            CandidateList c = find_candidates(m_F, v, static_cast<std::size_t>(-1), m_caps);
            if (c.truncated)
                m_caps_hit = true;
            n.moves = std::move(c.items);
        }
        if (n.moves.empty() && !n.complete) {
            n.reach.emplace(remainder_id(v), Via{});
            n.complete = true;
        }
        m_nodes.push_back(std::move(n));
        return id;
    }

    std::size_t remainder_id(const StdPoly &v)
    {
        auto [it, fresh] = m_remainder_ids.try_emplace(v, m_remainders.size());
        if (fresh)
            m_remainders.push_back(v);
        return it->second;
    }

    const Subalgebra &m_F;
    Caps m_caps;
    std::size_t m_created = 0;
    std::vector<Node> m_nodes;
    std::map<StdPoly, std::size_t, PolyLess> m_index;
    std::map<StdPoly, std::size_t, PolyLess> m_remainder_ids;
    std::vector<StdPoly> m_remainders;
    bool m_caps_hit = false;
    bool m_aborted = false;
};

NormalFormSearch::NormalFormSearch(const Subalgebra &F, const Caps &caps) : m_impl(std::make_unique<Impl>(F, caps)) {}

NormalFormSearch::~NormalFormSearch() = default;

SnfResult NormalFormSearch::run(const StdPoly &s)
{
    return m_impl->run(s);
}

SnfResult snf_all(const Subalgebra &F, const StdPoly &s, const Caps &caps)
{
    return NormalFormSearch(F, caps).run(s);
}

SnfResult snf(const Subalgebra &F, const StdPoly &s, Strategy strategy, const Caps &caps)
{
    if (strategy == Strategy::All)
        return snf_all(F, s, caps);
    SnfResult out;
    out.traces.push_back(snf_first(F, s, caps, &out.caps_hit));
    out.states = out.traces.front().steps.size() + 1;
    return out;
}

Reduction classify(const SnfResult &r)
{
    if (r.caps_hit)
        return Reduction::Inconclusive;
    bool zero = std::any_of(r.traces.begin(), r.traces.end(),
                            [](const ReductionTrace &t) { return t.remainder.is_zero(); });
    if (!zero)
        return Reduction::None;
    return r.traces.size() == 1 ? Reduction::Strong : Reduction::WeakOnly;
}

Reduction reduces(const Subalgebra &F, const StdPoly &s, const Caps &caps)
{
    return classify(snf_all(F, s, caps));
}

} // namespace spbw
