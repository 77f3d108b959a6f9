#pragma once

// SAGBI toolkit over a validated algebra: F-monomials, normal forms with full
// branch exploration, critical pairs, the bounded basis test, bounded
// completion, membership and a brute-force linear-span check.

#include <spbw/algebra.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spbw
{

// Resource limits. Hitting one makes a verdict Inconclusive, never wrong.
struct Caps {
    std::size_t max_branches = 10'000;   // candidate sequences / explored reduction states
    std::size_t max_steps = 10'000;      // reduction steps along one chain
    std::size_t max_pairs = 100'000;     // critical pairs per test
    std::size_t max_span = 20'000;       // F-monomials in span_membership

    // "key=value,..." with keys max_branches, max_steps, max_pairs, max_span.
    static Caps parse(std::string_view text);
    static Caps parse(std::string_view text, Caps base);
    // Defaults overridden by SPBW_CAPS when set.
    static Caps from_env();
};

// Ordered product of elements of F, by index. Empty means 1.
struct FMonomial {
    std::vector<std::size_t> seq;

    friend bool operator==(const FMonomial &, const FMonomial &) = default;
    friend auto operator<=>(const FMonomial &, const FMonomial &) = default;
};

struct Term {
    Scalar k;
    FMonomial m;
};

struct ReductionTrace {
    std::vector<Term> steps;
    StdPoly remainder;
};

struct CandidateList {
    std::vector<Term> items;
    bool truncated = false;
};

struct SnfResult {
    // One trace per distinct remainder, remainders in canonical order.
    std::vector<ReductionTrace> traces;
    bool caps_hit = false;
    std::size_t states = 0;
};

enum class Strategy { First, All };
enum class Reduction { Strong, WeakOnly, None, Inconclusive };
std::string_view to_string(Reduction r);

struct CriticalPair {
    FMonomial left;
    FMonomial right;
    ExpVec lm;
    // lc(left) / lc(right) when it lies in K.
    std::optional<Scalar> k;
};

struct PairList {
    std::vector<CriticalPair> pairs;
    bool truncated = false;
};

enum class Verdict { VerifiedUpTo, Counterexample, Inconclusive };
std::string_view to_string(Verdict v);

struct SagbiStats {
    std::size_t pairs = 0;
    std::size_t zero_t_polynomials = 0;
    std::size_t reductions = 0;
    std::size_t no_ratio_pairs = 0;
};

struct SagbiReport {
    Verdict verdict = Verdict::Inconclusive;
    int bound = 0;
    // Counterexample data: the pair, its T-polynomial and a branch ending at a
    // nonzero remainder.
    std::optional<CriticalPair> pair;
    StdPoly t_polynomial;
    ReductionTrace witness;
    std::vector<std::string> warnings;
    std::string reason;
    SagbiStats stats;
};

struct TestOptions {
    // Keep going after the first counterexample (reports the first one found).
    bool examine_all = false;
};

// Values and leading data of F-monomials over one generating set. Copies share
// the memo tables; safe to use from several threads.
class Subalgebra
{
public:
    // Throws ConstantInF if some element is zero or constant.
    Subalgebra(Algebra a, std::vector<StdPoly> F);

    const Algebra &algebra() const noexcept
    {
        return m_alg;
    }
    const std::vector<StdPoly> &elements() const noexcept
    {
        return m_F;
    }
    std::size_t size() const noexcept
    {
        return m_F.size();
    }
    const Leading &lead(std::size_t i) const
    {
        return m_lead.at(i);
    }

    const StdPoly &value(const FMonomial &m) const;
    // Leading data without expanding the product.
    Leading lead_of(const FMonomial &m) const;
    ExpVec lm_of(const FMonomial &m) const;
    int lm_degree(const FMonomial &m) const;

    // "q1*q3^2", 1-based; "1" for the empty monomial.
    std::string render(const FMonomial &m) const;

private:
    struct Memo;

    Algebra m_alg;
    std::vector<StdPoly> m_F;
    std::vector<Leading> m_lead;
    std::shared_ptr<Memo> m_memo;
};

// Every ordered sequence whose lm exponents sum to lm(s0) and whose leading
// coefficient has a scalar ratio to lc(s0), in index-lexicographic order.
CandidateList candidates(const Subalgebra &F, const StdPoly &s0, const Caps &caps);

// Strategy First follows the first candidate at every step.
ReductionTrace snf_first(const Subalgebra &F, const StdPoly &s, const Caps &caps, bool *caps_hit = nullptr);
// Strategy All explores every choice, merging equal intermediate values.
SnfResult snf_all(const Subalgebra &F, const StdPoly &s, const Caps &caps);

// Strategy All with the table of explored values kept between calls, for
// reducing many elements over the same F. Caps apply per call; a call that
// hits one clears the table.
class NormalFormSearch
{
public:
    NormalFormSearch(const Subalgebra &F, const Caps &caps);
    ~NormalFormSearch();
    NormalFormSearch(const NormalFormSearch &) = delete;
    NormalFormSearch &operator=(const NormalFormSearch &) = delete;

    SnfResult run(const StdPoly &s);

private:
    struct Impl;
    std::unique_ptr<Impl> m_impl;
};
SnfResult snf(const Subalgebra &F, const StdPoly &s, Strategy strategy, const Caps &caps);

Reduction reduces(const Subalgebra &F, const StdPoly &s, const Caps &caps);
Reduction classify(const SnfResult &r);

// All unordered pairs of distinct F-monomials with equal lm and lm-degree <= D.
PairList critical_pairs(const Subalgebra &F, int D, const Caps &caps);
// value(left) - k * value(right); throws NoScalarRatio when k does not exist.
StdPoly t_polynomial(const Subalgebra &F, const CriticalPair &pair);

SagbiReport sagbi_test(const Subalgebra &F, int D, const Caps &caps, TestOptions options = {});

struct AdjoinedElement {
    StdPoly element;
    CriticalPair pair;
    // element == T(pair) - sum of the trace steps, over the generators at that time.
    ReductionTrace trace;
    std::size_t generators_before = 0;
    int iteration = 0;
};

struct BuildResult {
    std::vector<StdPoly> G;
    std::vector<AdjoinedElement> adjoined;
    SagbiReport report;
    int iterations = 0;
};

BuildResult sagbi_build(const Algebra &a, const std::vector<StdPoly> &F, int D, int max_iter, const Caps &caps);

enum class MembershipKind { Member, NoReductionFound, Inconclusive };
std::string_view to_string(MembershipKind k);

struct MembershipResult {
    MembershipKind kind = MembershipKind::Inconclusive;
    // Member: a trace ending at 0. Otherwise the traces of every remainder.
    std::vector<ReductionTrace> traces;
    // Non-membership is certified only for a SAGBI basis verified far enough.
    bool certified = false;
    std::string note;
};

// verified_bound: D from a VerifiedUpTo(D) report for F, if there is one.
MembershipResult membership(const Subalgebra &F, const StdPoly &s, const Caps &caps,
                            std::optional<int> verified_bound = std::nullopt);

struct SpanResult {
    bool found = false;
    std::vector<Term> combination;
    int bound = 0;
    std::size_t monomials = 0;
};

// Exact linear algebra over K on all F-monomials of lm-degree <= D.
// Throws CapsExceeded when there are more than caps.max_span of them.
SpanResult span_membership(const Subalgebra &F, const StdPoly &s, int D, const Caps &caps);

using SumRepresentation = std::vector<Term>;
// Largest lm among the entries; throws EmptyRepresentation.
ExpVec height(const Subalgebra &F, const SumRepresentation &rep);

// s == sum k_i value(m_i) + remainder, and each step's lm strictly below the previous one.
bool replay(const Subalgebra &F, const StdPoly &s, const ReductionTrace &trace);
StdPoly evaluate(const Subalgebra &F, const std::vector<Term> &terms);

} // namespace spbw
