#pragma once

// Composition by Theta: x_i -> theta_i, extended to standard monomials as the
// ordered product theta_1^a_1 ... theta_n^a_n and K-linearly. Only defined
// when the coefficient ring is the base field.

#include <spbw/sagbi.hpp>

#include <optional>
#include <string>
#include <vector>

namespace spbw
{

class Composition
{
public:
    // Throws CoefficientRingNotScalar when R != K, DimensionMismatch when the
    // count differs from the number of generators, InvalidArgument for a
    // constant entry.
    Composition(const Algebra &a, std::vector<StdPoly> theta);

    const std::vector<StdPoly> &theta() const noexcept
    {
        return m_theta;
    }
    // Exponents of lm(theta_i).
    const std::vector<ExpVec> &hat() const noexcept
    {
        return m_hat;
    }
    // X o hat(Theta) at the exponent level: sum a_i lm(theta_i).
    ExpVec hat_exponent(const ExpVec &a) const;
    // Largest total degree among lm(theta_i).
    int hat_degree() const;

private:
    std::vector<StdPoly> m_theta;
    std::vector<ExpVec> m_hat;
};

StdPoly substitute(const Algebra &a, const StdPoly &f, const Composition &theta);
std::vector<StdPoly> substitute_all(const Algebra &a, const std::vector<StdPoly> &F, const Composition &theta);

struct RelationViolation {
    std::size_t j = 0;
    std::size_t i = 0;
    // theta_j theta_i - d theta_i theta_j - (lower part) o Theta
    StdPoly difference;
};

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<RelationViolation> violations;
};

// Theta respects every defining relation, so substitution is an algebra map.
AdmissibilityReport check_admissible(const Algebra &a, const Composition &theta);

struct CompatibilityReport {
    bool holds = true;
    int bound = 0;
    // Order: lo < hi but hat(lo) is not below hat(hi). Nonequality: lo != hi
    // with equal images.
    std::optional<std::pair<ExpVec, ExpVec>> witness;
};

// Bound-relative: all standard monomials of degree <= D.
CompatibilityReport check_order_compatible(const Algebra &a, const Composition &theta, int D);
CompatibilityReport check_nonequality_compatible(const Algebra &a, const Composition &theta, int D);

struct ForwardCheck {
    SagbiReport original;
    int composed_bound = 0;
    SagbiReport composed;
    // Set only when the premise holds (order compatible and F verified).
    bool applicable = false;
    bool passed = true;
};

// Necessity probe from an order witness u > v: H = {u - v, v} when the
// images are reversed, H = {u - 1, v} when they coincide.
struct ConverseProbe {
    ExpVec u;
    ExpVec v;
    std::vector<StdPoly> H;
    SagbiReport original;
    SagbiReport composed;
    // H verified and H o Theta refuted.
    bool demonstrated = false;
};

struct CommutationReport {
    AdmissibilityReport admissibility;
    CompatibilityReport order;
    CompatibilityReport nonequality;
    // Order compatibility implies nonequality compatibility.
    bool implication_ok = true;
    std::optional<ForwardCheck> forward;
    std::optional<ConverseProbe> converse;
    // lm(f o Theta) == hat(lm f) on sampled f.
    std::size_t hat_samples = 0;
    std::vector<StdPoly> hat_failures;
    // Critical pairs of F o Theta that are not critical pairs of F.
    std::size_t lemma_pairs = 0;
    std::vector<CriticalPair> lemma_failures;
    std::vector<std::string> notes;

    // No observation contradicts the commutation theorem.
    bool consistent() const;
};

CommutationReport check_commutation(const Algebra &a, const std::vector<StdPoly> &F, const Composition &theta, int D,
                                    const Caps &caps);

} // namespace spbw
