// verify.hpp - executable property suites over the b-function families:
// exact cocycle checks, the hyperplane-multiset corollaries, and pairwise
// consistency reports between the closed subcone formulas, the gamma lift,
// and the product b-function scaled by the H-ratio (in both orientations).
// Discrepancies between formulas are reported as verdicts, never patched.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triflag/bfun.hpp"
#include "triflag/lattice.hpp"
#include "triflag/symbolic.hpp"

namespace triflag {
namespace verify {

enum class Family { Kashiwara, Projective, ProductK, Lift };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct CocycleResult {
    bool ok = true;
    std::string detail;  // counterexample description on failure
};

// b_mu(lambda) . b_nu(lambda + mu) == b_{mu+nu}(lambda), exact canonical
// equality, for the family's own argument type.
CocycleResult check_cocycle(int n, const Weight& mu, const Weight& nu);             // kashiwara
CocycleResult check_cocycle(long m, long mp);                                       // projective
CocycleResult check_cocycle(const TripleWeight& mu, const TripleWeight& nu);        // product
CocycleResult check_cocycle(int n, const GeneratorCoords& mu, const GeneratorCoords& nu);  // lift

// One b-function family member, with the pairing data the K-laws need:
// the polynomial and the coordinate vector of mu in the polynomial's
// variable space.
struct FamilyMember {
    std::string label;
    FactoredPoly b;
    std::vector<Rational> mu;
};

std::vector<FamilyMember> generator_members(Family f, int n);

struct KLawViolation {
    std::string law;  // "empty" or "equal" or "linear"
    std::string detail;
};

struct KReport {
    Family family = Family::Kashiwara;
    int n = 0;
    // Per primitive slope delta (sorted): the multiset sizes and the
    // linear-growth constants observed across the members.
    struct SlopeLine {
        std::vector<int> delta;
        std::vector<std::string> member_labels;
        std::vector<Rational> pairings;      // <delta, mu> per member
        std::vector<long> sizes;             // |K_{delta,mu}| per member
        std::optional<Rational> growth_constant;  // |K| / <delta,mu> when consistent
        bool growth_consistent = true;
    };
    std::vector<SlopeLine> lines;
    std::vector<KLawViolation> violations;  // failures of the empty/equal laws

    bool clean() const { return violations.empty(); }
};

// Evaluates the multiset laws over every primitive slope occurring in the
// members' b-functions: K empty when the pairing vanishes, K equal when the
// pairings agree; the linear-growth constant is recorded per slope and
// flagged (not failed) when inconsistent.
KReport check_k_corollaries(Family f, int n, const std::vector<FamilyMember>& members);
KReport check_k_corollaries(Family f, int n);  // over generator_members

struct SuiteResult {
    long generator_pairs = 0;
    long random_pairs = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Exact cocycle over all ordered generator pairs of the family plus `trials`
// deterministic pseudo-random pairs with coordinates in [0, max_coord].
SuiteResult cocycle_suite(Family f, int n, int trials, unsigned seed = 1, int max_coord = 3);

enum class VerdictKind { ExactMatch, MatchUpToConstant, RatioNonConstant };

struct ConsistencyReport {
    std::string left;
    std::string right;
    Generator mu;
    SubconeTag subcone;
    VerdictKind verdict = VerdictKind::ExactMatch;
    Rational constant = 1;                 // for MatchUpToConstant
    std::optional<FactoredPoly> witness;   // for RatioNonConstant: left/right leftover
};

// Candidate formulas restricted to the subcone, pairwise ratios classified.
// Candidates, in order: "subcone" (closed subcone formula), "lift"
// (gamma-lift b restricted), "bk-hratio" (product b times H(.+mu)/H(.)),
// "bk-hratio-inv" (product b times H(.)/H(.+mu)).
std::vector<ConsistencyReport> cross_consistency(int n, Generator mu, const SubconeTag& sc);

}  // namespace verify
}  // namespace triflag
