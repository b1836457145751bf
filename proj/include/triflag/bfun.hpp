// bfun.hpp - closed-form b-functions and H-functions on the triple flag
// space, in exact factored form.
//
// Variable conventions:
//   kashiwara_b   : n-1 variables, the fundamental coordinates m_1..m_{n-1}
//   projective_b  : 1 variable l
//   everything else: 2n-1 generator coordinates (a_1..a_{n-1}, b_1..b_n)

#pragma once

#include "triflag/lattice.hpp"
#include "triflag/rational.hpp"
#include "triflag/root_system.hpp"
#include "triflag/symbolic.hpp"

namespace triflag {

// Tag naming one cone generator, alpha_i or beta_j.
struct Generator {
    enum class Kind { Alpha, Beta };
    Kind kind = Kind::Alpha;
    int index = 0;

    static Generator alpha(int i) { return {Kind::Alpha, i}; }
    static Generator beta(int j) { return {Kind::Beta, j}; }

    friend bool operator==(const Generator&, const Generator&) = default;
};

TripleWeight generator_triple(Generator g, int n);
GeneratorCoords generator_unit_coords(Generator g, int n);

// prod_{alpha in R+} prod_{i=1}^{h_alpha(mu)} (h_alpha(lambda) + h_alpha(rho) + i)
// over the fundamental coordinates of lambda. Requires mu dominant.
FactoredPoly kashiwara_b(int n, const Weight& mu);

// prod_{i=1}^{m} (l + i). Requires m >= 0.
FactoredPoly projective_b(long m);

// b-function of the product section: the two Kashiwara factors on the flag
// components and the projective factor, all rewritten over generator
// coordinates. Requires mu in Gamma_{>=0}.
FactoredPoly product_b(const TripleWeight& mu);

// Weyl dimension of V_{lambda1}: prod h(lambda1 + rho) / prod h(rho).
// Always a positive integer for dominant lambda1.
Rational h_delta(const Weight& lambda1);

// The invariant pairing on the subcone through beta_j:
// prod (h(rho + sum r_i w_i) + s_j chi_j) / prod h(rho), with r = a-coords
// and s_j = b_j of c. Requires c omega-integral and inside
// Delta / Delta_{<j} / Delta_{>=j}.
Rational h_subcone(int j, const GeneratorCoords& c);

// Symbolic H on a subcone, as a factored expression in the free coordinates
// (scalar carries the 1 / prod h(rho) denominator).
FactoredPoly h_symbolic(int n, const SubconeTag& sc);

// Closed subcone formulas for the invariant-section b-function:
//   mu = alpha_j on Delta, mu = beta_j on Delta_{<j}/Delta_{>=j},
//   mu = alpha_k on Delta_{<j} (k < j) / Delta_{>=j} (k >= j).
// The result is symbolic in the coordinates free on the subcone; constants
// are kept exactly as the closed forms state them (the Delta case carries a
// 1 / prod (h(rho)+1) h(rho) scalar). Inadmissible pairs are rejected.
FactoredPoly subcone_b(int n, Generator mu, const SubconeTag& sc);
FactoredPoly subcone_b(Generator mu, const GeneratorCoords& c);  // classifies c

// The gamma lift A: per j a factor Gamma(b_j + 1) and per positive root two
// factors Gamma(L'_gamma), Gamma(L_gamma) where
//   L'_gamma = h(rho) + sum_{supp i} a_i + sum_{chi'_j = 1} b_j
//   L_gamma  = h(rho) + sum_{supp i} a_i + sum_{chi_j = 1} b_j + 1.
GammaLift lift_args(int n);

struct LiftB {
    FactoredPoly b;     // A(lambda + mu) / A(lambda), the cocycle-normalized form
    Rational a_of_mu;   // A(mu), reported separately
};

// Requires mu omega-integral.
LiftB lift_b(int n, const GeneratorCoords& mu);

// Coordinates frozen to zero on a subcone (the complement of the free ones).
std::vector<bool> frozen_mask(int n, const SubconeTag& sc);

}  // namespace triflag
