// lattice.hpp - the lattice of triples (lambda1, lambda2, l), the cone
// generated by the alpha_i / beta_j families, and subcone classification.
//
// A triple is flattened to 2n-1 integer coordinates
// (lambda1 coords, lambda2 coords, l); the 2n-1 generators
//   alpha_i = (w_i, w_{n-i}, 0)        1 <= i <= n-1
//   beta_j  = (w_{j-1}, w_{n-j}, 1)    1 <= j <= n      (w_0 = w_n = 0)
// form a full-rank basis of the rational span, so every triple has a unique
// rational coordinate vector over them. Cone membership demands those
// coordinates be nonnegative integers: the generators span a finite-index
// sublattice (index 2 at n = 2), so rational-but-non-integral solutions
// genuinely occur and are rejected, never rounded.

#pragma once

#include <vector>

#include "triflag/rational.hpp"
#include "triflag/root_system.hpp"

namespace triflag {

struct TripleWeight {
    Weight lambda1;
    Weight lambda2;
    int l = 0;

    TripleWeight() = default;
    TripleWeight(Weight l1, Weight l2, int ell);

    int rank() const { return lambda1.rank; }
    // Both weights dominant and l >= 0.
    bool in_gamma_nonneg() const;

    friend bool operator==(const TripleWeight&, const TripleWeight&) = default;
};

TripleWeight operator+(const TripleWeight& u, const TripleWeight& v);

struct GeneratorCoords {
    int rank = 0;
    std::vector<Rational> a;  // n-1 coefficients on alpha_i
    std::vector<Rational> b;  // n coefficients on beta_j

    GeneratorCoords() = default;
    GeneratorCoords(int n, std::vector<Rational> a_, std::vector<Rational> b_);

    bool omega_integral() const;  // all entries nonnegative integers
    // Flat (a_1..a_{n-1}, b_1..b_n) vector, the variable order used by
    // every generator-coordinate polynomial.
    std::vector<Rational> flat() const;

    friend bool operator==(const GeneratorCoords&, const GeneratorCoords&) = default;
};

GeneratorCoords coords_from_flat(int n, const std::vector<Rational>& v);

enum class SubconeKind { Delta, DeltaLt, DeltaGe, General };

struct SubconeTag {
    SubconeKind kind = SubconeKind::General;
    int j = 0;  // meaningful for DeltaLt / DeltaGe

    static SubconeTag delta() { return {SubconeKind::Delta, 0}; }
    static SubconeTag lt(int j) { return {SubconeKind::DeltaLt, j}; }
    static SubconeTag ge(int j) { return {SubconeKind::DeltaGe, j}; }
    static SubconeTag general() { return {SubconeKind::General, 0}; }

    friend bool operator==(const SubconeTag&, const SubconeTag&) = default;
};

TripleWeight generator_alpha(int i, int n);
TripleWeight generator_beta(int j, int n);

// The -w_0 involution of type A: fundamental coordinates reversed.
Weight dualize(const Weight& w);

// Unique rational solution of the (2n-1)x(2n-1) system expressing the triple
// over the generators. Throws std::logic_error if the generator matrix is
// singular (never observed for n <= 8).
GeneratorCoords to_generator_coords(const TripleWeight& lambda);

// Inverse of to_generator_coords; requires the resulting triple coordinates
// to be integers.
TripleWeight coords_to_triple(const GeneratorCoords& c);

// Membership in the monoid generated by the alpha_i and beta_j.
bool omega_member(const TripleWeight& lambda);

// Delta if all b_j = 0; DeltaLt(j)/DeltaGe(j) if exactly one b_j != 0 and
// every nonzero a_i has i < j (resp. i >= j); General otherwise. When all
// a_i vanish both readings apply; the tie resolves to DeltaGe(j).
SubconeTag classify_subcone(const GeneratorCoords& c);

// Rank of the generator matrix over the rationals (2n-1 when the generators
// are independent; asserted per rank by the tests).
int generator_matrix_rank(int n);

}  // namespace triflag
