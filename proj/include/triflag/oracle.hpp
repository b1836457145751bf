// oracle.hpp - independent small-rank brute force used to cross-check the
// closed formulas: Weyl dimensions, semistandard tableau counts, Pieri
// horizontal strips, diagonal-invariant multiplicities, and an exhaustive
// cone-membership scan.

#pragma once

#include <vector>

#include "triflag/lattice.hpp"
#include "triflag/rational.hpp"
#include "triflag/root_system.hpp"

namespace triflag {
namespace oracle {

// Weakly decreasing, exactly n parts (trailing zeros kept).
using Partition = std::vector<long>;

Partition partition_of(const Weight& w);
Weight weight_of(int n, const Partition& p);
// SL_n identification: strip full length-n columns (subtract the last part).
Partition reduce_columns(Partition p);

// Weyl dimension product over the partition coordinates.
Int weyl_dim(int n, const Weight& lambda1);

// Number of semistandard tableaux of shape lambda1 with entries in 1..n,
// counted by iterated horizontal-strip (Gelfand-Tsetlin) branching.
Int ssyt_count(int n, const Weight& lambda1);

// All partitions obtained from p by adding a horizontal strip of l boxes,
// at most n rows, in lexicographic order.
std::vector<Partition> pieri_strips(const Partition& p, long l, int n);

// Dimension of the diagonal invariants in V_{lambda1} x V_{lambda2} x Sym^l:
// the multiplicity of dualize(lambda2) among the Pieri strips of lambda1.
long invariant_dim(const TripleWeight& lambda);

struct ScanReport {
    int n = 0;
    int bound = 0;
    long checked = 0;
    // Triples where generator-decomposability and invariant_dim >= 1 disagree.
    std::vector<TripleWeight> member_without_invariant;
    std::vector<TripleWeight> invariant_without_member;

    bool clean() const {
        return member_without_invariant.empty() && invariant_without_member.empty();
    }
};

// Exhaustive comparison of omega_member against invariant_dim >= 1 over all
// triples in Gamma_{>=0} with every coordinate and l at most bound.
ScanReport omega_scan(int n, int bound);

}  // namespace oracle
}  // namespace triflag
