// root_system.hpp - type A_{n-1} root combinatorics for SL_n.
//
// Weights are stored in fundamental-weight coordinates (n-1 integers).
// Positive roots are e_a - e_b with 1 <= a < b <= n; since type A is simply
// laced, the coroot pairing <gamma, w> is the sum of the fundamental
// coordinates of w over the simple-root support [a, b-1] of gamma.

#pragma once

#include <vector>

#include "triflag/rational.hpp"

namespace triflag {

// Positive root e_a - e_b. Rank context is supplied by the operations.
struct Root {
    int a = 0;
    int b = 0;

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

struct Weight {
    int rank = 0;                // n
    std::vector<int> coords;     // n-1 fundamental coordinates

    Weight() = default;
    Weight(int n, std::vector<int> c);

    bool dominant() const;
    bool zero() const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

Weight zero_weight(int n);
Weight fundamental_weight(int n, int i);  // coordinate vector e_i; i in [1, n-1]
Weight operator+(const Weight& u, const Weight& v);

// All (a, b), 1 <= a < b <= n, in lexicographic order. Rejects n < 2.
std::vector<Root> positive_roots(int n);

// h_gamma(w) = <gamma, w>, the coordinate sum over [a, b-1].
int pairing(const Root& gamma, const Weight& w);

// Half the sum of the positive roots: all fundamental coordinates 1.
Weight rho(int n);

// True iff the simple root alpha_j occurs in the support of gamma,
// i.e. a <= j <= b-1. By convention j = 0 and j = n are false.
bool supports(const Root& gamma, int j, int n);

// chi_j(gamma) = 1 iff gamma is supported at j or at j-1.
int chi(int j, const Root& gamma, int n);

// chi'_j(gamma) = 1 iff gamma is supported at both j and j-1.
int chi_prime(int j, const Root& gamma, int n);

}  // namespace triflag
