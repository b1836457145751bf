#include "triflag/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace triflag {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Flat triple coordinates (lambda1 coords, lambda2 coords, l).
std::vector<Rational> triple_vector(const TripleWeight& t) {
    const int n = t.rank();
    std::vector<Rational> v;
    v.reserve(2 * n - 1);
    for (int c : t.lambda1.coords) v.emplace_back(c);
    for (int c : t.lambda2.coords) v.emplace_back(c);
    v.emplace_back(t.l);
    return v;
}

// Columns are the triple vectors of alpha_1..alpha_{n-1}, beta_1..beta_n.
Matrix generator_matrix(int n) {
    const int dim = 2 * n - 1;
    Matrix m(dim, std::vector<Rational>(dim, Rational(0)));
    auto put_column = [&](int col, const TripleWeight& g) {
        auto v = triple_vector(g);
        for (int r = 0; r < dim; ++r) m[r][col] = v[r];
    };
    for (int i = 1; i <= n - 1; ++i) put_column(i - 1, generator_alpha(i, n));
    for (int j = 1; j <= n; ++j) put_column(n - 2 + j, generator_beta(j, n));
    return m;
}

// Gaussian elimination; returns the solution of m x = rhs, or throws if m is
// singular. Exact rational pivoting, no scaling concerns.
std::vector<Rational> solve(Matrix m, std::vector<Rational> rhs) {
    const int dim = static_cast<int>(m.size());
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0)
            throw std::logic_error("generator matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = 0; r < dim; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c < dim; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

Weight wedge_weight(int k, int n) {  // w_k with w_0 = w_n = 0
    if (k == 0 || k == n)
        return zero_weight(n);
    return fundamental_weight(n, k);
}

}  // namespace

TripleWeight::TripleWeight(Weight l1, Weight l2, int ell)
    : lambda1(std::move(l1)), lambda2(std::move(l2)), l(ell) {
    if (lambda1.rank != lambda2.rank)
        throw std::invalid_argument("triple components have mismatched ranks");
}

bool TripleWeight::in_gamma_nonneg() const {
    return lambda1.dominant() && lambda2.dominant() && l >= 0;
}

TripleWeight operator+(const TripleWeight& u, const TripleWeight& v) {
    return TripleWeight(u.lambda1 + v.lambda1, u.lambda2 + v.lambda2, u.l + v.l);
}

GeneratorCoords::GeneratorCoords(int n, std::vector<Rational> a_, std::vector<Rational> b_)
    : rank(n), a(std::move(a_)), b(std::move(b_)) {
    if (n < 2)
        throw std::invalid_argument("rank must be at least 2");
    if (static_cast<int>(a.size()) != n - 1 || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("generator coordinates need n-1 alpha and n beta entries");
}

bool GeneratorCoords::omega_integral() const {
    auto ok = [](const Rational& r) { return is_integer(r) && r >= 0; };
    return std::all_of(a.begin(), a.end(), ok) && std::all_of(b.begin(), b.end(), ok);
}

std::vector<Rational> GeneratorCoords::flat() const {
    std::vector<Rational> v(a);
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

GeneratorCoords coords_from_flat(int n, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != 2 * n - 1)
        throw std::invalid_argument("flat coordinate vector has wrong length");
    return GeneratorCoords(n, {v.begin(), v.begin() + (n - 1)}, {v.begin() + (n - 1), v.end()});
}

TripleWeight generator_alpha(int i, int n) {
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("alpha index out of [1, n-1]: " + std::to_string(i));
    return TripleWeight(wedge_weight(i, n), wedge_weight(n - i, n), 0);
}

TripleWeight generator_beta(int j, int n) {
    if (j < 1 || j > n)
        throw std::invalid_argument("beta index out of [1, n]: " + std::to_string(j));
    return TripleWeight(wedge_weight(j - 1, n), wedge_weight(n - j, n), 1);
}

Weight dualize(const Weight& w) {
    std::vector<int> c(w.coords.rbegin(), w.coords.rend());
    return Weight(w.rank, std::move(c));
}

GeneratorCoords to_generator_coords(const TripleWeight& lambda) {
    const int n = lambda.rank();
    auto x = solve(generator_matrix(n), triple_vector(lambda));
    return coords_from_flat(n, x);
}

TripleWeight coords_to_triple(const GeneratorCoords& c) {
    const int n = c.rank;
    const int dim = 2 * n - 1;
    auto m = generator_matrix(n);
    auto flat = c.flat();
    std::vector<Rational> v(dim, Rational(0));
    for (int r = 0; r < dim; ++r)
        for (int col = 0; col < dim; ++col)
            v[r] += m[r][col] * flat[col];
    std::vector<int> c1, c2;
    for (int i = 0; i < n - 1; ++i) c1.push_back(static_cast<int>(to_long(v[i])));
    for (int i = 0; i < n - 1; ++i) c2.push_back(static_cast<int>(to_long(v[n - 1 + i])));
    return TripleWeight(Weight(n, c1), Weight(n, c2), static_cast<int>(to_long(v[dim - 1])));
}

bool omega_member(const TripleWeight& lambda) {
    return to_generator_coords(lambda).omega_integral();
}

SubconeTag classify_subcone(const GeneratorCoords& c) {
    if (!c.omega_integral())
        throw std::invalid_argument("subcone classification requires omega-integral coordinates");
    const int n = c.rank;
    int nonzero_b = -1;
    for (int j = 1; j <= n; ++j) {
        if (c.b[j - 1] == 0) continue;
        if (nonzero_b >= 0) return SubconeTag::general();
        nonzero_b = j;
    }
    if (nonzero_b < 0)
        return SubconeTag::delta();
    bool all_lt = true, all_ge = true;
    for (int i = 1; i <= n - 1; ++i) {
        if (c.a[i - 1] == 0) continue;
        if (i < nonzero_b) all_ge = false; else all_lt = false;
    }
    if (all_ge) return SubconeTag::ge(nonzero_b);  // tie convention when all a vanish
    if (all_lt) return SubconeTag::lt(nonzero_b);
    return SubconeTag::general();
}

int generator_matrix_rank(int n) {
    auto m = generator_matrix(n);
    const int dim = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0; col < dim && rank < dim; ++col) {
        int piv = -1;
        for (int r = rank; r < dim; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < dim; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int c = col; c < dim; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace triflag
