#include "triflag/root_system.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace triflag {

namespace {

void check_rank(int n) {
    if (n < 2)
        throw std::invalid_argument("rank must be at least 2, got " + std::to_string(n));
}

}  // namespace

Weight::Weight(int n, std::vector<int> c) : rank(n), coords(std::move(c)) {
    check_rank(n);
    if (static_cast<int>(coords.size()) != n - 1)
        throw std::invalid_argument("weight for rank " + std::to_string(n) + " needs " +
                                    std::to_string(n - 1) + " coordinates, got " +
                                    std::to_string(coords.size()));
}

bool Weight::dominant() const {
    for (int c : coords)
        if (c < 0)
            return false;
    return true;
}

bool Weight::zero() const {
    for (int c : coords)
        if (c != 0)
            return false;
    return true;
}

Weight zero_weight(int n) {
    return Weight(n, std::vector<int>(n - 1, 0));
}

Weight fundamental_weight(int n, int i) {
    check_rank(n);
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("fundamental weight index out of range: " + std::to_string(i));
    std::vector<int> c(n - 1, 0);
    c[i - 1] = 1;
    return Weight(n, std::move(c));
}

Weight operator+(const Weight& u, const Weight& v) {
    if (u.rank != v.rank)
        throw std::invalid_argument("weight rank mismatch");
    std::vector<int> c(u.coords);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += v.coords[i];
    return Weight(u.rank, std::move(c));
}

std::vector<Root> positive_roots(int n) {
    check_rank(n);
    std::vector<Root> out;
    out.reserve(n * (n - 1) / 2);
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            out.push_back({a, b});
    return out;
}

int pairing(const Root& gamma, const Weight& w) {
    if (gamma.a < 1 || gamma.a >= gamma.b || gamma.b > w.rank)
        throw std::invalid_argument("root does not fit rank " + std::to_string(w.rank));
    int s = 0;
    for (int i = gamma.a; i <= gamma.b - 1; ++i)
        s += w.coords[i - 1];
    return s;
}

Weight rho(int n) {
    check_rank(n);
    return Weight(n, std::vector<int>(n - 1, 1));
}

bool supports(const Root& gamma, int j, int n) {
    check_rank(n);
    if (j < 0 || j > n)
        throw std::invalid_argument("support index out of [0, n]: " + std::to_string(j));
    if (j == 0 || j == n)
        return false;
    return gamma.a <= j && j <= gamma.b - 1;
}

int chi(int j, const Root& gamma, int n) {
    if (j < 1 || j > n)
        throw std::invalid_argument("chi index out of [1, n]: " + std::to_string(j));
    return (supports(gamma, j, n) || supports(gamma, j - 1, n)) ? 1 : 0;
}

int chi_prime(int j, const Root& gamma, int n) {
    if (j < 1 || j > n)
        throw std::invalid_argument("chi' index out of [1, n]: " + std::to_string(j));
    return (supports(gamma, j, n) && supports(gamma, j - 1, n)) ? 1 : 0;
}

}  // namespace triflag
