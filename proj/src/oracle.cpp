#include "triflag/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace triflag {
namespace oracle {

namespace {

bool weakly_decreasing(const Partition& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1])
            return false;
    return p.empty() || p.back() >= 0;
}

// q interlaces p: p_1 >= q_1 >= p_2 >= q_2 >= ... (removal of a horizontal strip).
void interlacings(const Partition& p, size_t row, Partition& acc,
                  std::vector<Partition>& out) {
    if (row + 1 == p.size()) {
        out.push_back(acc);
        return;
    }
    const long hi = p[row];
    const long lo = p[row + 1];
    for (long v = hi; v >= lo; --v) {
        acc.push_back(v);
        interlacings(p, row + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

Partition partition_of(const Weight& w) {
    const int n = w.rank;
    Partition p(n, 0);
    for (int k = n - 2; k >= 0; --k)
        p[k] = p[k + 1] + w.coords[k];
    return p;
}

Weight weight_of(int n, const Partition& p) {
    if (static_cast<int>(p.size()) != n || !weakly_decreasing(p))
        throw std::invalid_argument("not a partition with n parts");
    std::vector<int> c(n - 1);
    for (int i = 0; i < n - 1; ++i)
        c[i] = static_cast<int>(p[i] - p[i + 1]);
    return Weight(n, std::move(c));
}

Partition reduce_columns(Partition p) {
    const long last = p.empty() ? 0 : p.back();
    for (long& x : p) x -= last;
    return p;
}

Int weyl_dim(int n, const Weight& lambda1) {
    if (lambda1.rank != n)
        throw std::invalid_argument("weight rank does not match n");
    if (!lambda1.dominant())
        throw std::invalid_argument("weyl_dim requires a dominant weight");
    Partition p = partition_of(lambda1);
    Rational acc = 1;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            acc *= Rational(p[a - 1] - p[b - 1] + b - a) / Rational(b - a);
    if (!is_integer(acc))
        throw std::logic_error("Weyl product is not integral");
    return to_int(acc);
}

Int ssyt_count(int n, const Weight& lambda1) {
    if (lambda1.rank != n)
        throw std::invalid_argument("weight rank does not match n");
    if (!lambda1.dominant())
        throw std::invalid_argument("ssyt_count requires a dominant weight");
    std::map<std::pair<int, Partition>, Int> memo;
    // Entries <= m in a shape with at most m rows; strip the boxes holding m.
    auto count = [&](auto&& self, int m, const Partition& p) -> Int {
        if (static_cast<int>(p.size()) > m && p[m] != 0)
            return 0;
        if (m == 1)
            return 1;
        auto key = std::make_pair(m, p);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Partition head(p.begin(), p.begin() + std::min<size_t>(p.size(), m));
        head.resize(m, 0);
        std::vector<Partition> qs;
        Partition acc;
        interlacings(head, 0, acc, qs);
        Int total = 0;
        for (auto& q : qs)
            total += self(self, m - 1, q);
        memo[key] = total;
        return total;
    };
    return count(count, n, partition_of(lambda1));
}

std::vector<Partition> pieri_strips(const Partition& p, long l, int n) {
    if (l < 0)
        throw std::invalid_argument("strip size must be nonnegative");
    if (static_cast<int>(p.size()) != n || !weakly_decreasing(p))
        throw std::invalid_argument("not a partition with n parts");
    std::vector<Partition> out;
    Partition q(n, 0);
    // Row r gains q[r] - p[r] boxes; the strip condition is q[r] <= p[r-1].
    auto rec = [&](auto&& self, int r, long remaining) -> void {
        if (r == n) {
            if (remaining == 0)
                out.push_back(q);
            return;
        }
        const long cap = r == 0 ? p[0] + remaining : std::min(p[r - 1], p[r] + remaining);
        for (long v = cap; v >= p[r]; --v) {
            q[r] = v;
            self(self, r + 1, remaining - (v - p[r]));
        }
        q[r] = 0;
    };
    rec(rec, 0, l);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

long invariant_dim(const TripleWeight& lambda) {
    if (!lambda.in_gamma_nonneg())
        throw std::invalid_argument("invariant_dim requires lambda in Gamma_{>=0}");
    const int n = lambda.rank();
    const Partition target = reduce_columns(partition_of(dualize(lambda.lambda2)));
    long count = 0;
    for (const Partition& q : pieri_strips(partition_of(lambda.lambda1), lambda.l, n))
        if (reduce_columns(q) == target)
            ++count;
    return count;
}

ScanReport omega_scan(int n, int bound) {
    if (n < 2 || bound < 0)
        throw std::invalid_argument("omega_scan requires n >= 2 and bound >= 0");
    ScanReport report;
    report.n = n;
    report.bound = bound;
    const int m = n - 1;
    std::vector<int> c(2 * m + 1, 0);  // lambda1 coords, lambda2 coords, l
    auto next = [&]() {
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] < bound) { ++c[i]; return true; }
            c[i] = 0;
        }
        return false;
    };
    do {
        TripleWeight t(Weight(n, {c.begin(), c.begin() + m}),
                       Weight(n, {c.begin() + m, c.begin() + 2 * m}), c[2 * m]);
        ++report.checked;
        const bool member = omega_member(t);
        const bool invariant = invariant_dim(t) >= 1;
        if (member && !invariant)
            report.member_without_invariant.push_back(t);
        if (invariant && !member)
            report.invariant_without_member.push_back(t);
    } while (next());
    return report;
}

}  // namespace oracle
}  // namespace triflag
