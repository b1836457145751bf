#include "triflag/bfun.hpp"

#include <stdexcept>
#include <string>

namespace triflag {

namespace {

int gen_dim(int n) { return 2 * n - 1; }
int a_index(int i, int) { return i - 1; }            // a_i, 1 <= i <= n-1
int b_index(int j, int n) { return n - 1 + j - 1; }  // b_j, 1 <= j <= n

// h_gamma(lambda) over fundamental coordinates m_1..m_{n-1}.
LinearForm h_fund_form(const Root& g, int n) {
    std::vector<int> s(n - 1, 0);
    for (int i = g.a; i <= g.b - 1; ++i) s[i - 1] = 1;
    return LinearForm(std::move(s), Rational(0));
}

// h_gamma(lambda1) over generator coordinates: lambda1 coord k = a_k + b_{k+1}.
LinearForm h1_form(const Root& g, int n) {
    std::vector<int> s(gen_dim(n), 0);
    for (int k = g.a; k <= g.b - 1; ++k) {
        s[a_index(k, n)] += 1;
        s[b_index(k + 1, n)] += 1;
    }
    return LinearForm(std::move(s), Rational(0));
}

// h_gamma(lambda2) over generator coordinates: lambda2 coord k = a_{n-k} + b_{n-k}.
LinearForm h2_form(const Root& g, int n) {
    std::vector<int> s(gen_dim(n), 0);
    for (int k = g.a; k <= g.b - 1; ++k) {
        s[a_index(n - k, n)] += 1;
        s[b_index(n - k, n)] += 1;
    }
    return LinearForm(std::move(s), Rational(0));
}

// l over generator coordinates: sum of all b_j.
LinearForm l_form(int n) {
    std::vector<int> s(gen_dim(n), 0);
    for (int j = 1; j <= n; ++j) s[b_index(j, n)] = 1;
    return LinearForm(std::move(s), Rational(0));
}

// Free coordinates of a subcone.
std::vector<bool> free_mask(int n, const SubconeTag& sc) {
    std::vector<bool> free(gen_dim(n), false);
    switch (sc.kind) {
        case SubconeKind::Delta:
            for (int i = 1; i <= n - 1; ++i) free[a_index(i, n)] = true;
            break;
        case SubconeKind::DeltaLt:
            for (int i = 1; i < sc.j && i <= n - 1; ++i) free[a_index(i, n)] = true;
            free[b_index(sc.j, n)] = true;
            break;
        case SubconeKind::DeltaGe:
            for (int i = sc.j; i <= n - 1; ++i) free[a_index(i, n)] = true;
            free[b_index(sc.j, n)] = true;
            break;
        case SubconeKind::General:
            throw std::invalid_argument("no closed formula on the general cone");
    }
    return free;
}

void check_subcone_j(int j, int n) {
    if (j < 1 || j > n)
        throw std::invalid_argument("subcone index out of [1, n]: " + std::to_string(j));
}

// h_gamma(rho + sum of free a_i w_i) as a generator-coordinate form:
// slope on the free a-support of gamma, constant h_gamma(rho).
LinearForm hr_form(const Root& g, const std::vector<bool>& free, int n) {
    std::vector<int> s(gen_dim(n), 0);
    for (int i = g.a; i <= g.b - 1; ++i)
        if (free[a_index(i, n)])
            s[a_index(i, n)] = 1;
    return LinearForm(std::move(s), Rational(g.b - g.a));
}

}  // namespace

TripleWeight generator_triple(Generator g, int n) {
    return g.kind == Generator::Kind::Alpha ? generator_alpha(g.index, n)
                                            : generator_beta(g.index, n);
}

GeneratorCoords generator_unit_coords(Generator g, int n) {
    std::vector<Rational> flat(gen_dim(n), Rational(0));
    if (g.kind == Generator::Kind::Alpha) {
        if (g.index < 1 || g.index > n - 1)
            throw std::invalid_argument("alpha index out of [1, n-1]");
        flat[a_index(g.index, n)] = 1;
    } else {
        if (g.index < 1 || g.index > n)
            throw std::invalid_argument("beta index out of [1, n]");
        flat[b_index(g.index, n)] = 1;
    }
    return coords_from_flat(n, flat);
}

FactoredPoly kashiwara_b(int n, const Weight& mu) {
    if (mu.rank != n)
        throw std::invalid_argument("weight rank does not match n");
    if (!mu.dominant())
        throw std::invalid_argument("kashiwara_b requires a dominant weight");
    FactoredPoly p(n - 1);
    for (const Root& alpha : positive_roots(n)) {
        const int h = pairing(alpha, mu);
        const int hrho = alpha.b - alpha.a;
        LinearForm base = h_fund_form(alpha, n);
        for (int i = 1; i <= h; ++i)
            p.mul_factor(LinearForm(base.slope, Rational(hrho + i)));
    }
    return p;
}

FactoredPoly projective_b(long m) {
    if (m < 0)
        throw std::invalid_argument("projective_b requires m >= 0");
    FactoredPoly p(1);
    for (long i = 1; i <= m; ++i)
        p.mul_factor(LinearForm({1}, Rational(i)));
    return p;
}

FactoredPoly product_b(const TripleWeight& mu) {
    if (!mu.in_gamma_nonneg())
        throw std::invalid_argument("product_b requires mu in Gamma_{>=0}");
    const int n = mu.rank();
    FactoredPoly p(gen_dim(n));
    for (const Root& alpha : positive_roots(n)) {
        const int hrho = alpha.b - alpha.a;
        LinearForm f1 = h1_form(alpha, n);
        for (int i = 1, h = pairing(alpha, mu.lambda1); i <= h; ++i)
            p.mul_factor(LinearForm(f1.slope, Rational(hrho + i)));
        LinearForm f2 = h2_form(alpha, n);
        for (int i = 1, h = pairing(alpha, mu.lambda2); i <= h; ++i)
            p.mul_factor(LinearForm(f2.slope, Rational(hrho + i)));
    }
    LinearForm fl = l_form(n);
    for (int i = 1; i <= mu.l; ++i)
        p.mul_factor(LinearForm(fl.slope, Rational(i)));
    return p;
}

Rational h_delta(const Weight& lambda1) {
    if (!lambda1.dominant())
        throw std::invalid_argument("h_delta requires a dominant weight");
    const int n = lambda1.rank;
    const Weight r = rho(n);
    Rational acc = 1;
    for (const Root& g : positive_roots(n))
        acc *= Rational(pairing(g, lambda1) + pairing(g, r)) / Rational(pairing(g, r));
    if (!is_integer(acc) || acc < 1)
        throw std::logic_error("Weyl product is not a positive integer: " + acc.str());
    return acc;
}

Rational h_subcone(int j, const GeneratorCoords& c) {
    const int n = c.rank;
    check_subcone_j(j, n);
    SubconeTag tag = classify_subcone(c);
    const bool ok = tag.kind == SubconeKind::Delta ||
                    ((tag.kind == SubconeKind::DeltaLt || tag.kind == SubconeKind::DeltaGe) &&
                     tag.j == j);
    if (!ok)
        throw std::invalid_argument("coordinates lie outside Delta, Delta_{<j}, Delta_{>=j}");
    std::vector<int> r;
    for (const Rational& ai : c.a) r.push_back(static_cast<int>(to_long(ai)));
    const Weight lr = Weight(n, r) + rho(n);
    const Rational s = c.b[j - 1];
    Rational acc = 1;
    for (const Root& g : positive_roots(n))
        acc *= (Rational(pairing(g, lr)) + s * chi(j, g, n)) / Rational(g.b - g.a);
    return acc;
}

FactoredPoly h_symbolic(int n, const SubconeTag& sc) {
    const auto free = free_mask(n, sc);
    FactoredPoly p(gen_dim(n));
    for (const Root& g : positive_roots(n)) {
        LinearForm f = hr_form(g, free, n);
        if (sc.kind != SubconeKind::Delta && free[b_index(sc.j, n)] && chi(sc.j, g, n) == 1)
            f.slope[b_index(sc.j, n)] = 1;
        p.mul_factor(f);
        p.mul_scalar(Rational(1) / Rational(g.b - g.a));
    }
    return p;
}

FactoredPoly subcone_b(int n, Generator mu, const SubconeTag& sc) {
    if (mu.kind == Generator::Kind::Alpha && sc.kind == SubconeKind::Delta) {
        // mu = alpha_j on Delta
        const int j = mu.index;
        if (j < 1 || j > n - 1)
            throw std::invalid_argument("alpha index out of [1, n-1]");
        const auto free = free_mask(n, sc);
        FactoredPoly p(gen_dim(n));
        for (const Root& g : positive_roots(n)) {
            if (!supports(g, j, n)) continue;
            LinearForm f = hr_form(g, free, n);
            p.mul_factor(LinearForm(f.slope, f.constant + 1));
            p.mul_factor(f);
            const Rational hrho(g.b - g.a);
            p.mul_scalar(Rational(1) / ((hrho + 1) * hrho));
        }
        return p;
    }
    if (sc.kind != SubconeKind::DeltaLt && sc.kind != SubconeKind::DeltaGe)
        throw std::invalid_argument("inadmissible generator/subcone pair");
    check_subcone_j(sc.j, n);
    const int j = sc.j;
    const auto free = free_mask(n, sc);
    const int bj = b_index(j, n);

    if (mu.kind == Generator::Kind::Beta) {
        // mu = beta_j on Delta_{<j} / Delta_{>=j}
        if (mu.index != j)
            throw std::invalid_argument("beta generator must match the subcone index");
        FactoredPoly p(gen_dim(n));
        for (const Root& g : positive_roots(n)) {
            if (chi_prime(j, g, n) == 1) {
                LinearForm f = hr_form(g, free, n);
                f.slope[bj] = 1;
                p.mul_factor(f);
            }
            if (chi(j, g, n) == 1) {
                LinearForm f = hr_form(g, free, n);
                f.slope[bj] = 1;
                f.constant += 1;
                p.mul_factor(f);
            }
        }
        return p;
    }

    // mu = alpha_k on Delta_{<j} (k < j) or Delta_{>=j} (k >= j)
    const int k = mu.index;
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("alpha index out of [1, n-1]");
    const bool side_ok = (sc.kind == SubconeKind::DeltaLt && k < j) ||
                         (sc.kind == SubconeKind::DeltaGe && k >= j);
    if (!side_ok)
        throw std::invalid_argument("alpha generator lies outside the subcone");
    FactoredPoly p(gen_dim(n));
    for (const Root& g : positive_roots(n)) {
        if (!supports(g, k, n)) continue;
        LinearForm f1 = hr_form(g, free, n);
        f1.slope[bj] = chi_prime(j, g, n);
        p.mul_factor(f1);
        LinearForm f2 = hr_form(g, free, n);
        f2.slope[bj] = chi(j, g, n);
        f2.constant += 1;
        p.mul_factor(f2);
    }
    return p;
}

FactoredPoly subcone_b(Generator mu, const GeneratorCoords& c) {
    return subcone_b(c.rank, mu, classify_subcone(c));
}

GammaLift lift_args(int n) {
    if (n < 2)
        throw std::invalid_argument("rank must be at least 2");
    GammaLift a(gen_dim(n));
    for (int j = 1; j <= n; ++j) {
        std::vector<int> s(gen_dim(n), 0);
        s[b_index(j, n)] = 1;
        a.push_num(LinearForm(std::move(s), Rational(1)));
    }
    for (const Root& g : positive_roots(n)) {
        std::vector<int> sp(gen_dim(n), 0), so(gen_dim(n), 0);
        for (int i = 1; i <= n - 1; ++i)
            if (supports(g, i, n))
                sp[a_index(i, n)] = so[a_index(i, n)] = 1;
        for (int j = 1; j <= n; ++j) {
            if (chi_prime(j, g, n) == 1) sp[b_index(j, n)] = 1;
            if (chi(j, g, n) == 1) so[b_index(j, n)] = 1;
        }
        const Rational hrho(g.b - g.a);
        a.push_num(LinearForm(std::move(sp), hrho));
        a.push_num(LinearForm(std::move(so), hrho + 1));
    }
    return a;
}

LiftB lift_b(int n, const GeneratorCoords& mu) {
    if (mu.rank != n)
        throw std::invalid_argument("coordinates do not match n");
    if (!mu.omega_integral())
        throw std::invalid_argument("lift_b requires omega-integral coordinates");
    GammaLift a = lift_args(n);
    auto flat = mu.flat();
    return LiftB{gamma_ratio(a, flat), gamma_value(a, flat)};
}

std::vector<bool> frozen_mask(int n, const SubconeTag& sc) {
    auto free = free_mask(n, sc);
    std::vector<bool> frozen(free.size());
    for (size_t i = 0; i < free.size(); ++i) frozen[i] = !free[i];
    return frozen;
}

}  // namespace triflag
