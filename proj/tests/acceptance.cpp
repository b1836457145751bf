// Acceptance suite: runs every acceptance criterion in exact arithmetic and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "triflag/bfun.hpp"
#include "triflag/io.hpp"
#include "triflag/lattice.hpp"
#include "triflag/oracle.hpp"
#include "triflag/verify.hpp"

using namespace triflag;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<void(std::ostringstream&)> body;  // throws or appends failures
};

void require(std::ostringstream& fail, bool ok, const std::string& what) {
    if (!ok)
        fail << "    " << what << "\n";
}

// ---- criterion 1: Kashiwara cocycle + degree ----
void criterion_kashiwara(std::ostringstream& fail) {
    for (int n = 2; n <= 4; ++n) {
        auto suite = verify::cocycle_suite(verify::Family::Kashiwara, n, 50, 1, 3);
        require(fail, suite.ok(), "cocycle failures at n=" + std::to_string(n));
        std::mt19937 rng(101 + n);
        for (int t = 0; t < 20; ++t) {
            std::vector<int> c(n - 1);
            for (auto& x : c) x = static_cast<int>(rng() % 4);
            Weight mu(n, c);
            long deg = 0;
            for (const Root& a : positive_roots(n)) deg += pairing(a, mu);
            require(fail, kashiwara_b(n, mu).degree() == deg,
                    "degree mismatch at n=" + std::to_string(n) + " mu=" + io::render_weight(mu));
        }
    }
}

// ---- criterion 2: gamma-lift cocycle, 0/1 slopes, forced divisors ----
void criterion_lift(std::ostringstream& fail) {
    for (int n = 2; n <= 4; ++n) {
        auto suite = verify::cocycle_suite(verify::Family::Lift, n, 50, 1, 3);
        require(fail, suite.ok(), "lift cocycle failures at n=" + std::to_string(n));

        const int dim = 2 * n - 1;
        std::mt19937 rng(202 + n);
        std::vector<GeneratorCoords> mus;
        for (int i = 1; i <= n - 1; ++i)
            mus.push_back(generator_unit_coords(Generator::alpha(i), n));
        for (int j = 1; j <= n; ++j)
            mus.push_back(generator_unit_coords(Generator::beta(j), n));
        for (int t = 0; t < 10; ++t) {
            std::vector<Rational> flat(dim);
            for (auto& x : flat) x = static_cast<int>(rng() % 4);
            mus.push_back(coords_from_flat(n, flat));
        }
        for (const auto& mu : mus) {
            FactoredPoly b = lift_b(n, mu).b;
            for (const auto& [f, m] : b.factors())
                for (int s : f.slope)
                    require(fail, s == 0 || s == 1,
                            "slope entry outside {0,1} at n=" + std::to_string(n));
        }
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> unit(dim, 0);
            unit[i - 1] = 1;
            FactoredPoly b = lift_b(n, generator_unit_coords(Generator::alpha(i), n)).b;
            require(fail, b.factor_multiplicity(LinearForm(unit, 1)) >= 1,
                    "(a_i + 1) does not divide the alpha lift at n=" + std::to_string(n) +
                        " i=" + std::to_string(i));
        }
        for (int j = 1; j <= n; ++j) {
            std::vector<int> unit(dim, 0);
            unit[n - 1 + j - 1] = 1;
            FactoredPoly b = lift_b(n, generator_unit_coords(Generator::beta(j), n)).b;
            require(fail, b.factor_multiplicity(LinearForm(unit, 1)) >= 1,
                    "(b_j + 1) does not divide the beta lift at n=" + std::to_string(n) +
                        " j=" + std::to_string(j));
        }
    }
}

// ---- criterion 3: hyperplane multiset corollaries ----
void criterion_k_laws(std::ostringstream& fail) {
    for (int n = 2; n <= 4; ++n) {
        for (auto f : {verify::Family::Kashiwara, verify::Family::Projective,
                       verify::Family::ProductK, verify::Family::Lift}) {
            auto members = verify::generator_members(f, n);
            // widen the sample beyond the generators
            std::mt19937 rng(303 + n);
            if (f == verify::Family::Kashiwara) {
                for (int t = 0; t < 5; ++t) {
                    std::vector<int> c(n - 1);
                    for (auto& x : c) x = static_cast<int>(rng() % 4);
                    Weight mu(n, c);
                    std::vector<Rational> v(c.begin(), c.end());
                    members.push_back({"rand" + std::to_string(t), kashiwara_b(n, mu), v});
                }
            } else if (f == verify::Family::Lift) {
                for (int t = 0; t < 5; ++t) {
                    std::vector<Rational> flat(2 * n - 1);
                    for (auto& x : flat) x = static_cast<int>(rng() % 4);
                    auto c = coords_from_flat(n, flat);
                    members.push_back({"rand" + std::to_string(t), lift_b(n, c).b, c.flat()});
                }
            }
            auto report = verify::check_k_corollaries(f, n, members);
            for (const auto& v : report.violations)
                require(fail, false,
                        verify::family_name(f) + " n=" + std::to_string(n) + " " + v.law + ": " +
                            v.detail);
        }
    }
}

// ---- criterion 4: H and dimension oracles ----
void criterion_h_oracle(std::ostringstream& fail) {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> c(n - 1, 0);
        auto next = [&]() {
            for (auto& x : c) {
                if (x < 6) { ++x; return true; }
                x = 0;
            }
            return false;
        };
        do {
            int sum = 0;
            for (int x : c) sum += x;
            if (sum > 6) continue;
            Weight w(n, c);
            Int dim = oracle::weyl_dim(n, w);
            require(fail, oracle::ssyt_count(n, w) == dim,
                    "tableau count disagrees at n=" + std::to_string(n) + " " +
                        io::render_weight(w));
            require(fail, h_delta(w) == Rational(dim),
                    "closed H disagrees at n=" + std::to_string(n) + " " + io::render_weight(w));
        } while (next());

        // H_subcone at s_j = 0 equals H_delta
        std::vector<int> a(n - 1, 0);
        auto next_a = [&]() {
            for (auto& x : a) {
                if (x < 4) { ++x; return true; }
                x = 0;
            }
            return false;
        };
        do {
            int sum = 0;
            for (int x : a) sum += x;
            if (sum > 4) continue;
            std::vector<Rational> flat(2 * n - 1, Rational(0));
            for (int i = 0; i < n - 1; ++i) flat[i] = a[i];
            GeneratorCoords coords = coords_from_flat(n, flat);
            for (int j = 1; j <= n; ++j)
                require(fail, h_subcone(j, coords) == h_delta(Weight(n, a)),
                        "H_subcone at s=0 disagrees, n=" + std::to_string(n) +
                            " j=" + std::to_string(j));
        } while (next_a());
    }
}

// ---- criterion 5: cone membership scan ----
void criterion_scan(std::ostringstream& fail) {
    auto r2 = oracle::omega_scan(2, 5);
    require(fail, r2.clean(),
            "omega_scan(2,5): " + std::to_string(r2.member_without_invariant.size() +
                                                  r2.invariant_without_member.size()) +
                " disagreements");
    require(fail, r2.checked == 216, "omega_scan(2,5) checked " + std::to_string(r2.checked));
    auto r3 = oracle::omega_scan(3, 3);
    require(fail, r3.clean(),
            "omega_scan(3,3): " + std::to_string(r3.member_without_invariant.size() +
                                                  r3.invariant_without_member.size()) +
                " disagreements");
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i <= n - 1; ++i)
            require(fail, oracle::invariant_dim(generator_alpha(i, n)) == 1,
                    "alpha generator invariant_dim != 1 at n=" + std::to_string(n));
        for (int j = 1; j <= n; ++j)
            require(fail, oracle::invariant_dim(generator_beta(j, n)) == 1,
                    "beta generator invariant_dim != 1 at n=" + std::to_string(n));
    }
}

// ---- criterion 6: frozen n=2 regressions ----
void criterion_regressions(std::ostringstream& fail) {
    auto poly = [](int dim, Rational scalar,
                   std::vector<std::pair<std::vector<int>, Rational>> fs) {
        FactoredPoly p(dim);
        p.mul_scalar(scalar);
        for (auto& [s, c] : fs) p.mul_factor(LinearForm(s, c));
        return p;
    };
    LiftB alpha = lift_b(2, generator_unit_coords(Generator::alpha(1), 2));
    require(fail, alpha.b == poly(3, 1, {{{1, 0, 0}, 1}, {{1, 1, 1}, 2}}),
            "lift(alpha_1) != (a1+1)(a1+b1+b2+2)");
    require(fail, alpha.a_of_mu == 2, "A(alpha_1) != 2");

    LiftB beta = lift_b(2, generator_unit_coords(Generator::beta(1), 2));
    require(fail, beta.b == poly(3, 1, {{{0, 1, 0}, 1}, {{1, 1, 1}, 2}}),
            "lift(beta_1) != (b1+1)(a1+b1+b2+2)");

    FactoredPoly cor = subcone_b(2, Generator::alpha(1), SubconeTag::delta());
    require(fail, cor == poly(3, Rational(1, 2), {{{1, 0, 0}, 1}, {{1, 0, 0}, 2}}),
            "subcone b(alpha_1, Delta) != (a1+1)(a1+2)/2");
}

// ---- criterion 7: consistency report classification and determinism ----
void criterion_cross(std::ostringstream& fail) {
    auto delta_reports = verify::cross_consistency(2, Generator::alpha(1), SubconeTag::delta());
    require(fail, !delta_reports.empty(), "no reports for alpha_1 on Delta");
    const auto& cl = delta_reports[0];
    require(fail, cl.left == "subcone" && cl.right == "lift", "unexpected pair order");
    require(fail, cl.verdict == verify::VerdictKind::MatchUpToConstant &&
                      cl.constant == Rational(1, 2),
            "subcone formula vs lift on Delta is not match-up-to-constant 1/2");

    auto ge_reports = verify::cross_consistency(2, Generator::beta(1), SubconeTag::ge(1));
    const auto& ge = ge_reports[0];
    require(fail, ge.verdict == verify::VerdictKind::RatioNonConstant,
            "subcone formula vs lift on Delta_{>=1} is not ratio-non-constant");
    long witness_degree = 0;
    if (ge.witness)
        for (const auto& [f, m] : ge.witness->factors()) witness_degree += std::abs(m);
    require(fail, witness_degree == 1, "witness degree != 1");

    const auto vars = io::gen_var_names(2);
    require(fail,
            io::render_cross_text(delta_reports, vars) ==
                io::render_cross_text(
                    verify::cross_consistency(2, Generator::alpha(1), SubconeTag::delta()), vars),
            "cross report is not deterministic");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "kashiwara cocycle suite (n=2..4, generators + 50 random pairs, exact) and degree",
         criterion_kashiwara},
        {2, "gamma-lift cocycle suite, 0/1 factor slopes, (a_i+1)/(b_j+1) divisors",
         criterion_lift},
        {3, "hyperplane multiset laws: K empty at zero pairing, K equal at equal pairing",
         criterion_k_laws},
        {4, "H equals Weyl product equals tableau count; H_subcone collapses at s=0",
         criterion_h_oracle},
        {5, "omega scans clean at (n=2,b=5), (n=3,b=3); generators carry one invariant",
         criterion_scan},
        {6, "frozen n=2 regressions for the lift and the Delta corollary",
         criterion_regressions},
        {7, "consistency report classification and determinism", criterion_cross},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream fail;
        try {
            c.body(fail);
        } catch (const std::exception& e) {
            fail << "    exception: " << e.what() << "\n";
        }
        const bool ok = fail.str().empty();
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "\n";
        if (!ok) {
            std::cout << fail.str();
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures;
}
