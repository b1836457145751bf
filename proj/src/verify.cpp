#include "triflag/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "triflag/io.hpp"

namespace triflag {
namespace verify {

namespace {

std::vector<Rational> rational_coords(const Weight& w) {
    std::vector<Rational> v;
    for (int c : w.coords) v.emplace_back(c);
    return v;
}

CocycleResult compare(const FactoredPoly& lhs, const FactoredPoly& rhs, std::string args) {
    if (lhs.equals(rhs))
        return {};
    return {false, "cocycle fails for " + std::move(args)};
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Kashiwara: return "kashiwara";
        case Family::Projective: return "projective";
        case Family::ProductK: return "bk";
        case Family::Lift: return "bg3";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "kashiwara") return Family::Kashiwara;
    if (name == "projective") return Family::Projective;
    if (name == "bk") return Family::ProductK;
    if (name == "bg3") return Family::Lift;
    return std::nullopt;
}

CocycleResult check_cocycle(int n, const Weight& mu, const Weight& nu) {
    FactoredPoly lhs = kashiwara_b(n, mu) * kashiwara_b(n, nu).translate(rational_coords(mu));
    FactoredPoly rhs = kashiwara_b(n, mu + nu);
    return compare(lhs, rhs, "kashiwara mu=" + io::render_weight(mu) + " nu=" + io::render_weight(nu));
}

CocycleResult check_cocycle(long m, long mp) {
    FactoredPoly lhs = projective_b(m) * projective_b(mp).translate({Rational(m)});
    return compare(lhs, projective_b(m + mp),
                   "projective m=" + std::to_string(m) + " m'=" + std::to_string(mp));
}

CocycleResult check_cocycle(const TripleWeight& mu, const TripleWeight& nu) {
    FactoredPoly lhs =
        product_b(mu) * product_b(nu).translate(to_generator_coords(mu).flat());
    return compare(lhs, product_b(mu + nu),
                   "bk mu=" + io::render_triple(mu) + " nu=" + io::render_triple(nu));
}

CocycleResult check_cocycle(int n, const GeneratorCoords& mu, const GeneratorCoords& nu) {
    auto flat_mu = mu.flat();
    auto flat_nu = nu.flat();
    std::vector<Rational> flat_sum(flat_mu);
    for (size_t i = 0; i < flat_sum.size(); ++i) flat_sum[i] += flat_nu[i];
    FactoredPoly lhs = lift_b(n, mu).b * lift_b(n, nu).b.translate(flat_mu);
    FactoredPoly rhs = lift_b(n, coords_from_flat(n, flat_sum)).b;
    return compare(lhs, rhs,
                   "bg3 mu=" + io::render_coords(mu) + " nu=" + io::render_coords(nu));
}

std::vector<FamilyMember> generator_members(Family f, int n) {
    std::vector<FamilyMember> out;
    switch (f) {
        case Family::Kashiwara:
            for (int i = 1; i <= n - 1; ++i) {
                Weight w = fundamental_weight(n, i);
                out.push_back({"omega" + std::to_string(i), kashiwara_b(n, w),
                               rational_coords(w)});
            }
            break;
        case Family::Projective:
            for (long m = 1; m <= 3; ++m)
                out.push_back({"m" + std::to_string(m), projective_b(m), {Rational(m)}});
            break;
        case Family::ProductK:
            for (int i = 1; i <= n - 1; ++i) {
                TripleWeight t = generator_alpha(i, n);
                out.push_back({"alpha" + std::to_string(i), product_b(t),
                               to_generator_coords(t).flat()});
            }
            for (int j = 1; j <= n; ++j) {
                TripleWeight t = generator_beta(j, n);
                out.push_back({"beta" + std::to_string(j), product_b(t),
                               to_generator_coords(t).flat()});
            }
            break;
        case Family::Lift:
            for (int i = 1; i <= n - 1; ++i) {
                auto c = generator_unit_coords(Generator::alpha(i), n);
                out.push_back({"alpha" + std::to_string(i), lift_b(n, c).b, c.flat()});
            }
            for (int j = 1; j <= n; ++j) {
                auto c = generator_unit_coords(Generator::beta(j), n);
                out.push_back({"beta" + std::to_string(j), lift_b(n, c).b, c.flat()});
            }
            break;
    }
    return out;
}

KReport check_k_corollaries(Family f, int n, const std::vector<FamilyMember>& members) {
    KReport report;
    report.family = f;
    report.n = n;
    std::set<std::vector<int>> deltas;
    for (const auto& m : members)
        for (auto& s : m.b.slopes())
            deltas.insert(std::move(s));
    for (const auto& delta : deltas) {
        KReport::SlopeLine line;
        line.delta = delta;
        std::vector<std::map<Rational, long>> ks;
        for (const auto& m : members) {
            LinearForm probe(delta, Rational(0));
            Rational pair = probe.shift(m.mu);
            auto k = m.b.k_multiset(delta);
            long size = 0;
            for (auto& [c, mult] : k) size += mult;
            line.member_labels.push_back(m.label);
            line.pairings.push_back(pair);
            line.sizes.push_back(size);
            ks.push_back(std::move(k));
        }
        // law: <delta, mu> = 0 implies K empty
        for (size_t i = 0; i < members.size(); ++i) {
            if (line.pairings[i] == 0 && line.sizes[i] != 0)
                report.violations.push_back(
                    {"empty", "delta=" + io::render_slope(delta) + " mu=" + members[i].label +
                                  " has pairing 0 but |K|=" + std::to_string(line.sizes[i])});
        }
        // law: equal pairings imply equal multisets
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (line.pairings[i] != line.pairings[j]) continue;
                if (ks[i] != ks[j])
                    report.violations.push_back(
                        {"equal", "delta=" + io::render_slope(delta) + " members " +
                                      members[i].label + "," + members[j].label +
                                      " have equal pairing but different K"});
            }
        // linear growth: |K| = c <delta, mu>, recorded rather than asserted
        std::optional<Rational> c;
        bool consistent = true;
        for (size_t i = 0; i < members.size(); ++i) {
            if (line.pairings[i] == 0) {
                if (line.sizes[i] != 0) consistent = false;
                continue;
            }
            Rational ci = Rational(line.sizes[i]) / line.pairings[i];
            if (!c) c = ci;
            else if (*c != ci) consistent = false;
        }
        line.growth_constant = consistent ? c : std::nullopt;
        line.growth_consistent = consistent;
        report.lines.push_back(std::move(line));
    }
    return report;
}

KReport check_k_corollaries(Family f, int n) {
    return check_k_corollaries(f, n, generator_members(f, n));
}

SuiteResult cocycle_suite(Family f, int n, int trials, unsigned seed, int max_coord) {
    SuiteResult result;
    std::mt19937 rng(seed);
    // mt19937 output is pinned by the standard; modulo keeps the sampling
    // reproducible across standard libraries.
    auto draw = [&](int hi) { return static_cast<int>(rng() % (hi + 1)); };
    auto record = [&](const CocycleResult& r) {
        if (!r.ok)
            result.failures.push_back(r.detail);
    };

    switch (f) {
        case Family::Kashiwara: {
            std::vector<Weight> gens;
            for (int i = 1; i <= n - 1; ++i) gens.push_back(fundamental_weight(n, i));
            for (const auto& mu : gens)
                for (const auto& nu : gens) {
                    record(check_cocycle(n, mu, nu));
                    ++result.generator_pairs;
                }
            auto random_weight = [&]() {
                std::vector<int> c(n - 1);
                for (int& x : c) x = draw(max_coord);
                return Weight(n, std::move(c));
            };
            for (int t = 0; t < trials; ++t) {
                record(check_cocycle(n, random_weight(), random_weight()));
                ++result.random_pairs;
            }
            break;
        }
        case Family::Projective: {
            for (long m = 0; m <= 3; ++m)
                for (long mp = 0; mp <= 3; ++mp) {
                    record(check_cocycle(m, mp));
                    ++result.generator_pairs;
                }
            for (int t = 0; t < trials; ++t) {
                record(check_cocycle(static_cast<long>(draw(3 * max_coord)),
                                     static_cast<long>(draw(3 * max_coord))));
                ++result.random_pairs;
            }
            break;
        }
        case Family::ProductK: {
            std::vector<TripleWeight> gens;
            for (int i = 1; i <= n - 1; ++i) gens.push_back(generator_alpha(i, n));
            for (int j = 1; j <= n; ++j) gens.push_back(generator_beta(j, n));
            for (const auto& mu : gens)
                for (const auto& nu : gens) {
                    record(check_cocycle(mu, nu));
                    ++result.generator_pairs;
                }
            auto random_triple = [&]() {
                std::vector<int> c1(n - 1), c2(n - 1);
                for (int& x : c1) x = draw(max_coord);
                for (int& x : c2) x = draw(max_coord);
                return TripleWeight(Weight(n, std::move(c1)), Weight(n, std::move(c2)),
                                    draw(max_coord));
            };
            for (int t = 0; t < trials; ++t) {
                record(check_cocycle(random_triple(), random_triple()));
                ++result.random_pairs;
            }
            break;
        }
        case Family::Lift: {
            std::vector<GeneratorCoords> gens;
            for (int i = 1; i <= n - 1; ++i)
                gens.push_back(generator_unit_coords(Generator::alpha(i), n));
            for (int j = 1; j <= n; ++j)
                gens.push_back(generator_unit_coords(Generator::beta(j), n));
            for (const auto& mu : gens)
                for (const auto& nu : gens) {
                    record(check_cocycle(n, mu, nu));
                    ++result.generator_pairs;
                }
            auto random_coords = [&]() {
                std::vector<Rational> flat(2 * n - 1);
                for (auto& x : flat) x = draw(max_coord);
                return coords_from_flat(n, flat);
            };
            for (int t = 0; t < trials; ++t) {
                record(check_cocycle(n, random_coords(), random_coords()));
                ++result.random_pairs;
            }
            break;
        }
    }
    return result;
}

std::vector<ConsistencyReport> cross_consistency(int n, Generator mu, const SubconeTag& sc) {
    const auto frozen = frozen_mask(n, sc);
    const auto mu_flat = generator_unit_coords(mu, n).flat();

    struct Candidate {
        std::string name;
        FactoredPoly value;
    };
    std::vector<Candidate> cand;
    cand.push_back({"subcone", subcone_b(n, mu, sc)});
    cand.push_back({"lift", lift_b(n, generator_unit_coords(mu, n)).b.restrict_zero(frozen)});
    FactoredPoly bk = product_b(generator_triple(mu, n)).restrict_zero(frozen);
    FactoredPoly h = h_symbolic(n, sc);
    FactoredPoly h_shift = h.translate(mu_flat);
    cand.push_back({"bk-hratio", bk * h_shift.ratio(h)});
    cand.push_back({"bk-hratio-inv", bk * h.ratio(h_shift)});

    std::vector<ConsistencyReport> out;
    for (size_t i = 0; i < cand.size(); ++i) {
        for (size_t j = i + 1; j < cand.size(); ++j) {
            ConsistencyReport r;
            r.left = cand[i].name;
            r.right = cand[j].name;
            r.mu = mu;
            r.subcone = sc;
            FactoredPoly ratio = cand[i].value.ratio(cand[j].value);
            if (ratio.is_constant()) {
                if (ratio.scalar() == 1) {
                    r.verdict = VerdictKind::ExactMatch;
                } else {
                    r.verdict = VerdictKind::MatchUpToConstant;
                    r.constant = ratio.scalar();
                }
            } else {
                r.verdict = VerdictKind::RatioNonConstant;
                r.witness = ratio;
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace verify
}  // namespace triflag
