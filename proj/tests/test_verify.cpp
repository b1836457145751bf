#include <doctest.h>

#include "helpers.hpp"
#include "triflag/io.hpp"
#include "triflag/verify.hpp"

using namespace triflag;
using test::make_poly;

TEST_CASE("cocycle spot checks") {
    CHECK(verify::check_cocycle(2, Weight(2, {1}), Weight(2, {1})).ok);
    CHECK(verify::check_cocycle(1L, 1L).ok);
    CHECK(verify::check_cocycle(2, Weight(2, {3}), Weight(2, {0})).ok);
    CHECK(verify::check_cocycle(generator_alpha(1, 3), generator_beta(2, 3)).ok);
    CHECK(verify::check_cocycle(3, generator_unit_coords(Generator::alpha(2), 3),
                                generator_unit_coords(Generator::beta(1), 3)).ok);
}

TEST_CASE("cocycle suites pass per family at n=2..4") {
    for (auto f : {verify::Family::Kashiwara, verify::Family::Projective,
                   verify::Family::ProductK, verify::Family::Lift}) {
        for (int n = 2; n <= 4; ++n) {
            auto r = verify::cocycle_suite(f, n, 50, 1, 3);
            CHECK(r.ok());
            CHECK(r.generator_pairs > 0);
            CHECK(r.random_pairs == 50);
        }
    }
}

TEST_CASE("k-multiset laws hold on the cocycle families") {
    for (auto f : {verify::Family::Kashiwara, verify::Family::Projective,
                   verify::Family::ProductK, verify::Family::Lift}) {
        for (int n = 2; n <= 4; ++n) {
            auto r = verify::check_k_corollaries(f, n);
            CHECK(r.clean());
            for (const auto& line : r.lines)
                CHECK(line.growth_consistent);
        }
    }
}

TEST_CASE("k report records the growth constants at n=2") {
    auto r = verify::check_k_corollaries(verify::Family::Lift, 2);
    REQUIRE(r.lines.size() == 4);
    for (const auto& line : r.lines) {
        REQUIRE(line.growth_constant.has_value());
        CHECK(*line.growth_constant == 1);
    }
}

TEST_CASE("the zero member has empty multisets everywhere") {
    std::vector<verify::FamilyMember> members;
    members.push_back({"zero", lift_b(2, GeneratorCoords(2, {0}, {0, 0})).b,
                       std::vector<Rational>(3, Rational(0))});
    members.push_back({"alpha1", lift_b(2, generator_unit_coords(Generator::alpha(1), 2)).b,
                       generator_unit_coords(Generator::alpha(1), 2).flat()});
    auto r = verify::check_k_corollaries(verify::Family::Lift, 2, members);
    CHECK(r.clean());
    for (const auto& line : r.lines) {
        CHECK(line.sizes[0] == 0);  // the zero member never contributes factors
        CHECK(line.pairings[0] == 0);
    }
}

TEST_CASE("a violating member is reported") {
    // (a1 + 5) pretending to belong to mu = 0 violates the empty law.
    std::vector<verify::FamilyMember> members;
    members.push_back({"bogus", make_poly(3, 1, {{{1, 0, 0}, 5}}),
                       std::vector<Rational>(3, Rational(0))});
    auto r = verify::check_k_corollaries(verify::Family::Lift, 2, members);
    REQUIRE_FALSE(r.clean());
    CHECK(r.violations[0].law == "empty");
}

TEST_CASE("cross consistency at n=2, alpha_1 on Delta") {
    auto reports = verify::cross_consistency(2, Generator::alpha(1), SubconeTag::delta());
    REQUIRE(reports.size() == 6);
    auto find = [&](const std::string& l, const std::string& r) -> const verify::ConsistencyReport& {
        for (const auto& rep : reports)
            if (rep.left == l && rep.right == r)
                return rep;
        REQUIRE(false);
        return reports[0];
    };
    const auto& cl = find("subcone", "lift");
    CHECK(cl.verdict == verify::VerdictKind::MatchUpToConstant);
    CHECK(cl.constant == Rational(1, 2));

    const auto& li = find("lift", "bk-hratio-inv");
    CHECK(li.verdict == verify::VerdictKind::ExactMatch);

    const auto& ch = find("subcone", "bk-hratio");
    CHECK(ch.verdict == verify::VerdictKind::RatioNonConstant);
    REQUIRE(ch.witness.has_value());
}

TEST_CASE("cross consistency at n=2, beta_1 on Delta_{>=1}") {
    auto reports = verify::cross_consistency(2, Generator::beta(1), SubconeTag::ge(1));
    const auto& cl = reports[0];
    REQUIRE(cl.left == "subcone");
    REQUIRE(cl.right == "lift");
    CHECK(cl.verdict == verify::VerdictKind::RatioNonConstant);
    REQUIRE(cl.witness.has_value());
    long total = 0;
    for (const auto& [f, m] : cl.witness->factors()) total += std::abs(m);
    CHECK(total == 1);  // witness is a single hyperplane
    CHECK(cl.witness->factor_multiplicity(LinearForm({0, 1, 0}, 1)) == -1);
}

TEST_CASE("subcone formula and lift agree up to constant for alpha_j on Delta, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int j = 1; j <= n - 1; ++j) {
            auto reports = verify::cross_consistency(n, Generator::alpha(j), SubconeTag::delta());
            const auto& cl = reports[0];
            REQUIRE(cl.left == "subcone");
            REQUIRE(cl.right == "lift");
            CHECK((cl.verdict == verify::VerdictKind::ExactMatch ||
                   cl.verdict == verify::VerdictKind::MatchUpToConstant));
            // on Delta the lift equals the product b scaled by H(.)/H(.+mu), exactly
            for (const auto& r : reports)
                if (r.left == "lift" && r.right == "bk-hratio-inv")
                    CHECK(r.verdict == verify::VerdictKind::ExactMatch);
        }
}

TEST_CASE("the beta cases disagree with both H-ratio orientations") {
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j <= n; ++j)
            for (auto sc : {SubconeTag::lt(j), SubconeTag::ge(j)})
                for (const auto& r : verify::cross_consistency(n, Generator::beta(j), sc))
                    if (r.left == "lift" &&
                        (r.right == "bk-hratio" || r.right == "bk-hratio-inv"))
                        CHECK(r.verdict == verify::VerdictKind::RatioNonConstant);
}

TEST_CASE("reports are deterministic") {
    auto once = io::render_cross_text(
        verify::cross_consistency(3, Generator::beta(2), SubconeTag::lt(2)), io::gen_var_names(3));
    auto twice = io::render_cross_text(
        verify::cross_consistency(3, Generator::beta(2), SubconeTag::lt(2)), io::gen_var_names(3));
    CHECK(once == twice);
    auto k_once = io::render_k_report_text(verify::check_k_corollaries(verify::Family::Lift, 3));
    auto k_twice = io::render_k_report_text(verify::check_k_corollaries(verify::Family::Lift, 3));
    CHECK(k_once == k_twice);
}
