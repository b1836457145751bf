#include "triflag/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "triflag/bfun.hpp"
#include "triflag/io.hpp"
#include "triflag/lattice.hpp"
#include "triflag/oracle.hpp"
#include "triflag/verify.hpp"

namespace triflag {
namespace cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerificationFailure = 2;

struct Options {
    int n = 2;
    std::string mu;
    std::string triple;
    std::string subcone;
    std::string family;
    std::string format = "text";
    int trials = 50;
    unsigned seed = 1;
    int max_coord = 3;
    int bound = 3;
};

bool tree_mode(const Options& o) { return o.format == "tree"; }

void emit_poly(const Options& o, const FactoredPoly& p, const std::vector<std::string>& vars,
               std::ostream& out) {
    if (tree_mode(o))
        out << io::render_tree(io::poly_tree(p, vars)) << "\n";
    else
        out << io::render_poly(p, vars) << "\n";
}

Generator parse_generator_arg(const std::string& s, int n) {
    auto g = io::parse_generator(s);
    if (!g)
        throw std::invalid_argument("bad generator name '" + s + "' (want alphaI or betaJ)");
    const int hi = g->kind == Generator::Kind::Alpha ? n - 1 : n;
    if (g->index < 1 || g->index > hi)
        throw std::invalid_argument("generator index out of range in '" + s + "'");
    return *g;
}

SubconeTag parse_subcone_arg(const std::string& s, int n) {
    auto sc = io::parse_subcone(s);
    if (!sc || sc->kind == SubconeKind::General)
        throw std::invalid_argument("bad subcone '" + s + "' (want delta, ltJ or geJ)");
    if (sc->kind != SubconeKind::Delta && (sc->j < 1 || sc->j > n))
        throw std::invalid_argument("subcone index out of range in '" + s + "'");
    return *sc;
}

int run_kashiwara(const Options& o, std::ostream& out) {
    Weight mu = io::parse_weight(o.n, o.mu);
    emit_poly(o, kashiwara_b(o.n, mu), io::fund_var_names(o.n), out);
    return kOk;
}

int run_bk(const Options& o, std::ostream& out) {
    TripleWeight mu = io::parse_triple(o.n, o.mu);
    emit_poly(o, product_b(mu), io::gen_var_names(o.n), out);
    return kOk;
}

int run_bg3(const Options& o, std::ostream& out) {
    const auto vars = io::gen_var_names(o.n);
    if (!o.subcone.empty()) {
        Generator g = parse_generator_arg(o.mu, o.n);
        SubconeTag sc = parse_subcone_arg(o.subcone, o.n);
        FactoredPoly b = subcone_b(o.n, g, sc);
        if (tree_mode(o)) {
            io::Tree t = io::Tree::node("bg3-subcone", {io::Tree::make_atom("v1")});
            t.push(io::Tree::node("mu", {io::Tree::make_atom(io::generator_name(g))}));
            t.push(io::Tree::node("subcone", {io::Tree::make_atom(io::subcone_name(sc))}));
            t.push(io::Tree::node("b", {io::poly_tree(b, vars)}));
            out << io::render_tree(t) << "\n";
        } else {
            out << io::render_poly(b, vars) << "\n";
        }
        return kOk;
    }
    std::string mu_label = o.mu;
    auto coords = [&]() -> GeneratorCoords {
        if (io::parse_generator(o.mu))
            return generator_unit_coords(parse_generator_arg(o.mu, o.n), o.n);
        GeneratorCoords c = to_generator_coords(io::parse_triple(o.n, o.mu));
        if (!c.omega_integral())
            throw std::invalid_argument("mu is not omega-integral: coords " +
                                        io::render_coords(c));
        return c;
    }();
    LiftB lift = lift_b(o.n, coords);
    if (tree_mode(o)) {
        io::Tree t = io::Tree::node("bg3", {io::Tree::make_atom("v1")});
        t.push(io::Tree::node("n", {io::Tree::make_atom(std::to_string(o.n))}));
        t.push(io::Tree::node("mu", {io::Tree::make_atom(mu_label)}));
        t.push(io::Tree::node("b", {io::poly_tree(lift.b, vars)}));
        t.push(io::Tree::node("a-of-mu", {io::Tree::make_atom(lift.a_of_mu.str())}));
        out << io::render_tree(t) << "\n";
    } else {
        out << io::render_poly(lift.b, vars) << "\n";
        out << "A(mu) = " << lift.a_of_mu.str() << "\n";
    }
    return kOk;
}

int run_h(const Options& o, std::ostream& out) {
    TripleWeight t = io::parse_triple(o.n, o.triple);
    GeneratorCoords c = to_generator_coords(t);
    if (!c.omega_integral())
        throw std::invalid_argument("triple is not in the cone: coords " + io::render_coords(c));
    SubconeTag sc = classify_subcone(c);
    Rational h;
    switch (sc.kind) {
        case SubconeKind::Delta:
            h = h_delta(t.lambda1);
            break;
        case SubconeKind::DeltaLt:
        case SubconeKind::DeltaGe:
            h = h_subcone(sc.j, c);
            break;
        case SubconeKind::General:
            throw std::invalid_argument("triple lies outside the computable subcones (" +
                                        io::render_coords(c) + ")");
    }
    if (tree_mode(o)) {
        io::Tree tr = io::Tree::node("h", {io::Tree::make_atom("v1")});
        tr.push(io::Tree::node("subcone", {io::Tree::make_atom(io::subcone_name(sc))}));
        tr.push(io::Tree::node("value", {io::Tree::make_atom(h.str())}));
        out << io::render_tree(tr) << "\n";
    } else {
        out << "subcone: " << io::subcone_name(sc) << "\n";
        out << "H = " << h.str() << "\n";
    }
    return kOk;
}

int run_omega(const Options& o, std::ostream& out) {
    TripleWeight t = io::parse_triple(o.n, o.triple);
    GeneratorCoords c = to_generator_coords(t);
    const bool member = c.omega_integral();
    if (tree_mode(o)) {
        io::Tree tr = io::Tree::node("omega", {io::Tree::make_atom("v1")});
        tr.push(io::Tree::node("member", {io::Tree::make_atom(member ? "true" : "false")}));
        io::Tree at = io::Tree::node("a");
        for (const auto& x : c.a) at.push(io::Tree::make_atom(x.str()));
        io::Tree bt = io::Tree::node("b");
        for (const auto& x : c.b) bt.push(io::Tree::make_atom(x.str()));
        io::Tree ct = io::Tree::node("coords");
        ct.push(std::move(at));
        ct.push(std::move(bt));
        tr.push(std::move(ct));
        out << io::render_tree(tr) << "\n";
    } else {
        out << "member: " << (member ? "true" : "false") << ", coords "
            << io::render_coords(c) << "\n";
    }
    return kOk;
}

int run_scan(const Options& o, std::ostream& out) {
    oracle::ScanReport r = oracle::omega_scan(o.n, o.bound);
    if (tree_mode(o))
        out << io::render_tree(io::scan_tree(r)) << "\n";
    else
        out << io::render_scan_text(r);
    return r.clean() ? kOk : kVerificationFailure;
}

int run_verify_cocycle(const Options& o, std::ostream& out) {
    auto family = verify::family_from_name(o.family);
    if (!family)
        throw std::invalid_argument("unknown family '" + o.family +
                                    "' (want kashiwara, projective, bk or bg3)");
    verify::SuiteResult r =
        verify::cocycle_suite(*family, o.n, o.trials, o.seed, o.max_coord);
    if (tree_mode(o)) {
        io::Tree t = io::Tree::node("cocycle", {io::Tree::make_atom("v1")});
        t.push(io::Tree::node("family", {io::Tree::make_atom(o.family)}));
        t.push(io::Tree::node("n", {io::Tree::make_atom(std::to_string(o.n))}));
        t.push(io::Tree::node("generator-pairs",
                              {io::Tree::make_atom(std::to_string(r.generator_pairs))}));
        t.push(io::Tree::node("random-pairs",
                              {io::Tree::make_atom(std::to_string(r.random_pairs))}));
        io::Tree ft = io::Tree::node("failures");
        for (const auto& f : r.failures) ft.push(io::Tree::make_atom(f));
        t.push(std::move(ft));
        out << io::render_tree(t) << "\n";
    } else {
        out << "cocycle family=" << o.family << " n=" << o.n << ": " << r.generator_pairs
            << " generator pairs + " << r.random_pairs << " random pairs, ";
        if (r.ok()) {
            out << "all exact\n";
        } else {
            out << r.failures.size() << " failures\n";
            for (const auto& f : r.failures) out << "  " << f << "\n";
        }
    }
    return r.ok() ? kOk : kVerificationFailure;
}

int run_verify_k(const Options& o, std::ostream& out) {
    auto family = verify::family_from_name(o.family);
    if (!family)
        throw std::invalid_argument("unknown family '" + o.family +
                                    "' (want kashiwara, projective, bk or bg3)");
    verify::KReport r = verify::check_k_corollaries(*family, o.n);
    if (tree_mode(o))
        out << io::render_tree(io::k_report_tree(r)) << "\n";
    else
        out << io::render_k_report_text(r);
    return r.clean() ? kOk : kVerificationFailure;
}

int run_verify_cross(const Options& o, std::ostream& out) {
    Generator g = parse_generator_arg(o.mu, o.n);
    SubconeTag sc = parse_subcone_arg(o.subcone, o.n);
    auto reports = verify::cross_consistency(o.n, g, sc);
    const auto vars = io::gen_var_names(o.n);
    if (tree_mode(o))
        out << io::render_tree(io::cross_tree(reports, vars)) << "\n";
    else
        out << io::render_cross_text(reports, vars);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"b-functions on the triple flag variety of SL_n"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n)
            cmd->add_option("--n", o.n, "rank of SL_n")->required()->check(CLI::Range(2, 16));
        cmd->add_option("--format", o.format, "output format: text or tree")
            ->check(CLI::IsMember({"text", "tree"}));
    };

    CLI::App* kash = app.add_subcommand("kashiwara", "flag-variety b-function for dominant mu");
    add_common(kash);
    kash->add_option("--mu", o.mu, "dominant weight, e.g. [1,0]")->required();

    CLI::App* bk = app.add_subcommand("bk", "product-section b-function over generator coords");
    add_common(bk);
    bk->add_option("--mu", o.mu, "triple \"\xce\xbb" "1=[..] \xce\xbb" "2=[..] l=k\"")->required();

    CLI::App* bg3 = app.add_subcommand("bg3", "invariant-section b-function (gamma lift)");
    add_common(bg3);
    bg3->add_option("--mu", o.mu, "generator name (alpha1, beta2, ...) or triple")->required();
    bg3->add_option("--subcone", o.subcone,
                    "closed subcone formula instead of the lift (delta, ltJ, geJ)");

    CLI::App* h = app.add_subcommand("h", "invariant pairing H on the computable subcones");
    add_common(h);
    h->add_option("--triple", o.triple, "triple \"\xce\xbb" "1=[..] \xce\xbb" "2=[..] l=k\"")
        ->required();

    CLI::App* omega = app.add_subcommand("omega", "cone membership and generator coordinates");
    add_common(omega);
    omega->add_option("--triple", o.triple, "triple \"\xce\xbb" "1=[..] \xce\xbb" "2=[..] l=k\"")
        ->required();

    CLI::App* scan = app.add_subcommand("scan", "exhaustive membership vs invariant-dim scan");
    add_common(scan);
    scan->add_option("--bound", o.bound, "coordinate bound")->required()
        ->check(CLI::Range(0, 64));

    CLI::App* verify_cmd = app.add_subcommand("verify", "property suites");
    verify_cmd->require_subcommand(1);

    CLI::App* coc = verify_cmd->add_subcommand("cocycle", "exact cocycle suite");
    add_common(coc);
    coc->add_option("--family", o.family, "kashiwara, projective, bk or bg3")->required();
    coc->add_option("--trials", o.trials, "random pairs")->check(CLI::Range(0, 100000));
    coc->add_option("--seed", o.seed, "random seed");
    coc->add_option("--max-coord", o.max_coord, "coordinate bound")->check(CLI::Range(0, 16));

    CLI::App* kc = verify_cmd->add_subcommand("kcorollaries", "hyperplane multiset laws");
    add_common(kc);
    kc->add_option("--family", o.family, "kashiwara, projective, bk or bg3")->required();

    CLI::App* cross = verify_cmd->add_subcommand("cross", "cross-formula consistency report");
    add_common(cross);
    cross->add_option("--mu", o.mu, "generator name (alpha1, beta2, ...)")->required();
    cross->add_option("--subcone", o.subcone, "delta, ltJ or geJ")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (kash->parsed()) return run_kashiwara(o, out);
        if (bk->parsed()) return run_bk(o, out);
        if (bg3->parsed()) return run_bg3(o, out);
        if (h->parsed()) return run_h(o, out);
        if (omega->parsed()) return run_omega(o, out);
        if (scan->parsed()) return run_scan(o, out);
        if (verify_cmd->parsed()) {
            if (coc->parsed()) return run_verify_cocycle(o, out);
            if (kc->parsed()) return run_verify_k(o, out);
            if (cross->parsed()) return run_verify_cross(o, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    err << "error: no subcommand\n";
    return kDomainError;
}

}  // namespace cli
}  // namespace triflag
