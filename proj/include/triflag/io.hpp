// io.hpp - canonical text rendering, the machine-readable tree format, and
// the argument grammars shared by the library and the CLI.
//
// Tree format (version v1): a node is "(head item...)"; items are nodes or
// atoms; atoms are symbols, integers, or rationals "p/q", whitespace
// separated. Rendering is single-line and deterministic, and every rendered
// tree parses back to the same structure.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triflag/bfun.hpp"
#include "triflag/lattice.hpp"
#include "triflag/oracle.hpp"
#include "triflag/symbolic.hpp"
#include "triflag/verify.hpp"

namespace triflag {
namespace io {

std::vector<std::string> fund_var_names(int n);  // m1..m_{n-1}
std::vector<std::string> gen_var_names(int n);   // a1..a_{n-1}, b1..b_n
std::vector<std::string> proj_var_names();       // l

std::string render_rational(const Rational& r);
Rational parse_rational(const std::string& s);

// "1/2 * (a1 + 1)(a1 + b1 + b2 + 2)^2": factors sorted, zero terms omitted,
// unit scalar omitted when factors are present.
std::string render_poly(const FactoredPoly& p, const std::vector<std::string>& vars);

std::string render_weight(const Weight& w);              // "[1,0]"
Weight parse_weight(int n, const std::string& s);

std::string render_triple(const TripleWeight& t);        // "λ1=[..] λ2=[..] l=k"
TripleWeight parse_triple(int n, const std::string& s);

std::string render_coords(const GeneratorCoords& c);     // "a=[..] b=[..]"
std::string render_slope(const std::vector<int>& s);     // "[1,1,1]"

std::string generator_name(Generator g);                 // "alpha1" / "beta2"
std::optional<Generator> parse_generator(const std::string& s);

std::string subcone_name(const SubconeTag& sc);          // "delta" / "lt2" / "ge1"
std::optional<SubconeTag> parse_subcone(const std::string& s);

// ---- tree format ----

struct Tree {
    bool leaf = true;
    std::string atom;
    std::vector<Tree> kids;

    static Tree make_atom(std::string a);
    static Tree node(std::string head, std::vector<Tree> kids = {});
    void push(Tree t) { kids.push_back(std::move(t)); }

    friend bool operator==(const Tree&, const Tree&) = default;
};

std::string render_tree(const Tree& t);
Tree parse_tree(const std::string& s);

Tree poly_tree(const FactoredPoly& p, const std::vector<std::string>& vars);
// Inverse of poly_tree; validates the v1 header.
FactoredPoly poly_from_tree(const Tree& t);

// ---- report rendering ----

std::string verdict_name(verify::VerdictKind v);

std::string render_cross_text(const std::vector<verify::ConsistencyReport>& reports,
                              const std::vector<std::string>& vars);
Tree cross_tree(const std::vector<verify::ConsistencyReport>& reports,
                const std::vector<std::string>& vars);

std::string render_k_report_text(const verify::KReport& r);
Tree k_report_tree(const verify::KReport& r);

std::string render_scan_text(const oracle::ScanReport& r);
Tree scan_tree(const oracle::ScanReport& r);

}  // namespace io
}  // namespace triflag
