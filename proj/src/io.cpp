#include "triflag/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace triflag {
namespace io {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected bracketed list, got '" + s + "'");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty())
        return out;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty())
            throw std::invalid_argument("empty entry in list '" + s + "'");
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad integer '" + item + "' in '" + s + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string strip_prefix(const std::string& tok, std::initializer_list<const char*> prefixes) {
    for (const char* p : prefixes) {
        std::string pref(p);
        if (tok.rfind(pref, 0) == 0)
            return tok.substr(pref.size());
    }
    return {};
}

}  // namespace

std::vector<std::string> fund_var_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n - 1; ++i) v.push_back("m" + std::to_string(i));
    return v;
}

std::vector<std::string> gen_var_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n - 1; ++i) v.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) v.push_back("b" + std::to_string(j));
    return v;
}

std::vector<std::string> proj_var_names() { return {"l"}; }

std::string render_rational(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

namespace {

std::string render_factor(const LinearForm& f, const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < f.slope.size(); ++i) {
        int c = f.slope[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << vars[i];
        first = false;
    }
    if (f.constant != 0 || first) {
        if (first) {
            os << f.constant.str();
        } else {
            Rational mag = f.constant < 0 ? Rational(-f.constant) : f.constant;
            os << (f.constant < 0 ? " - " : " + ") << mag.str();
        }
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string render_poly(const FactoredPoly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.dim())
        throw std::invalid_argument("variable name list does not match dimension");
    std::ostringstream os;
    if (p.factors().empty()) {
        os << p.scalar().str();
        return os.str();
    }
    if (p.scalar() != 1)
        os << p.scalar().str() << " * ";
    for (const auto& [f, m] : p.factors()) {
        os << render_factor(f, vars);
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

std::string render_weight(const Weight& w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
    os << "]";
    return os.str();
}

Weight parse_weight(int n, const std::string& s) {
    auto c = parse_int_list(s);
    if (static_cast<int>(c.size()) != n - 1)
        throw std::invalid_argument("weight for rank " + std::to_string(n) + " needs " +
                                    std::to_string(n - 1) + " coordinates: '" + s + "'");
    return Weight(n, std::move(c));
}

std::string render_triple(const TripleWeight& t) {
    return "\xce\xbb" "1=" + render_weight(t.lambda1) + " \xce\xbb" "2=" +
           render_weight(t.lambda2) + " l=" + std::to_string(t.l);
}

TripleWeight parse_triple(int n, const std::string& s) {
    auto toks = split_ws(s);
    if (toks.size() != 3)
        throw std::invalid_argument("triple needs three tokens '\xce\xbb" "1=[..] \xce\xbb"
                                    "2=[..] l=k', got '" + s + "'");
    std::string w1 = strip_prefix(toks[0], {"\xce\xbb" "1=", "lambda1=", "l1="});
    std::string w2 = strip_prefix(toks[1], {"\xce\xbb" "2=", "lambda2=", "l2="});
    std::string ls = strip_prefix(toks[2], {"l="});
    if (w1.empty() || w2.empty() || ls.empty())
        throw std::invalid_argument("malformed triple '" + s + "'");
    size_t used = 0;
    int l = std::stoi(ls, &used);
    if (used != ls.size())
        throw std::invalid_argument("bad integer l in '" + s + "'");
    return TripleWeight(parse_weight(n, w1), parse_weight(n, w2), l);
}

std::string render_coords(const GeneratorCoords& c) {
    std::ostringstream os;
    os << "a=[";
    for (size_t i = 0; i < c.a.size(); ++i) os << (i ? "," : "") << c.a[i].str();
    os << "] b=[";
    for (size_t i = 0; i < c.b.size(); ++i) os << (i ? "," : "") << c.b[i].str();
    os << "]";
    return os.str();
}

std::string render_slope(const std::vector<int>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

std::string generator_name(Generator g) {
    return (g.kind == Generator::Kind::Alpha ? "alpha" : "beta") + std::to_string(g.index);
}

std::optional<Generator> parse_generator(const std::string& s) {
    auto tail = [](const std::string& str, size_t at) -> std::optional<int> {
        if (at >= str.size()) return std::nullopt;
        for (size_t i = at; i < str.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(str[i]))) return std::nullopt;
        return std::stoi(str.substr(at));
    };
    if (s.rfind("alpha", 0) == 0) {
        if (auto i = tail(s, 5)) return Generator::alpha(*i);
    } else if (s.rfind("beta", 0) == 0) {
        if (auto j = tail(s, 4)) return Generator::beta(*j);
    }
    return std::nullopt;
}

std::string subcone_name(const SubconeTag& sc) {
    switch (sc.kind) {
        case SubconeKind::Delta: return "delta";
        case SubconeKind::DeltaLt: return "lt" + std::to_string(sc.j);
        case SubconeKind::DeltaGe: return "ge" + std::to_string(sc.j);
        case SubconeKind::General: return "general";
    }
    return "?";
}

std::optional<SubconeTag> parse_subcone(const std::string& s) {
    if (s == "delta") return SubconeTag::delta();
    if (s == "general") return SubconeTag::general();
    auto num = [](const std::string& str, size_t at) -> std::optional<int> {
        if (at >= str.size()) return std::nullopt;
        for (size_t i = at; i < str.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(str[i]))) return std::nullopt;
        return std::stoi(str.substr(at));
    };
    if (s.rfind("lt", 0) == 0) {
        if (auto j = num(s, 2)) return SubconeTag::lt(*j);
    } else if (s.rfind("ge", 0) == 0) {
        if (auto j = num(s, 2)) return SubconeTag::ge(*j);
    }
    return std::nullopt;
}

// ---- tree format ----

Tree Tree::make_atom(std::string a) {
    Tree t;
    t.leaf = true;
    t.atom = std::move(a);
    return t;
}

Tree Tree::node(std::string head, std::vector<Tree> kids) {
    Tree t;
    t.leaf = false;
    t.kids.push_back(make_atom(std::move(head)));
    for (auto& k : kids) t.kids.push_back(std::move(k));
    return t;
}

namespace {

bool atom_needs_quoting(const std::string& a) {
    if (a.empty()) return true;
    for (char c : a)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
            c == '\\')
            return true;
    return false;
}

std::string quote_atom(const std::string& a) {
    std::string out = "\"";
    for (char c : a) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string render_tree(const Tree& t) {
    if (t.leaf)
        return atom_needs_quoting(t.atom) ? quote_atom(t.atom) : t.atom;
    std::string out = "(";
    for (size_t i = 0; i < t.kids.size(); ++i) {
        if (i) out += " ";
        out += render_tree(t.kids[i]);
    }
    out += ")";
    return out;
}

namespace {

struct TreeParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    Tree parse() {
        skip_ws();
        if (pos >= s.size())
            throw std::invalid_argument("unexpected end of tree input");
        if (s[pos] == '(') {
            ++pos;
            Tree t;
            t.leaf = false;
            while (true) {
                skip_ws();
                if (pos >= s.size())
                    throw std::invalid_argument("unbalanced '(' in tree input");
                if (s[pos] == ')') { ++pos; break; }
                t.kids.push_back(parse());
            }
            return t;
        }
        if (s[pos] == ')')
            throw std::invalid_argument("unexpected ')' in tree input");
        if (s[pos] == '"') {
            ++pos;
            std::string out;
            while (pos < s.size() && s[pos] != '"') {
                if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
                out += s[pos++];
            }
            if (pos >= s.size())
                throw std::invalid_argument("unterminated string in tree input");
            ++pos;
            return Tree::make_atom(std::move(out));
        }
        size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '(' && s[pos] != ')' && s[pos] != '"')
            ++pos;
        return Tree::make_atom(s.substr(start, pos - start));
    }
};

const std::string& head_of(const Tree& t) {
    static const std::string empty;
    if (t.leaf || t.kids.empty() || !t.kids[0].leaf)
        return empty;
    return t.kids[0].atom;
}

void expect_header(const Tree& t, const std::string& head) {
    if (head_of(t) != head || t.kids.size() < 2 || !t.kids[1].leaf || t.kids[1].atom != "v1")
        throw std::invalid_argument("expected (" + head + " v1 ...) tree");
}

const Tree& find_child(const Tree& t, const std::string& head) {
    for (const auto& k : t.kids)
        if (!k.leaf && head_of(k) == head)
            return k;
    throw std::invalid_argument("missing (" + head + " ...) in tree");
}

}  // namespace

Tree parse_tree(const std::string& s) {
    TreeParser p{s};
    Tree t = p.parse();
    p.skip_ws();
    if (p.pos != s.size())
        throw std::invalid_argument("trailing characters after tree");
    return t;
}

Tree poly_tree(const FactoredPoly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.dim())
        throw std::invalid_argument("variable name list does not match dimension");
    Tree root = Tree::node("factored-poly", {Tree::make_atom("v1")});
    Tree vt = Tree::node("vars");
    for (const auto& v : vars) vt.push(Tree::make_atom(v));
    root.push(std::move(vt));
    root.push(Tree::node("scalar", {Tree::make_atom(p.scalar().str())}));
    for (const auto& [f, m] : p.factors()) {
        Tree ft = Tree::node("factor", {Tree::make_atom(std::to_string(m))});
        Tree st = Tree::node("slope");
        for (int c : f.slope) st.push(Tree::make_atom(std::to_string(c)));
        ft.push(std::move(st));
        ft.push(Tree::node("const", {Tree::make_atom(f.constant.str())}));
        root.push(std::move(ft));
    }
    return root;
}

FactoredPoly poly_from_tree(const Tree& t) {
    expect_header(t, "factored-poly");
    const Tree& vars = find_child(t, "vars");
    const int dim = static_cast<int>(vars.kids.size()) - 1;
    if (dim < 1)
        throw std::invalid_argument("factored-poly tree has no variables");
    FactoredPoly p(dim);
    p.mul_scalar(parse_rational(find_child(t, "scalar").kids.at(1).atom));
    for (const auto& k : t.kids) {
        if (k.leaf || head_of(k) != "factor") continue;
        long mult = std::stol(k.kids.at(1).atom);
        const Tree& st = find_child(k, "slope");
        std::vector<int> slope;
        for (size_t i = 1; i < st.kids.size(); ++i) slope.push_back(std::stoi(st.kids[i].atom));
        if (static_cast<int>(slope.size()) != dim)
            throw std::invalid_argument("factor slope length does not match vars");
        Rational c = parse_rational(find_child(k, "const").kids.at(1).atom);
        p.mul_factor(LinearForm(std::move(slope), std::move(c)), mult);
    }
    return p;
}

// ---- report rendering ----

std::string verdict_name(verify::VerdictKind v) {
    switch (v) {
        case verify::VerdictKind::ExactMatch: return "exact-match";
        case verify::VerdictKind::MatchUpToConstant: return "match-up-to-constant";
        case verify::VerdictKind::RatioNonConstant: return "ratio-non-constant";
    }
    return "?";
}

std::string render_cross_text(const std::vector<verify::ConsistencyReport>& reports,
                              const std::vector<std::string>& vars) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.left << " vs " << r.right << " (mu=" << generator_name(r.mu)
           << ", subcone=" << subcone_name(r.subcone) << "): " << verdict_name(r.verdict);
        if (r.verdict == verify::VerdictKind::MatchUpToConstant)
            os << " " << r.constant.str();
        if (r.verdict == verify::VerdictKind::RatioNonConstant)
            os << " witness=" << render_poly(*r.witness, vars);
        os << "\n";
    }
    return os.str();
}

Tree cross_tree(const std::vector<verify::ConsistencyReport>& reports,
                const std::vector<std::string>& vars) {
    Tree root = Tree::node("cross-consistency", {Tree::make_atom("v1")});
    for (const auto& r : reports) {
        Tree pt = Tree::node("pair");
        pt.push(Tree::make_atom(r.left));
        pt.push(Tree::make_atom(r.right));
        pt.push(Tree::node("mu", {Tree::make_atom(generator_name(r.mu))}));
        pt.push(Tree::node("subcone", {Tree::make_atom(subcone_name(r.subcone))}));
        Tree vt = Tree::node("verdict", {Tree::make_atom(verdict_name(r.verdict))});
        if (r.verdict == verify::VerdictKind::MatchUpToConstant)
            vt.push(Tree::make_atom(r.constant.str()));
        if (r.verdict == verify::VerdictKind::RatioNonConstant)
            vt.push(poly_tree(*r.witness, vars));
        pt.push(std::move(vt));
        root.push(std::move(pt));
    }
    return root;
}

std::string render_k_report_text(const verify::KReport& r) {
    std::ostringstream os;
    os << "k-corollaries family=" << verify::family_name(r.family) << " n=" << r.n << "\n";
    for (const auto& line : r.lines) {
        os << "  delta=" << render_slope(line.delta) << ":";
        for (size_t i = 0; i < line.member_labels.size(); ++i)
            os << " " << line.member_labels[i] << "(pair=" << line.pairings[i].str()
               << ",|K|=" << line.sizes[i] << ")";
        if (line.growth_constant)
            os << " c=" << line.growth_constant->str();
        else if (!line.growth_consistent)
            os << " c=inconsistent";
        os << "\n";
    }
    if (r.violations.empty()) {
        os << "  no violations\n";
    } else {
        for (const auto& v : r.violations)
            os << "  VIOLATION[" << v.law << "] " << v.detail << "\n";
    }
    return os.str();
}

Tree k_report_tree(const verify::KReport& r) {
    Tree root = Tree::node("k-corollaries", {Tree::make_atom("v1")});
    root.push(Tree::node("family", {Tree::make_atom(verify::family_name(r.family))}));
    root.push(Tree::node("n", {Tree::make_atom(std::to_string(r.n))}));
    for (const auto& line : r.lines) {
        Tree lt = Tree::node("slope-line");
        Tree dt = Tree::node("delta");
        for (int c : line.delta) dt.push(Tree::make_atom(std::to_string(c)));
        lt.push(std::move(dt));
        for (size_t i = 0; i < line.member_labels.size(); ++i) {
            Tree mt = Tree::node("member");
            mt.push(Tree::make_atom(line.member_labels[i]));
            mt.push(Tree::node("pairing", {Tree::make_atom(line.pairings[i].str())}));
            mt.push(Tree::node("size", {Tree::make_atom(std::to_string(line.sizes[i]))}));
            lt.push(std::move(mt));
        }
        Tree gt = Tree::node("growth");
        gt.push(Tree::make_atom(line.growth_consistent ? "consistent" : "inconsistent"));
        if (line.growth_constant) gt.push(Tree::make_atom(line.growth_constant->str()));
        lt.push(std::move(gt));
        root.push(std::move(lt));
    }
    Tree vt = Tree::node("violations");
    for (const auto& v : r.violations)
        vt.push(Tree::node(v.law, {Tree::make_atom(v.detail)}));
    root.push(std::move(vt));
    return root;
}

std::string render_scan_text(const oracle::ScanReport& r) {
    std::ostringstream os;
    os << "scan n=" << r.n << " bound=" << r.bound << ": " << r.checked << " triples, "
       << (r.member_without_invariant.size() + r.invariant_without_member.size())
       << " disagreements\n";
    for (const auto& t : r.member_without_invariant)
        os << "  member without invariant: " << render_triple(t) << "\n";
    for (const auto& t : r.invariant_without_member)
        os << "  invariant without member: " << render_triple(t) << "\n";
    return os.str();
}

Tree scan_tree(const oracle::ScanReport& r) {
    Tree root = Tree::node("omega-scan", {Tree::make_atom("v1")});
    root.push(Tree::node("n", {Tree::make_atom(std::to_string(r.n))}));
    root.push(Tree::node("bound", {Tree::make_atom(std::to_string(r.bound))}));
    root.push(Tree::node("checked", {Tree::make_atom(std::to_string(r.checked))}));
    Tree mt = Tree::node("member-without-invariant");
    for (const auto& t : r.member_without_invariant)
        mt.push(Tree::make_atom(render_triple(t)));
    root.push(std::move(mt));
    Tree it = Tree::node("invariant-without-member");
    for (const auto& t : r.invariant_without_member)
        it.push(Tree::make_atom(render_triple(t)));
    root.push(std::move(it));
    return root;
}

}  // namespace io
}  // namespace triflag
