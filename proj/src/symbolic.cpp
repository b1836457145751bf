#include "triflag/symbolic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace triflag {

namespace {

std::string form_str(const LinearForm& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.slope.size(); ++i) os << (i ? "," : "") << f.slope[i];
    os << "] + " << f.constant.str();
    return os.str();
}

void check_dim(int have, int want, const char* what) {
    if (have != want)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(have) + " vs " + std::to_string(want) + ")");
}

}  // namespace

bool LinearForm::zero_slope() const {
    for (int s : slope)
        if (s != 0)
            return false;
    return true;
}

Rational LinearForm::shift(const std::vector<Rational>& v) const {
    check_dim(static_cast<int>(v.size()), dim(), "LinearForm::shift");
    Rational acc = 0;
    for (size_t i = 0; i < slope.size(); ++i)
        if (slope[i] != 0)
            acc += Rational(slope[i]) * v[i];
    return acc;
}

Rational LinearForm::value(const std::vector<Rational>& v) const {
    return shift(v) + constant;
}

FactoredPoly FactoredPoly::constant(int dim, const Rational& c) {
    FactoredPoly p(dim);
    p.mul_scalar(c);
    return p;
}

void FactoredPoly::mul_scalar(const Rational& c) {
    if (c == 0)
        throw std::domain_error("factored polynomial cannot have scalar 0");
    scalar_ *= c;
}

void FactoredPoly::mul_factor(const LinearForm& f, long mult) {
    check_dim(f.dim(), dim_, "FactoredPoly::mul_factor");
    if (mult == 0)
        return;
    if (f.zero_slope()) {
        if (f.constant == 0)
            throw std::domain_error("zero factor would annihilate the polynomial");
        Rational c = 1;
        for (long k = 0; k < std::abs(mult); ++k) c *= f.constant;
        mul_scalar(mult > 0 ? c : Rational(1) / c);
        return;
    }
    // Canonicalize: primitive slope, first nonzero entry positive.
    long long g = 0;
    for (int s : f.slope) g = std::gcd(g, static_cast<long long>(std::abs(s)));
    int sign = 0;
    for (int s : f.slope)
        if (s != 0) { sign = s > 0 ? 1 : -1; break; }
    const long long d = g * sign;
    LinearForm canon = f;
    if (d != 1) {
        for (int& s : canon.slope) s = static_cast<int>(s / d);
        canon.constant = f.constant / Rational(d);
        Rational content(d);
        Rational c = 1;
        for (long k = 0; k < std::abs(mult); ++k) c *= content;
        mul_scalar(mult > 0 ? c : Rational(1) / c);
    }
    auto [it, inserted] = factors_.try_emplace(canon, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            factors_.erase(it);
    }
}

FactoredPoly& FactoredPoly::operator*=(const FactoredPoly& rhs) {
    check_dim(rhs.dim_, dim_, "FactoredPoly::operator*=");
    mul_scalar(rhs.scalar_);
    for (const auto& [f, m] : rhs.factors_)
        mul_factor(f, m);
    return *this;
}

FactoredPoly operator*(FactoredPoly lhs, const FactoredPoly& rhs) {
    lhs *= rhs;
    return lhs;
}

FactoredPoly FactoredPoly::ratio(const FactoredPoly& rhs) const {
    check_dim(rhs.dim_, dim_, "FactoredPoly::ratio");
    FactoredPoly out(*this);
    out.mul_scalar(Rational(1) / rhs.scalar_);
    for (const auto& [f, m] : rhs.factors_)
        out.mul_factor(f, -m);
    return out;
}

bool FactoredPoly::is_polynomial() const {
    for (const auto& [f, m] : factors_)
        if (m < 0)
            return false;
    return true;
}

long FactoredPoly::degree() const {
    long d = 0;
    for (const auto& [f, m] : factors_) d += m;
    return d;
}

FactoredPoly FactoredPoly::translate(const std::vector<Rational>& v) const {
    check_dim(static_cast<int>(v.size()), dim_, "FactoredPoly::translate");
    FactoredPoly out(dim_);
    out.scalar_ = scalar_;
    for (const auto& [f, m] : factors_) {
        LinearForm g = f;
        g.constant += f.shift(v);
        out.factors_.emplace(std::move(g), m);  // slope untouched, stays canonical
    }
    return out;
}

FactoredPoly FactoredPoly::restrict_zero(const std::vector<bool>& frozen) const {
    check_dim(static_cast<int>(frozen.size()), dim_, "FactoredPoly::restrict_zero");
    FactoredPoly out(dim_);
    out.scalar_ = scalar_;
    for (const auto& [f, m] : factors_) {
        LinearForm g = f;
        for (int i = 0; i < dim_; ++i)
            if (frozen[i])
                g.slope[i] = 0;
        out.mul_factor(g, m);  // may need recanonicalization or absorb into scalar
    }
    return out;
}

Rational FactoredPoly::evaluate(const std::vector<Rational>& v) const {
    Rational acc = scalar_;
    bool vanishes = false;
    for (const auto& [f, m] : factors_) {
        Rational val = f.value(v);
        if (val == 0) {
            if (m < 0)
                throw std::domain_error("evaluation hits a pole of a factored ratio");
            vanishes = true;
            continue;
        }
        for (long k = 0; k < std::abs(m); ++k) {
            if (m > 0) acc *= val; else acc /= val;
        }
    }
    return vanishes ? Rational(0) : acc;
}

bool FactoredPoly::equals(const FactoredPoly& rhs) const {
    return dim_ == rhs.dim_ && scalar_ == rhs.scalar_ && factors_ == rhs.factors_;
}

bool FactoredPoly::equals_up_to_scalar(const FactoredPoly& rhs) const {
    return dim_ == rhs.dim_ && factors_ == rhs.factors_;
}

long FactoredPoly::factor_multiplicity(const LinearForm& f) const {
    FactoredPoly tmp(dim_);
    tmp.mul_factor(f);  // canonicalize the query the same way
    if (tmp.factors_.size() != 1)
        return 0;
    auto it = factors_.find(tmp.factors_.begin()->first);
    return it == factors_.end() ? 0 : it->second;
}

std::map<Rational, long> FactoredPoly::k_multiset(const std::vector<int>& delta) const {
    check_dim(static_cast<int>(delta.size()), dim_, "FactoredPoly::k_multiset");
    std::map<Rational, long> out;
    for (const auto& [f, m] : factors_)
        if (f.slope == delta)
            out[f.constant] += m;
    return out;
}

std::vector<std::vector<int>> FactoredPoly::slopes() const {
    std::vector<std::vector<int>> out;
    for (const auto& [f, m] : factors_)
        if (out.empty() || out.back() != f.slope)
            out.push_back(f.slope);
    return out;
}

void GammaLift::push_num(const LinearForm& f, long mult) {
    check_dim(f.dim(), dim, "GammaLift::push_num");
    num[f] += mult;
}

void GammaLift::push_den(const LinearForm& f, long mult) {
    check_dim(f.dim(), dim, "GammaLift::push_den");
    den[f] += mult;
}

namespace {

// Gamma(F + d) / Gamma(F) as factors of p, to the power mult.
void apply_pochhammer(FactoredPoly& p, const LinearForm& f, const Rational& shift, long mult) {
    if (!is_integer(shift))
        throw std::domain_error("gamma argument " + form_str(f) +
                                " has non-integer shift " + shift.str());
    long d = to_long(shift);
    if (d >= 0) {
        for (long t = 0; t < d; ++t)
            p.mul_factor(LinearForm(f.slope, f.constant + t), mult);
    } else {
        for (long t = 1; t <= -d; ++t)
            p.mul_factor(LinearForm(f.slope, f.constant - t), -mult);
    }
}

}  // namespace

FactoredPoly gamma_ratio(const GammaLift& a, const std::vector<Rational>& mu) {
    FactoredPoly p(a.dim);
    for (const auto& [f, m] : a.num)
        apply_pochhammer(p, f, f.shift(mu), m);
    for (const auto& [f, m] : a.den)
        apply_pochhammer(p, f, f.shift(mu), -m);
    if (!p.is_polynomial()) {
        for (const auto& [f, m] : p.factors())
            if (m < 0)
                throw std::domain_error("gamma ratio is not a polynomial: factor " + form_str(f) +
                                        " has net multiplicity " + std::to_string(m));
    }
    return p;
}

Rational gamma_value(const GammaLift& a, const std::vector<Rational>& mu) {
    Rational acc = 1;
    auto one = [&](const std::map<LinearForm, long>& args, bool invert) {
        for (const auto& [f, m] : args) {
            Rational v = f.value(mu);
            if (!is_integer(v) || v < 1)
                throw std::domain_error("gamma argument " + form_str(f) +
                                        " evaluates to non-positive-integer " + v.str());
            Rational g(gamma_int(to_int(v)));
            for (long k = 0; k < m; ++k) {
                if (invert) acc /= g; else acc *= g;
            }
        }
    };
    one(a.num, false);
    one(a.den, true);
    return acc;
}

}  // namespace triflag
