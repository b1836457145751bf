// symbolic.hpp - exact arithmetic on products of affine-linear forms.
//
// A FactoredPoly is a rational scalar times a multiset of affine-linear
// factors, kept in canonical form: every factor slope is primitive with its
// first nonzero entry positive (integer content moves into the scalar) and
// zero-slope factors are absorbed into the scalar. Multiplicities may be
// negative, which represents a factored *ratio*; is_polynomial() tells the
// two apart. Equality of canonical forms is the equality contract for every
// b-function in the library, so no floating point appears anywhere.

#pragma once

#include <map>
#include <vector>

#include "triflag/rational.hpp"

namespace triflag {

// slope . x + constant, slope integral, constant rational.
struct LinearForm {
    std::vector<int> slope;
    Rational constant;

    LinearForm() = default;
    LinearForm(std::vector<int> s, Rational c) : slope(std::move(s)), constant(std::move(c)) {}

    int dim() const { return static_cast<int>(slope.size()); }
    bool zero_slope() const;
    // slope . v (the shift of the form under translation by v).
    Rational shift(const std::vector<Rational>& v) const;
    Rational value(const std::vector<Rational>& v) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& x, const LinearForm& y) {
        if (x.slope != y.slope)
            return x.slope < y.slope;
        return x.constant < y.constant;
    }
};

class FactoredPoly {
  public:
    explicit FactoredPoly(int dim) : dim_(dim), scalar_(1) {}
    static FactoredPoly constant(int dim, const Rational& c);

    int dim() const { return dim_; }
    const Rational& scalar() const { return scalar_; }
    const std::map<LinearForm, long>& factors() const { return factors_; }

    // Multiplies in scalar^1 respectively factor^mult, canonicalizing.
    void mul_scalar(const Rational& c);
    void mul_factor(const LinearForm& f, long mult = 1);

    FactoredPoly& operator*=(const FactoredPoly& rhs);
    friend FactoredPoly operator*(FactoredPoly lhs, const FactoredPoly& rhs);
    // this / rhs as a factored expression (may have negative multiplicities).
    FactoredPoly ratio(const FactoredPoly& rhs) const;

    bool is_polynomial() const;  // all multiplicities >= 0
    bool is_constant() const { return factors_.empty(); }
    long degree() const;         // signed: sum of multiplicities

    // p(x + v): constants pick up slope . v, slopes unchanged.
    FactoredPoly translate(const std::vector<Rational>& v) const;
    // Substitute 0 for the coordinates with frozen[i] = true.
    FactoredPoly restrict_zero(const std::vector<bool>& frozen) const;

    Rational evaluate(const std::vector<Rational>& v) const;

    bool equals(const FactoredPoly& rhs) const;
    bool equals_up_to_scalar(const FactoredPoly& rhs) const;

    // Multiplicity of the exact canonical factor f (0 if absent).
    long factor_multiplicity(const LinearForm& f) const;
    // Constants of the factors whose primitive slope equals delta,
    // with multiplicity.
    std::map<Rational, long> k_multiset(const std::vector<int>& delta) const;
    // All distinct factor slopes.
    std::vector<std::vector<int>> slopes() const;

    friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) { return a.equals(b); }

  private:
    int dim_;
    Rational scalar_;
    std::map<LinearForm, long> factors_;
};

// Formal product of gamma factors: prod Gamma(F) / prod Gamma(G).
struct GammaLift {
    int dim = 0;
    std::map<LinearForm, long> num;
    std::map<LinearForm, long> den;

    explicit GammaLift(int d) : dim(d) {}
    void push_num(const LinearForm& f, long mult = 1);
    void push_den(const LinearForm& f, long mult = 1);
};

// A(x + mu) / A(x) expanded into Pochhammer factors. Every argument form
// must have an integral shift under mu; a net negative factor multiplicity
// (the ratio is not a polynomial) is an error naming the offending form.
FactoredPoly gamma_ratio(const GammaLift& a, const std::vector<Rational>& mu);

// A(mu) itself: prod Gamma(F(mu)) / prod Gamma(G(mu)) over positive-integer
// argument values.
Rational gamma_value(const GammaLift& a, const std::vector<Rational>& mu);

}  // namespace triflag
