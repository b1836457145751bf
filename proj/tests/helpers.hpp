// Shared test builders.

#pragma once

#include <utility>
#include <vector>

#include "triflag/symbolic.hpp"

namespace triflag {
namespace test {

inline FactoredPoly make_poly(int dim, const Rational& scalar,
                              const std::vector<std::pair<std::vector<int>, Rational>>& factors) {
    FactoredPoly p(dim);
    p.mul_scalar(scalar);
    for (const auto& [slope, c] : factors)
        p.mul_factor(LinearForm(slope, c));
    return p;
}

}  // namespace test
}  // namespace triflag
