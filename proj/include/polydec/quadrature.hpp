#pragma once

#include <array>
#include <vector>

namespace polydec {

/// Gauss-Legendre rule on [0, 1].
struct LineRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Symmetric rule on the reference triangle in barycentric coordinates; weights sum to 1.
struct TriangleRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials of degree 2n-1. Throws QuadratureOrderInvalid for n < 1.
LineRule gauss_legendre(int points);

/// Supported polynomial degrees: 1, 2, 4, 5. Throws QuadratureOrderInvalid otherwise.
TriangleRule triangle_rule(int degree);

} // namespace polydec
