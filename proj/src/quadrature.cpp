#include <polydec/error.hpp>
#include <polydec/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace polydec {

LineRule gauss_legendre(int points)
{
    if (points < 1 || points > 256) {
        throw Error(ErrorKind::QuadratureOrderInvalid, "Gauss-Legendre point count " + std::to_string(points));
    }
    const int n = points;
    // P_n(x) and P_n'(x) by the three-term recurrence
    const auto legendre = [n](double x) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };

    LineRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

TriangleRule triangle_rule(int degree)
{
    TriangleRule rule;
    const auto add_orbit3 = [&](double a, double b, double w) {
        rule.points.push_back({a, a, b});
        rule.points.push_back({a, b, a});
        rule.points.push_back({b, a, a});
        rule.weights.insert(rule.weights.end(), 3, w);
    };
    switch (degree) {
    case 1:
        rule.points.push_back({1.0 / 3, 1.0 / 3, 1.0 / 3});
        rule.weights.push_back(1.0);
        break;
    case 2:
        add_orbit3(1.0 / 6, 2.0 / 3, 1.0 / 3);
        break;
    case 4:
        // Dunavant, 6 points
        add_orbit3(0.445948490915964886, 0.108103018168070227, 0.223381589678011466);
        add_orbit3(0.091576213509770743, 0.816847572980458514, 0.109951743655321868);
        break;
    case 5: {
        // Radon, 7 points
        const double s = std::sqrt(15.0);
        rule.points.push_back({1.0 / 3, 1.0 / 3, 1.0 / 3});
        rule.weights.push_back(9.0 / 40);
        add_orbit3((6.0 - s) / 21, (9.0 + 2 * s) / 21, (155.0 - s) / 1200);
        add_orbit3((6.0 + s) / 21, (9.0 - 2 * s) / 21, (155.0 + s) / 1200);
        break;
    }
    default:
        throw Error(ErrorKind::QuadratureOrderInvalid, "no symmetric triangle rule of degree " + std::to_string(degree));
    }
    return rule;
}

} // namespace polydec
