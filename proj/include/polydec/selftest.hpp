#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polydec {

struct IdentityCheck {
    std::string name;
    double error = 0.0;     ///< worst relative violation over all meshes
    double tolerance = 0.0;
    bool pass = false;
};

///
/// Identities that hold to rounding on every mesh: d d = 0, wedge skew-commutativity, Leibniz,
/// L_X 1 = 0 and HHD reconstruction on `meshes` random polygonal meshes; planar *mu = 1 and
/// *1 = mu; vanishing of Delta_0 on affine functions at interior vertices of planar meshes.
///
std::vector<IdentityCheck> exact_identity_checks(std::uint64_t seed = 7, int meshes = 20);

} // namespace polydec
