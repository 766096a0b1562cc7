#pragma once

#include <polydec/error.hpp>
#include <polydec/mesh.hpp>

#include <doctest.h>

#include <functional>

namespace testing {

inline polydec::ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const polydec::Error& e) {
        return e.kind();
    }
    FAIL("expected a polydec::Error");
    return polydec::ErrorKind::Io;
}

inline polydec::PolygonMesh unit_square()
{
    return polydec::PolygonMesh::build({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {{0, 1, 2, 3}});
}

// irregular convex pentagon in z = 0
inline polydec::PolygonMesh pentagon()
{
    return polydec::PolygonMesh::build({{0, 0, 0}, {2, 0, 0}, {2.5, 1.5, 0}, {1, 2.5, 0}, {-0.5, 1, 0}}, {{0, 1, 2, 3, 4}});
}

// two quads sharing the edge (1,4)
inline polydec::PolygonMesh two_quads()
{
    return polydec::PolygonMesh::build({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1.2, 1.1, 0}, {2, 1, 0}},
                                       {{0, 1, 4, 3}, {1, 2, 5, 4}});
}

} // namespace testing
