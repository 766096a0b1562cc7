#pragma once

#include <stdexcept>
#include <string>

namespace polydec {

enum class ErrorKind {
    IndexOutOfRange,
    DegenerateFace,
    NonManifoldEdge,
    ZeroArea,
    EmptyMesh,
    JitterCollapse,
    QuadratureOrderInvalid,
    DegreeMismatch,
    DegreeOverflow,
    SchemeDegreeUnsupported,
    IsolatedVertex,
    DimensionMismatch,
    SingularMatrix,
    NoConvergence,
    SolverFailure,
    GeometryCollapse,
    NumericalBlowup,
    InsufficientPoints,
    InvalidConfig,
    Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace polydec
