#include <polydec/error.hpp>

namespace polydec {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorKind::ZeroArea: return "ZeroArea";
    case ErrorKind::EmptyMesh: return "EmptyMesh";
    case ErrorKind::JitterCollapse: return "JitterCollapse";
    case ErrorKind::QuadratureOrderInvalid: return "QuadratureOrderInvalid";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::SchemeDegreeUnsupported: return "SchemeDegreeUnsupported";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::GeometryCollapse: return "GeometryCollapse";
    case ErrorKind::NumericalBlowup: return "NumericalBlowup";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

} // namespace polydec
