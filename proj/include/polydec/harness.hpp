#pragma once

#include <polydec/catalog.hpp>
#include <polydec/cochain.hpp>
#include <polydec/operators.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polydec {

enum class MeshProtocol { Regular, Jitter, Unstructure };

///
/// One refinement study. Config file format is flat "key = value" with '#' comments:
///   surface     plane | sphere | torus
///   protocol    regular | jitter | unstructure
///   jitter      r (jitter protocol)
///   fraction    edge fraction (unstructure protocol)
///   ladder      comma-separated resolutions, strictly increasing
///   torus_minor tube resolution as a fraction of the ladder value (torus only)
///   operator    identity0..2, wedge01, wedge02, wedge11, star0..2, inner0..2, contract1, contract2,
///               lie0..2, codiff1, codiff2, lap0
///   forms       catalog name
///   scheme      ours | aw
///   compare     optional second scheme for compare_schemes
///   seed        base seed; level i uses seed + i
///   quadrature  "edge_points,triangle_degree"
///   region      all | interior (drop cells touching the boundary from the norms)
///   norm        root | squared (report the L2 quadratic form instead of its root)
///   parallel    true | false
///
struct ExperimentConfig {
    std::string surface = "plane";
    MeshProtocol protocol = MeshProtocol::Regular;
    double jitter = 0.4;
    double fraction = 0.3;
    std::vector<int> ladder;
    double torus_minor = 0.5;
    std::string op = "identity0";
    std::string forms = "plane_trig";
    Scheme scheme = Scheme::Ours;
    std::optional<Scheme> compare;
    std::uint64_t seed = 1;
    QuadratureOptions quadrature;
    bool interior_only = false;
    bool squared_l2 = false;
    bool parallel = true;
};

/// Throws InvalidConfig for unknown keys, bad values, or a ladder that is not strictly increasing.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate_config(const ExperimentConfig& config);

std::string to_string(MeshProtocol protocol);
std::string to_string(Scheme scheme);
Scheme scheme_from_name(const std::string& name);
std::vector<std::string> operator_names();

struct LevelResult {
    int level = 0;
    int resolution = 0;
    double h = 0.0;
    int num_vertices = 0;
    double l2 = 0.0;
    double linf = 0.0;
    bool ok = false;
    std::string error;
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; ///< root mean square of the log10 residuals
};

/// Least-squares line through (log10 x, log10 y). Throws InsufficientPoints for fewer than 3
/// points and InvalidConfig for nonpositive values.
SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points);

///
/// Slopes against h are positive for convergence (error ~ h^s); slopes against |V| are
/// negative (error ~ |V|^{-s/2}). Fits skip failed levels and are left unset below 3 levels.
///
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<LevelResult> levels;
    std::optional<SlopeFit> l2_vs_h, linf_vs_h, l2_vs_vertices, linf_vs_vertices;
};

/// The mesh of one ladder level, deterministic in (config, level).
PolygonMesh level_mesh(const ExperimentConfig& config, int level);

/// Errors of the configured operator on one mesh: (l2, linf).
ErrorNorms evaluate_operator(const ExperimentConfig& config, const PolygonMesh& mesh);

ExperimentReport run_convergence(const ExperimentConfig& config);

/// "level,h,nV,l2,linf" preceded by '#' metadata lines.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

struct SchemeComparison {
    ExperimentReport first;
    ExperimentReport second;
    double plateau_first = 0.0;  ///< mean L2 error over the last three levels
    double plateau_second = 0.0;
    double ratio = 0.0;          ///< plateau_second / plateau_first
};

SchemeComparison compare_schemes(const ExperimentConfig& config, Scheme first, Scheme second);
void write_comparison_csv(const SchemeComparison& comparison, std::ostream& out);

} // namespace polydec
