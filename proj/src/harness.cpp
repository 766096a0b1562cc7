#include <polydec/harness.hpp>
#include <polydec/error.hpp>
#include <polydec/meshgen.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace polydec {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(d)) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidConfig, key + ": expected a number, got '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const long long i = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return i;
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidConfig, key + ": expected an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw Error(ErrorKind::InvalidConfig, key + ": expected true or false, got '" + value + "'");
}

MeshProtocol protocol_from_name(const std::string& name)
{
    if (name == "regular") return MeshProtocol::Regular;
    if (name == "jitter") return MeshProtocol::Jitter;
    if (name == "unstructure" || name == "unstructured") return MeshProtocol::Unstructure;
    throw Error(ErrorKind::InvalidConfig, "unknown protocol '" + name + "'");
}

Vec3 tangential(const Vec3& v, const Vec3& n)
{
    return v - v.dot(n) * n;
}


template <typename T>
const T& need(const std::optional<T>& field, const FormCatalog& c, const std::string& what)
{
    if (!field) throw Error(ErrorKind::InvalidConfig, "catalog '" + c.name + "' has no closed form for " + what);
    return *field;
}

struct Comparer {
    const ExperimentConfig& config;
    const PolygonMesh& mesh;

    ErrorNorms operator()(const Cochain& computed, const AnalyticField& reference) const
    {
        const Cochain exact = discretize(reference, mesh, computed.degree, config.quadrature);
        auto norms = config.interior_only ? error_norms(computed, exact, mesh, interior_cells(mesh, computed.degree))
                                          : error_norms(computed, exact, mesh);
        if (config.squared_l2) norms.l2 *= norms.l2;
        return norms;
    }
};

} // namespace

std::string to_string(MeshProtocol protocol)
{
    switch (protocol) {
    case MeshProtocol::Regular: return "regular";
    case MeshProtocol::Jitter: return "jitter";
    case MeshProtocol::Unstructure: return "unstructure";
    }
    return "?";
}

std::string to_string(Scheme scheme)
{
    return scheme == Scheme::Ours ? "ours" : "aw";
}

Scheme scheme_from_name(const std::string& name)
{
    if (name == "ours") return Scheme::Ours;
    if (name == "aw" || name == "aw0") return Scheme::AlexaWardetzky;
    throw Error(ErrorKind::InvalidConfig, "unknown scheme '" + name + "'");
}

std::vector<std::string> operator_names()
{
    return {"identity0", "identity1", "identity2", "wedge01", "wedge02", "wedge11", "star0",    "star1",
            "star2",     "inner0",    "inner1",    "inner2",  "contract1", "contract2", "lie0",  "lie1",
            "lie2",      "codiff1",   "codiff2",   "lap0"};
}

ExperimentConfig parse_config(std::istream& in)
{
    ExperimentConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "surface") {
            AnalyticSurface::from_name(value);
            c.surface = value;
        } else if (key == "protocol") {
            c.protocol = protocol_from_name(value);
        } else if (key == "jitter") {
            c.jitter = parse_double(key, value);
        } else if (key == "fraction") {
            c.fraction = parse_double(key, value);
        } else if (key == "ladder") {
            c.ladder.clear();
            for (const auto& item : split(value, ',')) c.ladder.push_back(static_cast<int>(parse_int(key, item)));
        } else if (key == "torus_minor") {
            c.torus_minor = parse_double(key, value);
        } else if (key == "operator") {
            c.op = value;
        } else if (key == "forms") {
            c.forms = value;
        } else if (key == "scheme") {
            c.scheme = scheme_from_name(value);
        } else if (key == "compare") {
            c.compare = scheme_from_name(value);
        } else if (key == "seed") {
            c.seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "quadrature") {
            const auto parts = split(value, ',');
            if (parts.size() != 2) throw Error(ErrorKind::InvalidConfig, "quadrature: expected edge_points,triangle_degree");
            c.quadrature.edge_points = static_cast<int>(parse_int(key, parts[0]));
            c.quadrature.triangle_degree = static_cast<int>(parse_int(key, parts[1]));
        } else if (key == "region") {
            if (value != "all" && value != "interior") throw Error(ErrorKind::InvalidConfig, "region: expected all or interior");
            c.interior_only = value == "interior";
        } else if (key == "norm") {
            if (value != "root" && value != "squared") throw Error(ErrorKind::InvalidConfig, "norm: expected root or squared");
            c.squared_l2 = value == "squared";
        } else if (key == "parallel") {
            c.parallel = parse_bool(key, value);
        } else {
            throw Error(ErrorKind::InvalidConfig, "unknown key '" + key + "'");
        }
    }
    validate_config(c);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    return parse_config(in);
}

void validate_config(const ExperimentConfig& c)
{
    const auto surface = AnalyticSurface::from_name(c.surface);
    const auto catalog = catalog_entry(c.forms);
    if (catalog.surface.kind() != surface.kind()) {
        throw Error(ErrorKind::InvalidConfig, "catalog '" + c.forms + "' lives on " + catalog.surface.name());
    }
    const auto ops = operator_names();
    if (std::find(ops.begin(), ops.end(), c.op) == ops.end()) throw Error(ErrorKind::InvalidConfig, "unknown operator '" + c.op + "'");
    if (c.ladder.empty()) throw Error(ErrorKind::InvalidConfig, "empty ladder");
    for (std::size_t i = 0; i < c.ladder.size(); ++i) {
        if (c.ladder[i] < 1) throw Error(ErrorKind::InvalidConfig, "ladder resolutions must be positive");
        if (i > 0 && c.ladder[i] <= c.ladder[i - 1]) throw Error(ErrorKind::InvalidConfig, "ladder must be strictly increasing");
    }
    if (c.protocol == MeshProtocol::Jitter && !(c.jitter >= 0.0 && c.jitter < 0.5)) {
        throw Error(ErrorKind::InvalidConfig, "jitter radius must lie in [0, 0.5)");
    }
    if (c.protocol == MeshProtocol::Unstructure && !(c.fraction >= 0.0 && c.fraction < 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "fraction must lie in [0, 1)");
    }
    if (!(c.torus_minor > 0.0 && c.torus_minor <= 4.0)) throw Error(ErrorKind::InvalidConfig, "torus_minor must lie in (0, 4]");
}

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points)
{
    if (points.size() < 3) throw Error(ErrorKind::InsufficientPoints, "slope fit needs at least 3 points");
    const int n = static_cast<int>(points.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        const auto [x, y] = points[i];
        if (!(x > 0.0 && y > 0.0)) throw Error(ErrorKind::InvalidConfig, "slope fit needs positive values");
        lx[i] = std::log10(x);
        ly[i] = std::log10(y);
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw Error(ErrorKind::InsufficientPoints, "slope fit needs distinct abscissae");
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

PolygonMesh level_mesh(const ExperimentConfig& config, int level)
{
    const auto surface = AnalyticSurface::from_name(config.surface);
    const int n = config.ladder.at(level);
    const int minor = surface.kind() == SurfaceKind::Torus
                          ? std::max(3, static_cast<int>(std::lround(config.torus_minor * n)))
                          : 0;
    PolygonMesh mesh = gen_regular(surface, n, minor);
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(level);
    switch (config.protocol) {
    case MeshProtocol::Regular: return mesh;
    case MeshProtocol::Jitter: return jitter(mesh, surface, config.jitter, seed);
    case MeshProtocol::Unstructure: return unstructure(mesh, config.fraction, seed).mesh;
    }
    return mesh;
}

ErrorNorms evaluate_operator(const ExperimentConfig& config, const PolygonMesh& mesh_in)
{
    const auto cat = catalog_entry(config.forms);
    const auto surface = cat.surface;
    const auto& quad = config.quadrature;
    const DecOperators ops(mesh_in);
    const auto& mesh = ops.mesh();
    const Comparer compare{config, mesh};
    const std::string& op = config.op;

    const auto A = cat.alpha0.value;
    const auto B = cat.beta1.components;
    const auto G = cat.gamma1.components;
    const auto W = cat.omega2.flux;
    const auto X = cat.x.value;
    const auto N = [surface](const Vec3& p) { return surface.normal(p); };

    const auto alpha = [&] { return discretize(cat.alpha0, mesh, quad); };
    const auto beta = [&] { return discretize(cat.beta1, mesh, quad); };
    const auto gamma = [&] { return discretize(cat.gamma1, mesh, quad); };
    const auto omega = [&] { return discretize(cat.omega2, mesh, quad); };
    const auto x_flat = [&] { return flat(cat.x, mesh, quad.edge_points); };

    if (op == "identity0") return compare(alpha(), cat.alpha0);
    if (op == "identity1") return compare(beta(), cat.beta1);
    if (op == "identity2") return compare(omega(), cat.omega2);

    if (op == "wedge01") {
        return compare(wedge(alpha(), beta(), mesh), CovectorField{[=](const Vec3& p) { return Vec3(A(p) * B(p)); }});
    }
    if (op == "wedge02") {
        return compare(wedge(alpha(), omega(), mesh), TwoFormField{[=](const Vec3& p) { return Vec3(A(p) * W(p)); }});
    }
    if (op == "wedge11") {
        return compare(wedge(beta(), gamma(), mesh), TwoFormField{[=](const Vec3& p) { return Vec3(B(p).cross(G(p))); }});
    }

    if (op == "star0") {
        return compare(ops.hodge_star(0).apply(alpha()), TwoFormField{[=](const Vec3& p) { return Vec3(A(p) * N(p)); }});
    }
    if (op == "star1") {
        return compare(ops.hodge_star(1).apply(beta()), CovectorField{[=](const Vec3& p) { return Vec3(N(p).cross(B(p))); }});
    }
    if (op == "star2") {
        return compare(ops.hodge_star(2).apply(omega()), ScalarField{[=](const Vec3& p) { return W(p).dot(N(p)); }});
    }

    if (op == "inner0" || op == "inner1" || op == "inner2") {
        double value = 0.0, reference = 0.0;
        if (op == "inner0") {
            const auto a = alpha();
            value = a.values.dot(ops.inner_product(0, config.scheme).matrix * a.values);
            reference = surface.integrate([&](const Vec3& p, const Vec3&) { return A(p) * A(p); });
        } else if (op == "inner1") {
            const auto b = beta();
            const auto g = gamma();
            value = b.values.dot(ops.inner_product(1, config.scheme).matrix * g.values);
            reference = surface.integrate([&](const Vec3& p, const Vec3& n) { return tangential(B(p), n).dot(tangential(G(p), n)); });
        } else {
            const auto w = omega();
            value = w.values.dot(ops.inner_product(2, config.scheme).matrix * w.values);
            reference = surface.integrate([&](const Vec3& p, const Vec3& n) { return std::pow(W(p).dot(n), 2); });
        }
        ErrorNorms out;
        out.l2 = out.linf = std::abs(value - reference);
        return out;
    }

    if (op == "contract1") {
        return compare(contraction(ops, x_flat(), beta()), ScalarField{[=](const Vec3& p) { return B(p).dot(X(p)); }});
    }
    if (op == "contract2") {
        return compare(contraction(ops, x_flat(), omega()), CovectorField{[=](const Vec3& p) { return Vec3(W(p).cross(X(p))); }});
    }

    if (op == "lie0") return compare(lie_derivative(ops, x_flat(), alpha()), need(cat.lie_alpha, cat, "L_X alpha"));
    if (op == "lie1") return compare(lie_derivative(ops, x_flat(), beta()), need(cat.lie_beta, cat, "L_X beta"));
    if (op == "lie2") return compare(lie_derivative(ops, x_flat(), omega()), need(cat.lie_omega, cat, "L_X omega"));

    if (op == "codiff1") {
        return compare(ops.codifferential(1, config.scheme).apply(beta()), need(cat.codiff_beta, cat, "delta beta"));
    }
    if (op == "codiff2") {
        return compare(ops.codifferential(2, config.scheme).apply(omega()), need(cat.codiff_omega, cat, "delta omega"));
    }
    if (op == "lap0") {
        return compare(ops.laplacian(0, config.scheme).apply(alpha()), need(cat.laplace_alpha, cat, "Laplacian of alpha"));
    }
    throw Error(ErrorKind::InvalidConfig, "unknown operator '" + op + "'");
}

ExperimentReport run_convergence(const ExperimentConfig& config)
{
    validate_config(config);
    const int levels = static_cast<int>(config.ladder.size());
    const auto run_level = [&config](int level) {
        LevelResult r;
        r.level = level;
        r.resolution = config.ladder[level];
        try {
            const PolygonMesh mesh = level_mesh(config, level);
            r.h = mesh_spacing(mesh).mean;
            r.num_vertices = mesh.num_vertices();
            const auto norms = evaluate_operator(config, mesh);
            r.l2 = norms.l2;
            r.linf = norms.linf;
            r.ok = true;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    };

    ExperimentReport report;
    report.config = config;
    if (config.parallel) {
        std::vector<std::future<LevelResult>> futures;
        for (int i = 0; i < levels; ++i) futures.push_back(std::async(std::launch::async, run_level, i));
        for (auto& f : futures) report.levels.push_back(f.get());
    } else {
        for (int i = 0; i < levels; ++i) report.levels.push_back(run_level(i));
    }

    std::vector<std::pair<double, double>> l2h, linfh, l2v, linfv;
    for (const auto& r : report.levels) {
        if (!r.ok || r.l2 <= 0.0 || r.linf <= 0.0) continue;
        l2h.emplace_back(r.h, r.l2);
        linfh.emplace_back(r.h, r.linf);
        l2v.emplace_back(r.num_vertices, r.l2);
        linfv.emplace_back(r.num_vertices, r.linf);
    }
    if (l2h.size() >= 3) {
        report.l2_vs_h = fit_slope(l2h);
        report.linf_vs_h = fit_slope(linfh);
        report.l2_vs_vertices = fit_slope(l2v);
        report.linf_vs_vertices = fit_slope(linfv);
    }
    return report;
}

namespace {

void write_metadata(const ExperimentReport& report, std::ostream& out, const std::string& prefix)
{
    const auto& c = report.config;
    out << "# " << prefix << "surface=" << c.surface << " protocol=" << to_string(c.protocol);
    if (c.protocol == MeshProtocol::Jitter) out << " jitter=" << c.jitter;
    if (c.protocol == MeshProtocol::Unstructure) out << " fraction=" << c.fraction;
    out << " operator=" << c.op << " forms=" << c.forms << " scheme=" << to_string(c.scheme) << " seed=" << c.seed
        << " quadrature=" << c.quadrature.edge_points << ',' << c.quadrature.triangle_degree
        << " region=" << (c.interior_only ? "interior" : "all") << " norm=" << (c.squared_l2 ? "squared" : "root") << '\n';
    const auto slope = [&](const char* name, const std::optional<SlopeFit>& fit) {
        out << "# " << prefix << name << '=';
        if (fit) out << fit->slope << " residual=" << fit->residual;
        else out << "n/a";
        out << '\n';
    };
    slope("slope_l2_vs_h", report.l2_vs_h);
    slope("slope_linf_vs_h", report.linf_vs_h);
    slope("slope_l2_vs_nV", report.l2_vs_vertices);
    slope("slope_linf_vs_nV", report.linf_vs_vertices);
    for (const auto& r : report.levels) {
        if (!r.ok) out << "# " << prefix << "level " << r.level << " failed: " << r.error << '\n';
    }
}

void write_rows(const ExperimentReport& report, std::ostream& out, const std::string& prefix)
{
    for (const auto& r : report.levels) {
        if (!r.ok) continue;
        out << prefix << r.level << ',' << r.h << ',' << r.num_vertices << ',' << r.l2 << ',' << r.linf << '\n';
    }
}

double plateau(const ExperimentReport& report)
{
    std::vector<double> l2;
    for (const auto& r : report.levels) {
        if (r.ok) l2.push_back(r.l2);
    }
    if (l2.size() < 3) throw Error(ErrorKind::InsufficientPoints, "plateau needs three successful levels");
    return (l2[l2.size() - 1] + l2[l2.size() - 2] + l2[l2.size() - 3]) / 3.0;
}

} // namespace

void write_report_csv(const ExperimentReport& report, std::ostream& out)
{
    const auto precision = out.precision(10);
    write_metadata(report, out, "");
    out << "level,h,nV,l2,linf\n";
    write_rows(report, out, "");
    out.precision(precision);
}

SchemeComparison compare_schemes(const ExperimentConfig& config, Scheme first, Scheme second)
{
    ExperimentConfig a = config, b = config;
    a.scheme = first;
    b.scheme = second;
    SchemeComparison c;
    c.first = run_convergence(a);
    c.second = run_convergence(b);
    c.plateau_first = plateau(c.first);
    c.plateau_second = plateau(c.second);
    c.ratio = c.plateau_second / c.plateau_first;
    return c;
}

void write_comparison_csv(const SchemeComparison& comparison, std::ostream& out)
{
    const auto precision = out.precision(10);
    write_metadata(comparison.first, out, "first ");
    write_metadata(comparison.second, out, "second ");
    out << "# plateau_first=" << comparison.plateau_first << " plateau_second=" << comparison.plateau_second
        << " ratio=" << comparison.ratio << '\n';
    out << "scheme,level,h,nV,l2,linf\n";
    write_rows(comparison.first, out, to_string(comparison.first.config.scheme) + ",");
    write_rows(comparison.second, out, to_string(comparison.second.config.scheme) + ",");
    out.precision(precision);
}

} // namespace polydec
