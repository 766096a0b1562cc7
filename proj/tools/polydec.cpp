#include <polydec/applications.hpp>
#include <polydec/catalog.hpp>
#include <polydec/error.hpp>
#include <polydec/harness.hpp>
#include <polydec/mesh_io.hpp>
#include <polydec/meshgen.hpp>
#include <polydec/operators.hpp>
#include <polydec/selftest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace polydec;

namespace {

std::ofstream open_output(const fs::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    return out;
}

// builtin:<name> or csv:<file> with one "x,y,z" vector per vertex
VectorField parse_field(const std::string& spec, const PolygonMesh& mesh, Cochain* csv_flat)
{
    if (spec.rfind("builtin:", 0) == 0) return builtin_vector_field(spec.substr(8));
    if (spec.rfind("csv:", 0) == 0) {
        *csv_flat = read_cochain_csv(spec.substr(4), 1);
        check_cochain(mesh, *csv_flat);
        return {};
    }
    throw Error(ErrorKind::InvalidConfig, "field must be builtin:<name> or csv:<file>");
}

Cochain field_to_flat(const std::string& spec, const PolygonMesh& mesh)
{
    Cochain from_csv;
    const VectorField x = parse_field(spec, mesh, &from_csv);
    return x.value ? flat(x, mesh) : from_csv;
}

std::vector<double> vertex_scalars(const Cochain& c, const DecOperators& ops)
{
    Vector v = c.degree == 0 ? c.values : ops.hodge_star(2).apply(c).values;
    return {v.data(), v.data() + v.size()};
}

int run_gen(const std::string& surface_name, int res, int minor, double jit, double fraction, std::uint64_t seed, const fs::path& out)
{
    const auto surface = AnalyticSurface::from_name(surface_name);
    PolygonMesh mesh = gen_regular(surface, res, minor);
    if (jit > 0.0) mesh = jitter(mesh, surface, jit, seed);
    if (fraction > 0.0) {
        auto r = unstructure(mesh, fraction, seed);
        std::cerr << "removed " << r.removed << " of " << r.requested << " requested edges\n";
        mesh = std::move(r.mesh);
    }
    write_obj(mesh, out);
    std::cerr << mesh.num_vertices() << " vertices, " << mesh.num_edges() << " edges, " << mesh.num_faces() << " faces\n";
    return 0;
}

const Operator& pick_operator(const DecOperators& ops, const std::string& which, Scheme scheme)
{
    if (which.size() == 2 && which[0] == 'd') return ops.exterior_derivative(which[1] - '0');
    const auto degree = [&](std::size_t prefix) {
        const std::string rest = which.substr(prefix);
        if (rest.size() != 1 || rest[0] < '0' || rest[0] > '2') throw Error(ErrorKind::InvalidConfig, "unknown operator '" + which + "'");
        return rest[0] - '0';
    };
    if (which.rfind("star", 0) == 0) return ops.hodge_star(degree(4));
    if (which.rfind("inner", 0) == 0) return ops.inner_product(degree(5), scheme);
    if (which.rfind("codiff", 0) == 0) return ops.codifferential(degree(6), scheme);
    if (which.rfind("delta", 0) == 0) return ops.codifferential(degree(5), scheme);
    if (which.rfind("lap", 0) == 0) return ops.laplacian(degree(3), scheme);
    throw Error(ErrorKind::InvalidConfig, "unknown operator '" + which + "'");
}

int run_hhd(const fs::path& mesh_path, const std::string& field, const fs::path& outdir, double tol)
{
    const DecOperators ops(read_obj(mesh_path));
    const auto& mesh = ops.mesh();
    HHDOptions options;
    options.tol = tol;
    options.sharps = true;
    const auto r = helmholtz_hodge(ops, field_to_flat(field, mesh), options);
    fs::create_directories(outdir);
    write_cochain_csv(r.delta_beta, outdir / "delta_beta.csv");
    write_cochain_csv(r.gamma, outdir / "gamma.csv");
    write_cochain_csv(r.beta, outdir / "beta.csv");
    write_vector_field_csv(r.delta_beta_sharp, outdir / "delta_beta_sharp.csv");
    write_vector_field_csv(r.gamma_sharp, outdir / "gamma_sharp.csv");

    const auto potential = vertex_scalars(r.beta, ops);
    write_ply(mesh, outdir / "delta_beta.ply", {.scalar_name = "beta", .scalars = potential, .vector_name = "delta_beta", .vectors = r.delta_beta_sharp});
    write_ply(mesh, outdir / "gamma.ply", {.scalar_name = "beta", .scalars = potential, .vector_name = "gamma", .vectors = r.gamma_sharp});
    std::cerr << r.report.method << ": " << r.report.iterations << " iterations, relative residual " << r.report.relative_residual
              << (r.report.converged ? "" : " (not converged)") << '\n';
    return r.report.converged ? 0 : 2;
}

int run_advect(const fs::path& mesh_path, const std::string& field, const std::string& form, const AdvectionOptions& options,
               const fs::path& outdir)
{
    const DecOperators ops(read_obj(mesh_path));
    const auto& mesh = ops.mesh();
    const Cochain x_flat = field_to_flat(field, mesh);
    Cochain alpha0;
    if (form.rfind("csv0:", 0) == 0) alpha0 = read_cochain_csv(form.substr(5), 0);
    else if (form.rfind("csv:", 0) == 0) alpha0 = read_cochain_csv(form.substr(4), 1);
    else if (form.rfind("builtin:", 0) == 0) alpha0 = flat(builtin_vector_field(form.substr(8)), mesh);
    else throw Error(ErrorKind::InvalidConfig, "form must be csv:<1-form file>, csv0:<0-form file> or builtin:<field>");

    const auto r = lie_advect_partial(ops, x_flat, alpha0, options);
    fs::create_directories(outdir);
    for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
        const std::string stem = "step_" + std::to_string(r.steps[i]);
        write_cochain_csv(r.snapshots[i], outdir / (stem + ".csv"));
        if (r.snapshots[i].degree == 1) {
            const auto s = sharp(r.snapshots[i], mesh);
            write_vector_field_csv(s, outdir / (stem + "_sharp.csv"));
            write_ply(mesh, outdir / (stem + ".ply"), {.vector_name = "sharp", .vectors = s});
        } else {
            const auto v = vertex_scalars(r.snapshots[i], ops);
            write_ply(mesh, outdir / (stem + ".ply"), {.scalar_name = "alpha", .scalars = v});
        }
    }
    if (r.blew_up) {
        std::cerr << "blowup at step " << r.steps.back() << "; partial results written\n";
        return 3;
    }
    return 0;
}

int run_converge(const fs::path& config_path, const fs::path& out_path)
{
    const auto config = load_config(config_path);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    if (config.compare) {
        const auto c = compare_schemes(config, config.scheme, *config.compare);
        write_comparison_csv(c, *out);
        std::cerr << "plateau " << to_string(config.scheme) << '=' << c.plateau_first << ' ' << to_string(*config.compare) << '='
                  << c.plateau_second << " ratio=" << c.ratio << '\n';
        return 0;
    }
    const auto report = run_convergence(config);
    write_report_csv(report, *out);
    if (report.l2_vs_h) {
        std::cerr << "slope vs h: l2 " << report.l2_vs_h->slope << ", linf " << report.linf_vs_h->slope << "; vs nV: l2 "
                  << report.l2_vs_vertices->slope << ", linf " << report.linf_vs_vertices->slope << '\n';
    }
    return 0;
}

int run_selftest()
{
    bool ok = true;
    for (const auto& c : exact_identity_checks()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  error=" << c.error << " tol=" << c.tolerance << '\n';
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete exterior calculus on polygonal surface meshes"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a test mesh");
    std::string surface = "plane";
    int res = 16, minor = 0;
    double jit = 0.0, fraction = 0.0;
    std::uint64_t seed = 1;
    fs::path out;
    gen->add_option("--surface", surface, "plane | sphere | torus")->check(CLI::IsMember({"plane", "sphere", "torus"}));
    gen->add_option("--res", res, "resolution")->check(CLI::PositiveNumber);
    gen->add_option("--minor", minor, "torus tube resolution (default: res)");
    gen->add_option("--jitter", jit, "jitter radius r");
    gen->add_option("--unstructure", fraction, "fraction of edges to remove");
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out)->required();

    auto* op = app.add_subcommand("op", "assemble an operator and write it in Matrix Market format");
    fs::path mesh_path;
    std::string which = "lap0", scheme_name = "ours";
    op->add_option("-m,--mesh", mesh_path)->required()->check(CLI::ExistingFile);
    op->add_option("--which", which, "d0 d1 star0..2 inner0..2 codiff1..2 (or delta1..2) lap0..2");
    op->add_option("--scheme", scheme_name)->check(CLI::IsMember({"ours", "aw", "aw0"}));
    op->add_option("-o,--output", out)->required();

    auto* mcf = app.add_subcommand("mcf", "implicit mean curvature flow");
    FlowConfig flow;
    mcf->add_option("-m,--mesh", mesh_path)->required()->check(CLI::ExistingFile);
    mcf->add_option("-t", flow.t);
    mcf->add_option("-n", flow.iterations);
    mcf->add_option("--scheme", scheme_name)->check(CLI::IsMember({"ours", "aw", "aw0"}));
    mcf->add_option("-o,--output", out)->required();

    auto* hhd = app.add_subcommand("hhd", "Helmholtz-Hodge decomposition");
    std::string field;
    double tol = 1e-10;
    hhd->add_option("-m,--mesh", mesh_path)->required()->check(CLI::ExistingFile);
    hhd->add_option("--field", field, "builtin:<name> | csv:<1-cochain file>")->required();
    hhd->add_option("--tol", tol);
    hhd->add_option("-o,--output", out, "output directory")->required();

    auto* advect = app.add_subcommand("advect", "Lie advection by forward Euler");
    std::string form;
    AdvectionOptions adv;
    advect->add_option("-m,--mesh", mesh_path)->required()->check(CLI::ExistingFile);
    advect->add_option("--field", field)->required();
    advect->add_option("--form", form, "csv:<1-form> | csv0:<0-form> | builtin:<field>")->required();
    advect->add_option("-t", adv.t);
    advect->add_option("-n", adv.iterations);
    advect->add_option("--snapshot-every", adv.snapshot_every);
    advect->add_option("-o,--output", out, "output directory")->required();

    auto* converge = app.add_subcommand("converge", "run a convergence study");
    fs::path config;
    converge->add_option("--config", config)->required()->check(CLI::ExistingFile);
    converge->add_option("-o,--output", out);

    auto* selftest = app.add_subcommand("selftest", "check the exact discrete identities");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return run_gen(surface, res, minor, jit, fraction, seed, out);
        if (*op) {
            const DecOperators ops(read_obj(mesh_path));
            write_matrix_market(pick_operator(ops, which, scheme_from_name(scheme_name)).matrix, out);
            return 0;
        }
        if (*mcf) {
            flow.scheme = scheme_from_name(scheme_name);
            const auto meshes = mean_curvature_flow(read_obj(mesh_path), flow);
            write_obj(meshes.back(), out);
            std::cerr << "mean radius " << mean_vertex_radius(meshes.front()) << " -> " << mean_vertex_radius(meshes.back()) << '\n';
            return 0;
        }
        if (*hhd) return run_hhd(mesh_path, field, out, tol);
        if (*advect) return run_advect(mesh_path, field, form, adv, out);
        if (*converge) return run_converge(config, out);
        if (*selftest) return run_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
