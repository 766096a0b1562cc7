#include <polydec/error.hpp>
#include <polydec/operators.hpp>

#include <string>

namespace polydec {

Cochain Operator::apply(const Cochain& c) const
{
    if (c.degree != from_degree) {
        throw Error(ErrorKind::DegreeMismatch, "operator expects a " + std::to_string(from_degree) + "-cochain, got degree " +
                                                   std::to_string(c.degree));
    }
    if (c.size() != matrix.cols()) throw Error(ErrorKind::DimensionMismatch, "cochain length does not match operator");
    return {to_degree, matrix * c.values};
}

FaceLocalBlock face_local_block(const PolygonMesh& mesh, int face)
{
    const double area = mesh.face_geometry(face).area;
    const auto verts = mesh.face(face);
    const int p = static_cast<int>(verts.size());

    FaceLocalBlock block{Eigen::MatrixXd::Zero(p, p), Eigen::MatrixXd::Zero(p, p)};
    for (int a = 1; a <= (p - 1) / 2; ++a) {
        const double c = 0.5 - static_cast<double>(a) / p;
        for (int k = 0; k < p; ++k) {
            block.wedge(k, (k + a) % p) += c;
            block.wedge(k, (k - a + p) % p) -= c;
        }
    }

    std::vector<Vec3> edges(p);
    for (int i = 0; i < p; ++i) edges[i] = mesh.position(verts[(i + 1) % p]) - mesh.position(verts[i]);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) block.metric(i, j) = edges[i].dot(edges[j]) / area;
    }
    return block;
}

namespace assembly {

SparseMatrix d0(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(2 * mesh.num_edges());
    for (int e = 0; e < mesh.num_edges(); ++e) {
        t.emplace_back(e, mesh.edge(e)[0], -1.0);
        t.emplace_back(e, mesh.edge(e)[1], 1.0);
    }
    return from_triplets(mesh.num_edges(), mesh.num_vertices(), t);
}

SparseMatrix d1(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(mesh.num_halfedges());
    for (int f = 0; f < mesh.num_faces(); ++f) {
        for (const auto& he : mesh.face_halfedges(f)) t.emplace_back(f, he.edge, static_cast<double>(he.sign));
    }
    return from_triplets(mesh.num_faces(), mesh.num_edges(), t);
}

SparseMatrix edge_to_halfedge(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(mesh.num_halfedges());
    for (int h = 0; h < mesh.num_halfedges(); ++h) {
        t.emplace_back(h, mesh.halfedge(h).edge, static_cast<double>(mesh.halfedge(h).sign));
    }
    return from_triplets(mesh.num_halfedges(), mesh.num_edges(), t);
}

SparseMatrix halfedge_to_edge(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(mesh.num_halfedges());
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto hs = mesh.edge_halfedges(e);
        for (int h : hs) t.emplace_back(e, h, mesh.halfedge(h).sign / static_cast<double>(hs.size()));
    }
    return from_triplets(mesh.num_edges(), mesh.num_halfedges(), t);
}

SparseMatrix halfedge_pairing(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(2 * mesh.num_halfedges());
    for (int e = 0; e < mesh.num_edges(); ++e) {
        const auto hs = mesh.edge_halfedges(e);
        if (hs.size() == 1) {
            t.emplace_back(hs[0], hs[0], 1.0);
        } else {
            t.emplace_back(hs[0], hs[0], 0.5);
            t.emplace_back(hs[1], hs[1], 0.5);
            t.emplace_back(hs[0], hs[1], -0.5);
            t.emplace_back(hs[1], hs[0], -0.5);
        }
    }
    return from_triplets(mesh.num_halfedges(), mesh.num_halfedges(), t);
}

namespace {

template <typename Pick>
SparseMatrix face_blocks(const PolygonMesh& mesh, Pick pick)
{
    std::vector<Triplet> t;
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const auto block = face_local_block(mesh, f);
        const Eigen::MatrixXd& m = pick(block);
        const int offset = mesh.halfedge_offset(f);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j) != 0.0) t.emplace_back(offset + i, offset + j, m(i, j));
            }
        }
    }
    return from_triplets(mesh.num_halfedges(), mesh.num_halfedges(), t);
}

} // namespace

SparseMatrix wedge_blocks(const PolygonMesh& mesh)
{
    return face_blocks(mesh, [](const FaceLocalBlock& b) -> const Eigen::MatrixXd& { return b.wedge; });
}

SparseMatrix metric_blocks(const PolygonMesh& mesh)
{
    return face_blocks(mesh, [](const FaceLocalBlock& b) -> const Eigen::MatrixXd& { return b.metric; });
}

SparseMatrix edge_average(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(2 * mesh.num_edges());
    for (int e = 0; e < mesh.num_edges(); ++e) {
        t.emplace_back(e, mesh.edge(e)[0], 0.5);
        t.emplace_back(e, mesh.edge(e)[1], 0.5);
    }
    return from_triplets(mesh.num_edges(), mesh.num_vertices(), t);
}

SparseMatrix face_average(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    t.reserve(mesh.num_halfedges());
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const double w = 1.0 / mesh.face_degree(f);
        for (int v : mesh.face(f)) t.emplace_back(f, v, w);
    }
    return from_triplets(mesh.num_faces(), mesh.num_vertices(), t);
}

Vector face_areas(const PolygonMesh& mesh)
{
    Vector a(mesh.num_faces());
    for (int f = 0; f < mesh.num_faces(); ++f) a[f] = mesh.face_geometry(f).area;
    return a;
}

Vector vertex_mass_aw(const PolygonMesh& mesh)
{
    Vector m = Vector::Zero(mesh.num_vertices());
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const double share = mesh.face_geometry(f).area / mesh.face_degree(f);
        for (int v : mesh.face(f)) m[v] += share;
    }
    return m;
}

Vector vertex_weights(const PolygonMesh& mesh)
{
    Vector m = vertex_mass_aw(mesh);
    for (int v = 0; v < mesh.num_vertices(); ++v) {
        if (m[v] <= 0.0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " has no incident area");
    }
    return m.cwiseInverse();
}

SparseMatrix one_form_mass_aw(const PolygonMesh& mesh)
{
    std::vector<Triplet> t;
    for (int f = 0; f < mesh.num_faces(); ++f) {
        const auto& g = mesh.face_geometry(f);
        const auto verts = mesh.face(f);
        const auto hes = mesh.face_halfedges(f);
        const int p = static_cast<int>(verts.size());
        Eigen::MatrixXd midpoints(p, 3);
        for (int i = 0; i < p; ++i) {
            const Vec3 mid = 0.5 * (mesh.position(verts[i]) + mesh.position(verts[(i + 1) % p])) - g.centroid;
            midpoints.row(i) = mid.transpose();
        }
        const Eigen::MatrixXd local = midpoints * midpoints.transpose() / g.area;
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < p; ++j) {
                t.emplace_back(hes[i].edge, hes[j].edge, hes[i].sign * hes[j].sign * local(i, j));
            }
        }
    }
    return from_triplets(mesh.num_edges(), mesh.num_edges(), t);
}

} // namespace assembly

Cochain wedge(const Cochain& alpha, const Cochain& beta, const PolygonMesh& mesh)
{
    check_cochain(mesh, alpha);
    check_cochain(mesh, beta);
    const int k = alpha.degree, l = beta.degree;
    if (k + l > 2) {
        throw Error(ErrorKind::DegreeOverflow, "wedge of degrees " + std::to_string(k) + " and " + std::to_string(l));
    }
    // 0-forms commute with everything
    if (l == 0 && k > 0) return wedge(beta, alpha, mesh);

    Cochain out = Cochain::zero(mesh, k + l);
    if (k == 0 && l == 0) {
        out.values = alpha.values.cwiseProduct(beta.values);
    } else if (k == 0 && l == 1) {
        for (int e = 0; e < mesh.num_edges(); ++e) {
            const auto& [a, b] = mesh.edge(e);
            out.values[e] = 0.5 * (alpha.values[a] + alpha.values[b]) * beta.values[e];
        }
    } else if (k == 0 && l == 2) {
        for (int f = 0; f < mesh.num_faces(); ++f) {
            double mean = 0.0;
            for (int v : mesh.face(f)) mean += alpha.values[v];
            out.values[f] = mean / mesh.face_degree(f) * beta.values[f];
        }
    } else {
        std::vector<double> a, b;
        for (int f = 0; f < mesh.num_faces(); ++f) {
            const auto hes = mesh.face_halfedges(f);
            const int p = static_cast<int>(hes.size());
            a.resize(p);
            b.resize(p);
            for (int i = 0; i < p; ++i) {
                a[i] = hes[i].sign * alpha.values[hes[i].edge];
                b[i] = hes[i].sign * beta.values[hes[i].edge];
            }
            double sum = 0.0;
            for (int shift = 1; shift <= (p - 1) / 2; ++shift) {
                double inner = 0.0;
                for (int i = 0; i < p; ++i) inner += a[i] * (b[(i + shift) % p] - b[(i - shift + p) % p]);
                sum += (0.5 - static_cast<double>(shift) / p) * inner;
            }
            out.values[f] = sum;
        }
    }
    return out;
}

DecOperators::DecOperators(std::shared_ptr<const PolygonMesh> mesh) : mesh_(std::move(mesh)) {}

DecOperators::DecOperators(PolygonMesh mesh) : mesh_(std::make_shared<const PolygonMesh>(std::move(mesh))) {}

const Operator& DecOperators::cached(const std::string& key, int from, int to, const std::function<SparseMatrix()>& build) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    // assemble outside the lock; builders may request other cached operators
    auto op = std::make_unique<Operator>(Operator{from, to, build(), mesh_->id()});
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(op));
    return *it->second;
}

const Operator& DecOperators::exterior_derivative(int k) const
{
    const auto& m = *mesh_;
    switch (k) {
    case 0: return cached("d0", 0, 1, [&] { return assembly::d0(m); });
    case 1: return cached("d1", 1, 2, [&] { return assembly::d1(m); });
    default: throw Error(ErrorKind::DegreeOverflow, "exterior derivative of degree " + std::to_string(k));
    }
}

const Operator& DecOperators::hodge_star(int k) const
{
    const auto& m = *mesh_;
    switch (k) {
    case 0:
        return cached("star0", 0, 2, [&] { return SparseMatrix(diagonal(assembly::face_areas(m)) * assembly::face_average(m)); });
    case 1:
        return cached("star1", 1, 1, [&] {
            SparseMatrix halfedge_star = assembly::metric_blocks(m) * SparseMatrix(assembly::wedge_blocks(m).transpose());
            return SparseMatrix(assembly::halfedge_to_edge(m) * halfedge_star * assembly::edge_to_halfedge(m));
        });
    case 2:
        return cached("star2", 2, 0, [&] {
            return SparseMatrix(diagonal(assembly::vertex_weights(m)) * SparseMatrix(assembly::face_average(m).transpose()));
        });
    default: throw Error(ErrorKind::DegreeOverflow, "Hodge star of degree " + std::to_string(k));
    }
}

const Operator& DecOperators::inner_product(int k, Scheme scheme) const
{
    const auto& m = *mesh_;
    if (scheme == Scheme::AlexaWardetzky) {
        switch (k) {
        case 0: return cached("ip0:aw", 0, 0, [&] { return diagonal(assembly::vertex_mass_aw(m)); });
        case 1: return cached("ip1:aw", 1, 1, [&] { return assembly::one_form_mass_aw(m); });
        default: throw Error(ErrorKind::SchemeDegreeUnsupported, "AW inner product is defined for k = 0, 1");
        }
    }
    switch (k) {
    case 0:
        return cached("ip0", 0, 0, [&] {
            const SparseMatrix fv = assembly::face_average(m);
            return SparseMatrix(SparseMatrix(fv.transpose()) * diagonal(assembly::face_areas(m)) * fv);
        });
    case 1:
        return cached("ip1", 1, 1, [&] {
            const SparseMatrix s = assembly::edge_to_halfedge(m);
            const SparseMatrix r = assembly::wedge_blocks(m);
            SparseMatrix inner = r * assembly::halfedge_pairing(m) * assembly::metric_blocks(m) * SparseMatrix(r.transpose());
            return SparseMatrix(SparseMatrix(s.transpose()) * inner * s);
        });
    case 2:
        return cached("ip2", 2, 2, [&] {
            const SparseMatrix fv = assembly::face_average(m);
            return SparseMatrix(fv * diagonal(assembly::vertex_weights(m)) * SparseMatrix(fv.transpose()));
        });
    default: throw Error(ErrorKind::DegreeOverflow, "inner product of degree " + std::to_string(k));
    }
}

const Operator& DecOperators::codifferential(int k, Scheme scheme) const
{
    if (scheme == Scheme::AlexaWardetzky) {
        if (k != 1) throw Error(ErrorKind::SchemeDegreeUnsupported, "AW codifferential is defined for k = 1");
        return cached("delta1:aw", 1, 0, [&] {
            const Vector inv_m0 = assembly::vertex_mass_aw(*mesh_).cwiseInverse();
            return SparseMatrix(diagonal(inv_m0) * SparseMatrix(exterior_derivative(0).matrix.transpose()) *
                                inner_product(1, Scheme::AlexaWardetzky).matrix);
        });
    }
    switch (k) {
    case 1:
        return cached("delta1", 1, 0, [&] {
            return SparseMatrix(-(hodge_star(2).matrix * exterior_derivative(1).matrix * hodge_star(1).matrix));
        });
    case 2:
        return cached("delta2", 2, 1, [&] {
            return SparseMatrix(-(hodge_star(1).matrix * exterior_derivative(0).matrix * hodge_star(2).matrix));
        });
    default: throw Error(ErrorKind::DegreeOverflow, "codifferential of degree " + std::to_string(k));
    }
}

const Operator& DecOperators::laplacian(int k, Scheme scheme) const
{
    if (scheme == Scheme::AlexaWardetzky) {
        if (k != 0) throw Error(ErrorKind::SchemeDegreeUnsupported, "AW geometric Laplacian is defined for k = 0");
        return cached("lap0:aw", 0, 0, [&] {
            return SparseMatrix(codifferential(1, Scheme::AlexaWardetzky).matrix * exterior_derivative(0).matrix);
        });
    }
    switch (k) {
    case 0:
        return cached("lap0", 0, 0, [&] { return SparseMatrix(codifferential(1).matrix * exterior_derivative(0).matrix); });
    case 1:
        return cached("lap1", 1, 1, [&] {
            return SparseMatrix(exterior_derivative(0).matrix * codifferential(1).matrix +
                                codifferential(2).matrix * exterior_derivative(1).matrix);
        });
    case 2:
        return cached("lap2", 2, 2, [&] { return SparseMatrix(exterior_derivative(1).matrix * codifferential(2).matrix); });
    default: throw Error(ErrorKind::DegreeOverflow, "Laplacian of degree " + std::to_string(k));
    }
}

Operator DecOperators::wedge_with_zero_form(const Cochain& alpha0, int l) const
{
    const auto& m = *mesh_;
    if (alpha0.degree != 0) throw Error(ErrorKind::DegreeMismatch, "expected a 0-form");
    check_cochain(m, alpha0);
    switch (l) {
    case 0: return {0, 0, diagonal(alpha0.values), m.id()};
    case 1: return {1, 1, diagonal(assembly::edge_average(m) * alpha0.values), m.id()};
    case 2: return {2, 2, diagonal(assembly::face_average(m) * alpha0.values), m.id()};
    default: throw Error(ErrorKind::DegreeOverflow, "wedge with a 0-form of degree " + std::to_string(l));
    }
}

Operator DecOperators::wedge_with_one_form(const Cochain& beta1, int l) const
{
    const auto& m = *mesh_;
    if (beta1.degree != 1) throw Error(ErrorKind::DegreeMismatch, "expected a 1-form");
    check_cochain(m, beta1);
    if (l == 0) return {0, 1, SparseMatrix(diagonal(beta1.values) * assembly::edge_average(m)), m.id()};
    if (l != 1) throw Error(ErrorKind::DegreeOverflow, "wedge of a 1-form with degree " + std::to_string(l));

    // (beta ^ gamma)(f) = b_f^T R g_f on face-oriented halfedge values
    std::vector<Triplet> t;
    for (int f = 0; f < m.num_faces(); ++f) {
        const auto hes = m.face_halfedges(f);
        const int p = static_cast<int>(hes.size());
        const auto block = face_local_block(m, f);
        Eigen::VectorXd b(p);
        for (int i = 0; i < p; ++i) b[i] = hes[i].sign * beta1.values[hes[i].edge];
        const Eigen::VectorXd row = block.wedge.transpose() * b;
        for (int j = 0; j < p; ++j) t.emplace_back(f, hes[j].edge, row[j] * hes[j].sign);
    }
    return {1, 2, from_triplets(m.num_faces(), m.num_edges(), t), m.id()};
}

Operator DecOperators::contraction_operator(const Cochain& x_flat, int k) const
{
    const auto& m = *mesh_;
    switch (k) {
    case 1: {
        // -*( *beta ^ X ) = *( X ^ *beta )
        const SparseMatrix wedge_x = wedge_with_one_form(x_flat, 1).matrix;
        return {1, 0, SparseMatrix(hodge_star(2).matrix * wedge_x * hodge_star(1).matrix), m.id()};
    }
    case 2: {
        const SparseMatrix wedge_x = wedge_with_one_form(x_flat, 0).matrix;
        return {2, 1, SparseMatrix(hodge_star(1).matrix * wedge_x * hodge_star(2).matrix), m.id()};
    }
    default: throw Error(ErrorKind::DegreeMismatch, "contraction matrix is defined for k = 1, 2");
    }
}

Operator DecOperators::lie_operator(const Cochain& x_flat, int k) const
{
    const auto& m = *mesh_;
    const auto& d0 = exterior_derivative(0).matrix;
    const auto& d1 = exterior_derivative(1).matrix;
    switch (k) {
    case 0: return {0, 0, SparseMatrix(contraction_operator(x_flat, 1).matrix * d0), m.id()};
    case 1: {
        SparseMatrix lie = contraction_operator(x_flat, 2).matrix * d1;
        lie += SparseMatrix(d0 * contraction_operator(x_flat, 1).matrix);
        return {1, 1, lie, m.id()};
    }
    case 2: return {2, 2, SparseMatrix(d1 * contraction_operator(x_flat, 2).matrix), m.id()};
    default: throw Error(ErrorKind::DegreeOverflow, "Lie derivative of degree " + std::to_string(k));
    }
}

Cochain contraction(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha)
{
    const auto& m = ops.mesh();
    if (x_flat.degree != 1) throw Error(ErrorKind::DegreeMismatch, "X^flat must be a 1-cochain");
    check_cochain(m, alpha);
    switch (alpha.degree) {
    case 0: return Cochain::zero(m, 0);
    case 1: return -1.0 * ops.hodge_star(2).apply(wedge(ops.hodge_star(1).apply(alpha), x_flat, m));
    case 2: return ops.hodge_star(1).apply(wedge(ops.hodge_star(2).apply(alpha), x_flat, m));
    default: throw Error(ErrorKind::DegreeOverflow, "contraction of degree " + std::to_string(alpha.degree));
    }
}

Cochain lie_derivative(const DecOperators& ops, const Cochain& x_flat, const Cochain& alpha)
{
    const auto& d0 = ops.exterior_derivative(0);
    const auto& d1 = ops.exterior_derivative(1);
    switch (alpha.degree) {
    case 0: return contraction(ops, x_flat, d0.apply(alpha));
    case 1: return contraction(ops, x_flat, d1.apply(alpha)) + d0.apply(contraction(ops, x_flat, alpha));
    case 2: return d1.apply(contraction(ops, x_flat, alpha));
    default: throw Error(ErrorKind::DegreeOverflow, "Lie derivative of degree " + std::to_string(alpha.degree));
    }
}

} // namespace polydec
