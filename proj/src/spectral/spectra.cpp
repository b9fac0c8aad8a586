#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "wentzell/format.hpp"
#include "wentzell/spectral.hpp"

namespace wentzell {

namespace {

constexpr Eigen::Index kColumnBlock = 64;

SpectralResult make_result(SpectralProblem problem, double beta, const BoundaryOperators& ops,
                           const Eigen::MatrixXd& A, int count) {
    if (count < 1) throw std::invalid_argument("eigenvalue count must be positive");
    SpectralResult res;
    res.problem = problem;
    res.beta = beta;
    res.mesh_h = ops.mesh_h;
    const GeneralizedEigenpairs pairs = solve_generalized_symmetric(A, ops.boundary_mass);
    Eigen::Index keep = count;
    if (keep > pairs.values.size()) {
        res.warnings.push_back("requested " + std::to_string(count) + " eigenvalues but only " +
                               std::to_string(pairs.values.size()) + " boundary dofs exist; clamped");
        keep = pairs.values.size();
    }
    res.eigenvalues = pairs.values.head(keep);
    res.eigenvectors = pairs.vectors.leftCols(keep);
    res.multiplicity_groups = cluster_multiplicities(res.eigenvalues);
    return res;
}

}  // namespace

std::string to_string(SpectralProblem problem) {
    switch (problem) {
        case SpectralProblem::steklov: return "steklov";
        case SpectralProblem::wentzell: return "wentzell";
        case SpectralProblem::boundary_laplacian: return "boundary_laplacian";
    }
    return "unknown";
}

int SpectralResult::first_nonzero_group() const {
    if (eigenvalues.size() == 0) throw SpectralError("empty spectrum");
    const double threshold = 1e-6 * eigenvalues.cwiseAbs().maxCoeff();
    for (std::size_t g = 0; g < multiplicity_groups.size(); ++g) {
        if (eigenvalues[multiplicity_groups[g].front()] > threshold) return static_cast<int>(g);
    }
    throw SpectralError("spectrum has no nonzero eigenvalue; request more eigenvalues");
}

double SpectralResult::first_nonzero() const {
    return eigenvalues[multiplicity_groups[first_nonzero_group()].front()];
}

int SpectralResult::first_nonzero_multiplicity() const {
    return static_cast<int>(multiplicity_groups[first_nonzero_group()].size());
}

Eigen::MatrixXd dtn_reduce(const SparseSymMatrix& stiffness, const DofPartition& partition) {
    const InteriorSolver solver(stiffness, partition);
    Eigen::MatrixXd S = stiffness.dense_block(partition.boundary, partition.boundary);
    const SparseMatrix& kib = solver.coupling_block();
    const Eigen::Index nb = S.rows();
    if (kib.rows() == 0) return S;
    // Column blocks keep the dense interior solutions small on fine meshes.
    for (Eigen::Index c0 = 0; c0 < nb; c0 += kColumnBlock) {
        const Eigen::Index w = std::min(kColumnBlock, nb - c0);
        const Eigen::MatrixXd rhs = Eigen::MatrixXd(kib.middleCols(c0, w));
        const Eigen::MatrixXd x = solver.solve_interior(rhs);
        S.middleCols(c0, w).noalias() -= kib.transpose() * x;
    }
    return 0.5 * (S + S.transpose());
}

BoundaryOperators boundary_operators(const TriangleMesh& mesh) {
    const DofPartition part = make_partition(mesh);
    BoundaryOperators ops;
    ops.dtn = dtn_reduce(assemble_domain_stiffness(mesh), part);
    ops.boundary_stiffness = assemble_boundary_stiffness(mesh).dense_block(part.boundary, part.boundary);
    ops.boundary_mass = assemble_boundary_mass(mesh).dense_block(part.boundary, part.boundary);
    ops.mesh_h = mesh.h;
    return ops;
}

SpectralResult steklov_spectrum(const BoundaryOperators& ops, int count) {
    return make_result(SpectralProblem::steklov, 0.0, ops, ops.dtn, count);
}

SpectralResult steklov_spectrum(const TriangleMesh& mesh, int count) {
    return steklov_spectrum(boundary_operators(mesh), count);
}

SpectralResult wentzell_spectrum(const BoundaryOperators& ops, double beta, int count) {
    if (!(beta >= 0.0)) throw std::invalid_argument("wentzell_spectrum: beta must be nonnegative, got " + format_number(beta));
    return make_result(SpectralProblem::wentzell, beta, ops, ops.dtn + beta * ops.boundary_stiffness, count);
}

SpectralResult wentzell_spectrum(const TriangleMesh& mesh, double beta, int count) {
    if (!(beta >= 0.0)) throw std::invalid_argument("wentzell_spectrum: beta must be nonnegative, got " + format_number(beta));
    return wentzell_spectrum(boundary_operators(mesh), beta, count);
}

SpectralResult boundary_eta1(const BoundaryOperators& ops, int count) {
    return make_result(SpectralProblem::boundary_laplacian, 0.0, ops, ops.boundary_stiffness, count);
}

SpectralResult boundary_eta1(const TriangleMesh& mesh, int count) {
    const DofPartition part = make_partition(mesh);
    BoundaryOperators ops;
    ops.boundary_stiffness = assemble_boundary_stiffness(mesh).dense_block(part.boundary, part.boundary);
    ops.boundary_mass = assemble_boundary_mass(mesh).dense_block(part.boundary, part.boundary);
    ops.mesh_h = mesh.h;
    return boundary_eta1(ops, count);
}

double closed_form_eta1(double perimeter) {
    if (!(perimeter > 0.0)) throw std::invalid_argument("closed_form_eta1: perimeter must be positive");
    const double k = 2.0 * std::numbers::pi / perimeter;
    return k * k;
}

double wentzell_rayleigh_quotient(const BoundaryOperators& ops, double beta, const Eigen::VectorXd& z) {
    const double num = z.dot(ops.dtn * z) + beta * z.dot(ops.boundary_stiffness * z);
    return num / z.dot(ops.boundary_mass * z);
}

std::string to_json(const SpectralResult& result, int digits) {
    nlohmann::ordered_json j;
    j["problem"] = to_string(result.problem);
    if (result.problem == SpectralProblem::wentzell) j["beta"] = round_significant(result.beta, digits);
    j["h"] = round_significant(result.mesh_h, digits);
    auto values = nlohmann::ordered_json::array();
    for (double v : result.eigenvalues) values.push_back(round_significant(v, digits));
    j["eigenvalues"] = values;
    j["multiplicity_groups"] = result.multiplicity_groups;
    j["warnings"] = result.warnings;
    return j.dump(2);
}

}  // namespace wentzell
