#include "wentzell/fem.hpp"

namespace wentzell {

namespace {

SparseMatrix extract_block(const SparseMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<int> row_pos(static_cast<std::size_t>(m.rows()), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = static_cast<int>(r);
    std::vector<Eigen::Triplet<double>> trips;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (SparseMatrix::InnerIterator it(m, cols[c]); it; ++it) {
            const int r = row_pos[it.row()];
            if (r >= 0) trips.emplace_back(r, static_cast<int>(c), it.value());
        }
    }
    SparseMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    out.setFromTriplets(trips.begin(), trips.end());
    out.makeCompressed();
    return out;
}

}  // namespace

InteriorSolver::InteriorSolver(const SparseSymMatrix& stiffness, DofPartition partition)
    : partition_(std::move(partition)) {
    k_ii_ = extract_block(stiffness.matrix(), partition_.interior, partition_.interior);
    k_ib_ = extract_block(stiffness.matrix(), partition_.interior, partition_.boundary);
    auto factor = std::make_shared<Eigen::SimplicialLDLT<SparseMatrix>>();
    if (k_ii_.rows() > 0) {
        factor->compute(k_ii_);
        if (factor->info() != Eigen::Success) throw AssemblyError("singular interior stiffness block");
        if ((factor->vectorD().array() <= 0.0).any()) {
            throw AssemblyError("interior stiffness block is not positive definite");
        }
    }
    factor_ = std::move(factor);
}

Eigen::VectorXd InteriorSolver::solve_interior(const Eigen::VectorXd& rhs) const {
    if (k_ii_.rows() == 0) return Eigen::VectorXd();
    return factor_->solve(rhs);
}

Eigen::MatrixXd InteriorSolver::solve_interior(const Eigen::MatrixXd& rhs) const {
    if (k_ii_.rows() == 0) return Eigen::MatrixXd(0, rhs.cols());
    return factor_->solve(rhs);
}

Eigen::VectorXd InteriorSolver::extend(const Eigen::VectorXd& boundary_values) const {
    const auto nb = static_cast<Eigen::Index>(partition_.boundary.size());
    if (boundary_values.size() != nb) {
        throw std::invalid_argument("extend: expected " + std::to_string(nb) + " boundary values, got " +
                                    std::to_string(boundary_values.size()));
    }
    const Eigen::VectorXd interior = solve_interior(Eigen::VectorXd(-(k_ib_ * boundary_values)));
    Eigen::VectorXd f(static_cast<Eigen::Index>(partition_.boundary.size() + partition_.interior.size()));
    for (Eigen::Index i = 0; i < nb; ++i) f[partition_.boundary[i]] = boundary_values[i];
    for (Eigen::Index i = 0; i < interior.size(); ++i) f[partition_.interior[i]] = interior[i];
    return f;
}

Eigen::VectorXd harmonic_extension(const TriangleMesh& mesh, const Eigen::VectorXd& boundary_values) {
    const InteriorSolver solver(assemble_domain_stiffness(mesh), make_partition(mesh));
    return solver.extend(boundary_values);
}

NeumannPoissonResult neumann_poisson_solve(const TriangleMesh& mesh, const Eigen::VectorXd& rhs_nodal) {
    const auto n = static_cast<Eigen::Index>(mesh.vertices.size());
    if (rhs_nodal.size() != n) throw std::invalid_argument("neumann_poisson_solve: rhs size mismatch");
    const SparseSymMatrix K = assemble_domain_stiffness(mesh);
    const SparseSymMatrix M = assemble_domain_mass(mesh);
    const SparseSymMatrix Mb = assemble_boundary_mass(mesh);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

    NeumannPoissonResult res;
    const double area = M.quadratic_form(ones);
    res.mean_correction = M.bilinear_form(ones, rhs_nodal) / area;
    const Eigen::VectorXd load = -M.apply(rhs_nodal - res.mean_correction * ones);

    // Pin vertex 0; compatibility of the load makes the dropped equation hold as well.
    std::vector<int> free;
    for (int i = 1; i < n; ++i) free.push_back(i);
    const SparseMatrix K_ff = extract_block(K.matrix(), free, free);
    Eigen::SimplicialLDLT<SparseMatrix> factor(K_ff);
    if (factor.info() != Eigen::Success) throw AssemblyError("neumann_poisson_solve: singular reduced stiffness");
    Eigen::VectorXd b_free(static_cast<Eigen::Index>(free.size()));
    for (std::size_t i = 0; i < free.size(); ++i) b_free[static_cast<Eigen::Index>(i)] = load[free[i]];
    const Eigen::VectorXd g_free = factor.solve(b_free);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < free.size(); ++i) g[free[i]] = g_free[static_cast<Eigen::Index>(i)];

    const double boundary_mean = Mb.bilinear_form(ones, g) / Mb.quadratic_form(ones);
    g.array() -= boundary_mean;
    res.residual = (K.apply(g) - load).cwiseAbs().maxCoeff();
    res.solution = std::move(g);
    return res;
}

}  // namespace wentzell
