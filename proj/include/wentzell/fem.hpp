#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "wentzell/geometry.hpp"

namespace wentzell {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Symmetric matrix stored in full compressed-column form.
class SparseSymMatrix {
public:
    SparseSymMatrix() = default;
    explicit SparseSymMatrix(SparseMatrix m);

    Eigen::Index dimension() const { return m_.rows(); }
    const SparseMatrix& matrix() const { return m_; }

    double quadratic_form(const Eigen::VectorXd& u) const { return u.dot(m_ * u); }
    double bilinear_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const { return u.dot(m_ * v); }
    Eigen::VectorXd apply(const Eigen::VectorXd& u) const { return m_ * u; }

    // Dense submatrix on the given row/column index sets.
    Eigen::MatrixXd dense_block(const std::vector<int>& rows, const std::vector<int>& cols) const;

    // `row col value` per line, upper triangle included, for debugging.
    std::string to_coordinate_text() const;

private:
    SparseMatrix m_;
};

struct DofPartition {
    std::vector<int> interior;
    std::vector<int> boundary;  // boundary_loop order
};

DofPartition make_partition(const TriangleMesh& mesh);

// Raised when assembly meets a degenerate triangle or an invalid boundary.
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SparseSymMatrix assemble_domain_stiffness(const TriangleMesh& mesh);
SparseSymMatrix assemble_domain_mass(const TriangleMesh& mesh);
SparseSymMatrix assemble_boundary_mass(const TriangleMesh& mesh);
SparseSymMatrix assemble_boundary_stiffness(const TriangleMesh& mesh);

// Factorization of the interior block K_ii of the domain stiffness matrix.
// Immutable after construction.
class InteriorSolver {
public:
    InteriorSolver(const SparseSymMatrix& stiffness, DofPartition partition);

    const DofPartition& partition() const { return partition_; }
    const SparseMatrix& interior_block() const { return k_ii_; }
    const SparseMatrix& coupling_block() const { return k_ib_; }  // rows interior, cols boundary

    Eigen::VectorXd solve_interior(const Eigen::VectorXd& rhs) const;
    Eigen::MatrixXd solve_interior(const Eigen::MatrixXd& rhs) const;

    // Full nodal vector of the discrete harmonic function with the given trace.
    Eigen::VectorXd extend(const Eigen::VectorXd& boundary_values) const;

private:
    DofPartition partition_;
    SparseMatrix k_ii_;
    SparseMatrix k_ib_;
    std::shared_ptr<const Eigen::SimplicialLDLT<SparseMatrix>> factor_;
};

Eigen::VectorXd harmonic_extension(const TriangleMesh& mesh, const Eigen::VectorXd& boundary_values);

struct NeumannPoissonResult {
    Eigen::VectorXd solution;
    double mean_correction = 0.0;  // mean of the right-hand side removed for compatibility
    double residual = 0.0;         // max-norm of K*g - b over all rows
};

// Weak solution of  Lap g = rhs  with zero Neumann data, normalized so that
// the boundary integral of g vanishes.
NeumannPoissonResult neumann_poisson_solve(const TriangleMesh& mesh, const Eigen::VectorXd& rhs_nodal);

// Nodal interpolant of a function of position.
template <class F>
Eigen::VectorXd interpolate(const TriangleMesh& mesh, F&& f) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(mesh.vertices.size()));
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) out[static_cast<Eigen::Index>(i)] = f(mesh.vertices[i]);
    return out;
}

}  // namespace wentzell
