#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wentzell/fem.hpp"

namespace wentzell {

// Raised when a dense eigenproblem cannot be set up or solved.
class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneralizedEigenpairs {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns, B-orthonormal
};

// All pairs of A v = lambda B v for symmetric A and symmetric positive definite B.
GeneralizedEigenpairs solve_generalized_symmetric(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

// Groups consecutive ascending values whose gap is below rel_gap times their magnitude.
std::vector<std::vector<int>> cluster_multiplicities(const Eigen::VectorXd& values, double rel_gap = 1e-6);

// Discrete Dirichlet-to-Neumann matrix K_bb - K_bi K_ii^{-1} K_ib on the boundary dofs.
Eigen::MatrixXd dtn_reduce(const SparseSymMatrix& stiffness, const DofPartition& partition);

// Dense boundary blocks shared by the Steklov, Wentzell and boundary Laplacian problems.
struct BoundaryOperators {
    Eigen::MatrixXd dtn;                 // S
    Eigen::MatrixXd boundary_stiffness;  // K_d restricted to boundary dofs
    Eigen::MatrixXd boundary_mass;       // M_d restricted to boundary dofs
    double mesh_h = 0.0;
};

BoundaryOperators boundary_operators(const TriangleMesh& mesh);

enum class SpectralProblem { steklov, wentzell, boundary_laplacian };

std::string to_string(SpectralProblem problem);

struct SpectralResult {
    SpectralProblem problem = SpectralProblem::steklov;
    double beta = 0.0;
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // boundary traces in boundary_loop order, one per column
    double mesh_h = 0.0;
    std::vector<std::vector<int>> multiplicity_groups;
    std::vector<std::string> warnings;

    // Index into multiplicity_groups of the first cluster above 1e-6 * max|lambda|.
    int first_nonzero_group() const;
    // Smallest eigenvalue of that cluster.
    double first_nonzero() const;
    int first_nonzero_multiplicity() const;
};

SpectralResult steklov_spectrum(const BoundaryOperators& ops, int count);
SpectralResult steklov_spectrum(const TriangleMesh& mesh, int count);
// Rejects beta < 0.
SpectralResult wentzell_spectrum(const BoundaryOperators& ops, double beta, int count);
SpectralResult wentzell_spectrum(const TriangleMesh& mesh, double beta, int count);
SpectralResult boundary_eta1(const BoundaryOperators& ops, int count = 8);
SpectralResult boundary_eta1(const TriangleMesh& mesh, int count = 8);

// First nonzero eigenvalue of the Laplacian on a closed curve of length L.
double closed_form_eta1(double perimeter);

// Rayleigh quotient of the Wentzell form on a boundary trace, from the raw matrices.
double wentzell_rayleigh_quotient(const BoundaryOperators& ops, double beta, const Eigen::VectorXd& z);

// JSON object with problem, beta, h, eigenvalues and multiplicity groups;
// numbers rounded to `digits` significant digits.
std::string to_json(const SpectralResult& result, int digits = 12);

struct XiBounds {
    std::array<double, 2> per_coordinate{};  // int x_i^2 / int_d g_i^2
    double aggregate = 0.0;                  // |dOmega| / int rho^2
    double bound = 0.0;                      // minimum of the above
    // Upper bounds for the first nonzero eigenvalue of the zeta problem from the same
    // test functions: int x_i^2 / int_d |grad g_i|^2.
    std::array<double, 2> zeta_per_coordinate{};
    std::array<double, 2> mean_corrections{};
    double normalization_residual = 0.0;  // |int_Omega x| after centering
    double solve_residual = 0.0;
    std::vector<std::string> warnings;
};

// Expects a mesh centered with OriginMode::domain_centroid; warns otherwise.
XiBounds xi1_upper_bounds(const TriangleMesh& mesh);

}  // namespace wentzell
