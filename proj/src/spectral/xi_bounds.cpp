#include <algorithm>
#include <cmath>

#include "wentzell/format.hpp"
#include "wentzell/spectral.hpp"

namespace wentzell {

XiBounds xi1_upper_bounds(const TriangleMesh& mesh) {
    const SparseSymMatrix M = assemble_domain_mass(mesh);
    const SparseSymMatrix Mb = assemble_boundary_mass(mesh);
    const SparseSymMatrix Kb = assemble_boundary_stiffness(mesh);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(M.dimension());
    const double area = M.quadratic_form(ones);
    const double perimeter = Mb.quadratic_form(ones);

    XiBounds out;
    const std::array<Eigen::VectorXd, 2> coords = {interpolate(mesh, [](Vec2 p) { return p.x; }),
                                                   interpolate(mesh, [](Vec2 p) { return p.y; })};
    const double moment_x = M.bilinear_form(ones, coords[0]);
    const double moment_y = M.bilinear_form(ones, coords[1]);
    out.normalization_residual = std::hypot(moment_x, moment_y);
    const double scale = area * std::sqrt(area);
    if (out.normalization_residual > 1e-8 * scale) {
        out.warnings.push_back("domain is not centered at its centroid: |int x| = " +
                               format_number(out.normalization_residual));
    }

    double second_moment = 0.0;
    for (int i = 0; i < 2; ++i) {
        const NeumannPoissonResult sol = neumann_poisson_solve(mesh, coords[i]);
        const Eigen::VectorXd centered = coords[i].array() - sol.mean_correction;
        const double num = M.quadratic_form(centered);
        second_moment += num;
        out.per_coordinate[i] = num / Mb.quadratic_form(sol.solution);
        out.zeta_per_coordinate[i] = num / Kb.quadratic_form(sol.solution);
        out.mean_corrections[i] = sol.mean_correction;
        out.solve_residual = std::max(out.solve_residual, sol.residual);
    }
    out.aggregate = perimeter / second_moment;
    out.bound = std::min({out.per_coordinate[0], out.per_coordinate[1], out.aggregate});
    return out;
}

}  // namespace wentzell
