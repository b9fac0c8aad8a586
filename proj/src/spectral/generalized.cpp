#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "wentzell/format.hpp"
#include "wentzell/spectral.hpp"

namespace wentzell {

namespace {

// Lower Cholesky factor; on failure reports the smallest pivot met so far.
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& B) {
    const Eigen::Index n = B.rows();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    double smallest = std::numeric_limits<double>::infinity();
    Eigen::Index smallest_at = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double d = B(j, j) - L.row(j).head(j).squaredNorm();
        if (d < smallest) {
            smallest = d;
            smallest_at = j;
        }
        if (!(d > 0.0)) {
            throw SpectralError("matrix B is not positive definite: smallest pivot " + format_number(smallest) +
                                " at index " + std::to_string(smallest_at));
        }
        const double ljj = std::sqrt(d);
        L(j, j) = ljj;
        if (j + 1 < n) {
            L.col(j).tail(n - j - 1) =
                (B.col(j).tail(n - j - 1) - L.bottomRows(n - j - 1).leftCols(j) * L.row(j).head(j).transpose()) / ljj;
        }
    }
    return L;
}

}  // namespace

GeneralizedEigenpairs solve_generalized_symmetric(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
        throw SpectralError("solve_generalized_symmetric: A and B must be square of the same dimension");
    }
    GeneralizedEigenpairs out;
    if (A.rows() == 0) return out;
    const Eigen::MatrixXd L = cholesky_lower(B);
    const auto tri = L.triangularView<Eigen::Lower>();
    // C = L^{-1} A L^{-T}
    Eigen::MatrixXd C = tri.solve(A);
    C = tri.solve(C.transpose()).eval();
    C = 0.5 * (C + C.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
    if (es.info() != Eigen::Success) throw SpectralError("symmetric eigensolver did not converge");
    out.values = es.eigenvalues();
    out.vectors = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors());
    return out;
}

std::vector<std::vector<int>> cluster_multiplicities(const Eigen::VectorXd& values, double rel_gap) {
    std::vector<std::vector<int>> groups;
    const double tiny = std::numeric_limits<double>::min();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (!groups.empty()) {
            const double prev = values[groups.back().back()];
            const double scale = std::max({std::abs(prev), std::abs(values[i]), tiny});
            if (std::abs(values[i] - prev) < rel_gap * scale) {
                groups.back().push_back(static_cast<int>(i));
                continue;
            }
        }
        groups.push_back({static_cast<int>(i)});
    }
    return groups;
}

}  // namespace wentzell
