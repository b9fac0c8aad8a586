#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "wentzell/spectral.hpp"

using namespace wentzell;

namespace {

constexpr double pi = std::numbers::pi;

struct DiskFixture {
    TriangleMesh mesh = generate_mesh(DomainSpec::disk(1.0), 0.05);
    BoundaryOperators ops = boundary_operators(mesh);
};

const DiskFixture& disk() {
    static const DiskFixture f;
    return f;
}

Eigen::VectorXd cos_trace(const TriangleMesh& m) {
    Eigen::VectorXd z(static_cast<Eigen::Index>(m.boundary_loop.size()));
    for (std::size_t i = 0; i < m.boundary_loop.size(); ++i) {
        const Vec2 p = m.vertices[m.boundary_loop[i]];
        z[static_cast<Eigen::Index>(i)] = std::cos(std::atan2(p.y, p.x));
    }
    return z;
}

}  // namespace

TEST(Generalized, IdentityPair) {
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(5, 5);
    const auto r = solve_generalized_symmetric(I, I);
    for (double v : r.values) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(Generalized, DiagonalRatios) {
    const Eigen::MatrixXd A = Eigen::Vector2d(1.0, 4.0).asDiagonal();
    const Eigen::MatrixXd B = Eigen::Vector2d(1.0, 2.0).asDiagonal();
    const auto r = solve_generalized_symmetric(A, B);
    EXPECT_NEAR(r.values[0], 1.0, 1e-15);
    EXPECT_NEAR(r.values[1], 2.0, 1e-15);
}

TEST(Generalized, RandomPairResidualAndOrthonormality) {
    std::mt19937 rng(7);
    std::normal_distribution<double> nd;
    const int n = 50;
    Eigen::MatrixXd X(n, n), Y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            X(i, j) = nd(rng);
            Y(i, j) = nd(rng);
        }
    const Eigen::MatrixXd A = X + X.transpose();
    const Eigen::MatrixXd B = Y * Y.transpose() + n * Eigen::MatrixXd::Identity(n, n);
    const auto r = solve_generalized_symmetric(A, B);
    const double na = A.norm(), nb = B.norm();
    for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd v = r.vectors.col(k);
        const double res = (A * v - r.values[k] * B * v).norm();
        EXPECT_LT(res, 1e-8 * (na + std::abs(r.values[k]) * nb));
        if (k > 0) {
            EXPECT_LE(r.values[k - 1], r.values[k]);
        }
    }
    const Eigen::MatrixXd G = r.vectors.transpose() * B * r.vectors;
    EXPECT_LT((G - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Generalized, IndefiniteBNamesPivot) {
    const Eigen::MatrixXd A = Eigen::MatrixXd::Identity(3, 3);
    const Eigen::MatrixXd B = Eigen::Vector3d(1.0, -2.0, 1.0).asDiagonal();
    try {
        solve_generalized_symmetric(A, B);
        FAIL();
    } catch (const SpectralError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("smallest pivot -2"), std::string::npos) << msg;
        EXPECT_NE(msg.find("index 1"), std::string::npos) << msg;
    }
}

TEST(Clusters, GroupsByRelativeGap) {
    Eigen::VectorXd v(6);
    v << 1e-14, 1.0, 1.0 + 1e-9, 2.0, 2.1, 2.1;
    const auto g = cluster_multiplicities(v);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[1], (std::vector<int>{1, 2}));
    EXPECT_EQ(g[3], (std::vector<int>{4, 5}));
    EXPECT_EQ(cluster_multiplicities(v, 0.2).size(), 3u);
}

TEST(Dtn, ConstantsAndCosineEnergy) {
    const auto& d = disk();
    const Eigen::Index nb = d.ops.dtn.rows();
    EXPECT_LT((d.ops.dtn * Eigen::VectorXd::Ones(nb)).cwiseAbs().maxCoeff(), 1e-11);
    const Eigen::VectorXd z = cos_trace(d.mesh);
    EXPECT_NEAR(z.dot(d.ops.dtn * z), pi, 5e-3 * pi);
}

TEST(Dtn, MatchesExplicitExtension) {
    const auto& d = disk();
    Eigen::VectorXd z(d.ops.dtn.rows());
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = std::sin(0.37 * static_cast<double>(i * i));
    const Eigen::VectorXd f = harmonic_extension(d.mesh, z);
    const double energy = assemble_domain_stiffness(d.mesh).quadratic_form(f);
    EXPECT_NEAR(z.dot(d.ops.dtn * z), energy, 1e-12 * energy);
    EXPECT_LT((d.ops.dtn - d.ops.dtn.transpose()).cwiseAbs().maxCoeff(), 1e-14 * d.ops.dtn.norm());
}

TEST(Steklov, UnitDiskIntegersWithDoublets) {
    const auto r = steklov_spectrum(disk().ops, 7);
    EXPECT_NEAR(r.eigenvalues[0], 0.0, 1e-10);
    ASSERT_EQ(r.multiplicity_groups.size(), 4u);
    for (int k = 1; k <= 3; ++k) {
        ASSERT_EQ(r.multiplicity_groups[k].size(), 2u);
        EXPECT_NEAR(r.eigenvalues[r.multiplicity_groups[k][0]], k, 0.01 * k);
    }
    const Eigen::VectorXd v0 = r.eigenvectors.col(0);
    EXPECT_LT((v0.array() - v0[0]).abs().maxCoeff(), 1e-8 * std::abs(v0[0]));
    const Eigen::MatrixXd G = r.eigenvectors.transpose() * disk().ops.boundary_mass * r.eigenvectors;
    EXPECT_LT((G - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Steklov, RadiusScaling) {
    const auto r = steklov_spectrum(generate_mesh(DomainSpec::disk(2.0), 0.1), 4);
    EXPECT_NEAR(r.first_nonzero(), 0.5, 0.005);
}

TEST(Steklov, CountClampedWithWarning) {
    const auto m = generate_mesh(DomainSpec::disk(1.0), 0.5);
    const auto r = steklov_spectrum(m, 1000);
    EXPECT_EQ(r.eigenvalues.size(), static_cast<Eigen::Index>(m.boundary_loop.size()));
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("clamped"), std::string::npos);
}

TEST(Wentzell, DiskHalfBeta) {
    const auto r = wentzell_spectrum(disk().ops, 0.5, 6);
    EXPECT_NEAR(r.first_nonzero(), 1.5, 0.015);
    EXPECT_EQ(r.first_nonzero_multiplicity(), 2);
}

TEST(Wentzell, BetaZeroIsSteklov) {
    const auto a = wentzell_spectrum(disk().ops, 0.0, 10);
    const auto b = steklov_spectrum(disk().ops, 10);
    EXPECT_LT((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Wentzell, LargeBetaSecondOrder) {
    const auto r = wentzell_spectrum(disk().ops, 10.0, 6);
    // k = 2: (k^2 beta + k) / R^2
    EXPECT_NEAR(r.eigenvalues[r.multiplicity_groups[2][0]], 42.0, 0.42);
}

TEST(Wentzell, NegativeBetaRejected) {
    EXPECT_THROW(wentzell_spectrum(disk().ops, -0.1, 4), std::invalid_argument);
}

TEST(Wentzell, MonotoneInBeta) {
    double prev = -1.0;
    for (double beta : {0.0, 0.1, 1.0, 10.0}) {
        const double v = wentzell_spectrum(disk().ops, beta, 4).first_nonzero();
        EXPECT_GE(v, prev);
        prev = v;
    }
}

TEST(Wentzell, RayleighConsistency) {
    const auto m = generate_mesh(DomainSpec::star(0.1, 3), 0.08);
    const auto ops = boundary_operators(m);
    const auto r = wentzell_spectrum(ops, 0.7, 8);
    for (Eigen::Index k = 1; k < r.eigenvalues.size(); ++k) {
        const double q = wentzell_rayleigh_quotient(ops, 0.7, r.eigenvectors.col(k));
        EXPECT_NEAR(q, r.eigenvalues[k], 1e-8 * r.eigenvalues[k]);
    }
}

TEST(Wentzell, SplittingInequalityDiscrete) {
    // lambda_1(beta) >= beta eta_1 + p_1 holds for the discrete forms as well.
    for (const auto& spec : {DomainSpec::ellipse(2.0, 1.0), DomainSpec::star(0.2, 3)}) {
        const auto ops = boundary_operators(generate_mesh(spec, 0.1));
        const double p1 = steklov_spectrum(ops, 4).first_nonzero();
        const double eta1 = boundary_eta1(ops).first_nonzero();
        for (double beta : {0.5, 1.0, 3.0}) {
            const double lam = wentzell_spectrum(ops, beta, 4).first_nonzero();
            EXPECT_GE(lam, (beta * eta1 + p1) * (1.0 - 1e-8)) << spec.describe();
        }
    }
}

TEST(Eta1, UnitCircle) {
    const auto r = boundary_eta1(disk().mesh);
    EXPECT_DOUBLE_EQ(closed_form_eta1(2.0 * pi), 1.0);
    EXPECT_NEAR(r.first_nonzero(), 1.0, 1e-3);
    EXPECT_EQ(r.first_nonzero_multiplicity(), 2);
}

TEST(Eta1, EllipseClosedForm) {
    const auto spec = DomainSpec::ellipse(2.0, 1.0);
    const double closed = closed_form_eta1(spec.curve_perimeter());
    EXPECT_NEAR(closed, 0.4205826, 1e-7);
    EXPECT_NEAR(boundary_eta1(generate_mesh(spec, 0.05)).first_nonzero(), closed, 0.005 * closed);
}

TEST(Eta1, SecondOrderConvergence) {
    const auto spec = DomainSpec::ellipse(2.0, 1.0);
    const double closed = closed_form_eta1(spec.curve_perimeter());
    auto m = generate_mesh(spec, 0.2);
    double prev = 0.0;
    for (int level = 0; level < 3; ++level) {
        const double err = std::abs(boundary_eta1(m).first_nonzero() - closed);
        if (level > 0) {
            EXPECT_GT(prev / err, 3.0);
        }
        prev = err;
        m = refine(m, spec);
    }
}

TEST(Json, ContainsTagsAndValues) {
    const auto r = wentzell_spectrum(disk().ops, 0.5, 3);
    const std::string j = to_json(r);
    EXPECT_NE(j.find("\"problem\": \"wentzell\""), std::string::npos);
    EXPECT_NE(j.find("\"beta\": 0.5"), std::string::npos);
    EXPECT_NE(j.find("multiplicity_groups"), std::string::npos);
}

TEST(XiBounds, UnitDiskSharp) {
    const auto m = normalize_origin(disk().mesh, OriginMode::domain_centroid);
    const auto b = xi1_upper_bounds(m);
    EXPECT_NEAR(b.per_coordinate[0], 4.0, 0.08);
    EXPECT_NEAR(b.per_coordinate[1], 4.0, 0.08);
    EXPECT_NEAR(b.aggregate, 4.0, 0.08);
    EXPECT_NEAR(b.zeta_per_coordinate[0], 4.0, 0.08);
    EXPECT_TRUE(b.warnings.empty());
    EXPECT_LT(b.solve_residual, 1e-10);
}

TEST(XiBounds, UncenteredMeshWarns) {
    const auto m = generate_mesh(DomainSpec::disk(1.0, {0.5, 0.0}), 0.1);
    const auto b = xi1_upper_bounds(m);
    ASSERT_FALSE(b.warnings.empty());
    EXPECT_NEAR(b.mean_corrections[0], 0.5, 1e-12);
}

TEST(XiBounds, ConvergesAtSecondOrderOnDisk) {
    const auto spec = DomainSpec::disk(1.0);
    auto m = generate_mesh(spec, 0.2);
    std::vector<double> errs;
    for (int level = 0; level < 3; ++level) {
        errs.push_back(std::abs(xi1_upper_bounds(normalize_origin(m, OriginMode::domain_centroid)).aggregate - 4.0));
        m = refine(m, spec);
    }
    EXPECT_GT(errs[1] / errs[2], 3.0);
}
