#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wentzell/ballspec.hpp"

using namespace wentzell;

namespace {

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

// Midpoint-rule oracle for integrals over the unit circle.
double circle_quadrature(const Polynomial& p, int samples = 4096) {
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * (i + 0.5) / samples;
        double v = 0.0;
        for (const auto& [e, c] : p.terms()) v += static_cast<double>(c) * std::pow(std::cos(t), e[0]) * std::pow(std::sin(t), e[1]);
        sum += v;
    }
    return sum * 2.0 * std::numbers::pi / samples;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("0.5")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-1.25e1")), "-25/2");
    EXPECT_EQ(to_string(parse_rational("3/6")), "1/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_EQ(to_string(parse_rational("1e-3")), "1/1000");
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
}

TEST(Polynomial, ArithmeticAndDerivatives) {
    const Polynomial x = var(2, 0), y = var(2, 1);
    const Polynomial p = x * x * y + Rational(3) * y;
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.derivative(0), Rational(2) * x * y);
    EXPECT_EQ(p.derivative(1), x * x + Polynomial::constant(2, 3));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.evaluate({Rational(2), Rational(1, 3)}), Rational(4, 3) + 1);
    EXPECT_EQ(p.to_string(), "x^2*y + 3*y");
    EXPECT_THROW(x + var(3, 0), std::invalid_argument);
}

TEST(Euler, HomogeneousScaling) {
    const Polynomial x = var(2, 0), y = var(2, 1);
    EXPECT_EQ(euler_apply(x * x * y), Rational(3) * x * x * y);
    EXPECT_TRUE(euler_apply(Polynomial::constant(2, 5), 2).is_zero());
    EXPECT_EQ(euler_apply(x + x * x), x + Rational(2) * x * x);
    EXPECT_EQ(euler_apply(x * y, 3), Rational(8) * x * y);
}

TEST(HarmonicBasis, SmallCases) {
    const auto b21 = harmonic_basis(2, 1);
    ASSERT_EQ(b21.size(), 2u);
    const auto b20 = harmonic_basis(2, 0);
    ASSERT_EQ(b20.size(), 1u);
    EXPECT_EQ(b20[0].polynomial(), Polynomial::constant(2, 1));
    EXPECT_EQ(harmonic_basis(3, 2).size(), 5u);
}

TEST(HarmonicBasis, SizesMatchMuAndAreHarmonic) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= 5; ++k) {
            const auto basis = harmonic_basis(n, k);
            EXPECT_EQ(static_cast<long long>(basis.size()), mu(n, k)) << n << "," << k;
            for (const auto& h : basis) EXPECT_TRUE(laplacian(h.polynomial()).is_zero());
        }
    }
}

TEST(Mu, KnownValues) {
    EXPECT_EQ(mu(3, 2), 5);
    EXPECT_EQ(mu(4, 2), 9);
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(mu(2, k), 2);
    for (int n = 2; n <= 7; ++n) {
        EXPECT_EQ(mu(n, 0), 1);
        EXPECT_EQ(mu(n, 1), n);
        EXPECT_EQ(mu(n, 2), (n * n + n - 2) / 2);
    }
    EXPECT_THROW(mu(1, 2), std::invalid_argument);
}

TEST(HarmonicPolynomial, RejectsNonHarmonic) {
    const Polynomial x = var(2, 0);
    EXPECT_THROW(HarmonicPolynomial(x * x, 2), std::invalid_argument);
    EXPECT_THROW(HarmonicPolynomial(x, 2), std::invalid_argument);
}

TEST(Moments, AgainstQuadrature) {
    const Polynomial x = var(2, 0), y = var(2, 1);
    const double two_pi = 2.0 * std::numbers::pi;
    for (const Polynomial& p : {x * x, x * x * y * y, x * x * x * x, x * y, Polynomial::constant(2, 1)}) {
        EXPECT_NEAR(static_cast<double>(integrate_sphere(p)) * two_pi, circle_quadrature(p), 1e-12) << p.to_string();
    }
    // Ball: int_B x^2 = pi/4.
    EXPECT_EQ(integrate_ball(x * x) * 2, Rational(1, 4));
    // Three dimensions: int_S x^2 = 4 pi / 3 out of 4 pi.
    EXPECT_EQ(sphere_moment({2, 0, 0}), Rational(1, 3));
    EXPECT_EQ(sphere_moment({2, 2, 0}), Rational(1, 15));
    EXPECT_EQ(sphere_moment({1, 2, 0}), 0);
}

TEST(SphereReduction, NormalForm) {
    const int n = 3;
    const Polynomial r2 = Polynomial::radius_squared(n);
    const Polynomial x = var(n, 0), z = var(n, 2);
    EXPECT_EQ(reduce_on_sphere(r2), Polynomial::constant(n, 1));
    EXPECT_EQ(reduce_on_sphere(r2 * r2 * x), x);
    EXPECT_EQ(reduce_on_sphere(z * z * z), z - x * x * z - var(n, 1) * var(n, 1) * z);
    // Reduction preserves sphere integrals.
    const Polynomial p = z * z * z * z * x * x + Rational(3) * z * z;
    EXPECT_EQ(integrate_sphere(reduce_on_sphere(p)), integrate_sphere(p));
}

TEST(SphereLaplacian, SphericalHarmonicEigenvalue) {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            for (const auto& h : harmonic_basis(n, k)) {
                const Polynomial expected = Rational(-k * (k + n - 2)) * h.polynomial();
                EXPECT_EQ(reduce_on_sphere(sphere_laplacian(h.polynomial())), reduce_on_sphere(expected));
            }
        }
    }
}

TEST(BallEigenvalue, ClosedForms) {
    EXPECT_EQ(ball_eigenvalue(BallProblem::xi, 2, 1), 4);
    EXPECT_EQ(ball_eigenvalue(BallProblem::zeta, 3, 1), Rational(5, 2));
    EXPECT_EQ(ball_eigenvalue(BallProblem::zeta, 3, 2), Rational(14, 3));
    EXPECT_EQ(ball_eigenvalue(BallProblem::zeta, 2, 0), 0);
    EXPECT_EQ(ball_eigenvalue(BallProblem::wentzell, 3, 2, {Rational(1), Rational(2), Rational(1)}), Rational(5, 2));
    EXPECT_EQ(ball_eigenvalue(BallProblem::wentzell, 2, 1, {Rational(1, 2), Rational(1), Rational(1)}), Rational(3, 2));
    EXPECT_EQ(ball_eigenvalue(BallProblem::steklov, 2, 1, {0, Rational(2), 1}), Rational(1, 2));
    EXPECT_EQ(ball_eigenvalue(BallProblem::tau_tone, 2, 1, {0, Rational(2), Rational(3)}), Rational(3, 2));
    // (n + 2) / R^3 at R = 2.
    EXPECT_EQ(ball_eigenvalue(BallProblem::xi, 2, 1, {0, Rational(2), 1}), Rational(1, 2));
    EXPECT_THROW(ball_eigenvalue(BallProblem::xi, 1, 1), std::invalid_argument);
    EXPECT_THROW(ball_eigenvalue(BallProblem::xi, 2, -1), std::invalid_argument);
    EXPECT_THROW(ball_eigenvalue(BallProblem::tau_tone, 2, 2), std::invalid_argument);
}

TEST(BallEigenvalue, StrictlyIncreasing) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k < 8; ++k) {
            EXPECT_LT(ball_eigenvalue(BallProblem::xi, n, k), ball_eigenvalue(BallProblem::xi, n, k + 1));
            EXPECT_LT(ball_eigenvalue(BallProblem::zeta, n, k), ball_eigenvalue(BallProblem::zeta, n, k + 1));
        }
    }
}

TEST(BallTable, Csv) {
    const auto csv = ball_table_csv(ball_table(BallProblem::zeta, 3, 2));
    EXPECT_EQ(csv, "problem,n,k,eigenvalue,multiplicity\nzeta,3,0,0,1\nzeta,3,1,5/2,3\nzeta,3,2,14/3,5\n");
    const auto xi = ball_table(BallProblem::xi, 2, 3);
    EXPECT_EQ(xi[3].eigenvalue, 72);
}

TEST(Psi, Examples) {
    const Polynomial x = var(2, 0), y = var(2, 1);
    const auto one = harmonic_basis(2, 0)[0];
    EXPECT_EQ(psi_eigenfunction(one), Polynomial::constant(2, -2));
    const Polynomial psi = psi_eigenfunction(HarmonicPolynomial(x, 1));
    EXPECT_EQ(psi, (x * x + y * y - Polynomial::constant(2, 3)) * x);
    EXPECT_EQ(laplacian(psi), Rational(8) * x);
}

TEST(Relation, Examples) {
    const Polynomial x2 = var(2, 0), y2 = var(2, 1), x3 = var(3, 0);
    EXPECT_TRUE(check_relation(x2, BallProblem::xi).is_zero());
    EXPECT_TRUE(check_relation(x2 * y2, BallProblem::xi).is_zero());
    EXPECT_TRUE(check_relation(x3, BallProblem::zeta).is_zero());
    EXPECT_THROW(check_relation(x2 * x2, BallProblem::xi), std::invalid_argument);
    EXPECT_THROW(check_relation(x2 + x2 * y2, BallProblem::xi), std::invalid_argument);
    EXPECT_THROW(check_relation(x2, BallProblem::steklov), std::invalid_argument);
}

TEST(BoundaryConditions, XiFirstOrderPlanar) {
    const Polynomial x = var(2, 0);
    const Polynomial psi = psi_eigenfunction(HarmonicPolynomial(x, 1));
    const auto r = verify_boundary_conditions(psi, BallProblem::xi, 2, 1);
    EXPECT_TRUE(r.all_zero()) << r.describe();
    // A wrong eigenvalue leaves a visible residual.
    const auto bad = verify_boundary_conditions(psi, BallProblem::xi, 2, 2);
    EXPECT_FALSE(bad.natural.is_zero());
}

TEST(BoundaryConditions, AllBasisElementsSmallCases) {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 0; k <= 3; ++k) {
            for (const auto& phi : harmonic_basis(n, k)) {
                const Polynomial psi = psi_eigenfunction(phi);
                for (BallProblem p : {BallProblem::xi, BallProblem::zeta}) {
                    const auto r = verify_boundary_conditions(psi, p, n, k);
                    EXPECT_TRUE(r.all_zero()) << n << "," << k << ": " << r.describe();
                }
            }
        }
    }
}

TEST(Rayleigh, PlanarFirstOrder) {
    const Polynomial x = var(2, 0);
    const Polynomial psi = psi_eigenfunction(HarmonicPolynomial(x, 1));
    EXPECT_EQ(exact_rayleigh(psi, BallProblem::xi, 2), 4);
    EXPECT_EQ(exact_rayleigh(psi, BallProblem::zeta, 2), 4);
    EXPECT_EQ(exact_rayleigh(Polynomial::constant(2, -2), BallProblem::xi, 2), 0);
    EXPECT_THROW(exact_rayleigh(Polynomial::constant(2, -2), BallProblem::zeta, 2), std::invalid_argument);
    // x itself has a nonzero normal derivative on the circle.
    EXPECT_THROW(exact_rayleigh(x, BallProblem::xi, 2), std::invalid_argument);
}

TEST(Rayleigh, MatchesEigenvaluesInThreeDimensions) {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& phi : harmonic_basis(3, k)) {
            const Polynomial psi = psi_eigenfunction(phi);
            EXPECT_EQ(exact_rayleigh(psi, BallProblem::xi, 3), ball_eigenvalue(BallProblem::xi, 3, k));
            EXPECT_EQ(exact_rayleigh(psi, BallProblem::zeta, 3), ball_eigenvalue(BallProblem::zeta, 3, k));
        }
    }
}

TEST(BiharmonicSplit, RoundTrip) {
    const int n = 3;
    const Polynomial r2 = Polynomial::radius_squared(n);
    const Polynomial x = var(n, 0), y = var(n, 1), z = var(n, 2);
    const Polynomial g0 = x * y + z, h0 = x * x - z * z + Polynomial::constant(n, 2);
    const Polynomial u = g0 + r2 * h0;
    const auto [g, h] = biharmonic_split(u);
    EXPECT_EQ(g, g0);
    EXPECT_EQ(h, h0);
    EXPECT_TRUE(laplacian(g).is_zero());
    EXPECT_TRUE(laplacian(h).is_zero());
    EXPECT_EQ(g + r2 * h, u);
    for (const auto& phi : harmonic_basis(n, 2)) {
        const Polynomial psi = psi_eigenfunction(phi);
        const auto [gp, hp] = biharmonic_split(psi);
        EXPECT_EQ(gp + r2 * hp, psi);
    }
    EXPECT_THROW(biharmonic_split(r2 * r2), std::invalid_argument);
}
