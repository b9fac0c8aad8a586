#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wentzell/polynomial.hpp"

namespace wentzell {

// Homogeneous polynomial of degree k with identically zero Laplacian.
class HarmonicPolynomial {
public:
    // Throws std::invalid_argument unless p is homogeneous of degree k and harmonic.
    HarmonicPolynomial(Polynomial p, int k);

    const Polynomial& polynomial() const { return p_; }
    int degree() const { return k_; }
    int dimension() const { return p_.dimension(); }

private:
    Polynomial p_;
    int k_;
};

// Dimension of the space of harmonic homogeneous polynomials of degree k in n variables.
// Throws std::overflow_error when the count does not fit in 64 bits.
long long mu(int n, int k);

// Nullspace basis of the Laplacian on degree-k homogeneous polynomials, in RREF order.
std::vector<HarmonicPolynomial> harmonic_basis(int n, int k);

// Monomial integrals over the unit sphere S^{n-1} and the unit ball, as multiples of |S^{n-1}|.
Rational sphere_moment(const Exponent& e);
Rational ball_moment(const Exponent& e);
Rational integrate_sphere(const Polynomial& p);
Rational integrate_ball(const Polynomial& p);

// Normal form modulo |x|^2 - 1: every term has exponent at most 1 in the last variable.
// Two polynomials agree on the unit sphere iff their normal forms are equal.
Polynomial reduce_on_sphere(const Polynomial& p);
// Polynomial whose restriction to the unit sphere is the sphere Laplacian of p restricted.
Polynomial sphere_laplacian(const Polynomial& p);
// Polynomial whose restriction to the unit sphere is |grad_S p|^2.
Polynomial tangential_gradient_squared(const Polynomial& p);

enum class BallProblem { wentzell, steklov, xi, zeta, tau_tone };

std::string to_string(BallProblem problem);
BallProblem parse_ball_problem(const std::string& name);

struct BallParams {
    Rational beta = 0;
    Rational radius = 1;
    Rational tau = 1;
};

// Exact k-th eigenvalue on the ball of the given radius in R^n. For tau_tone only
// k = 0 and the fundamental tone k = 1 are available.
Rational ball_eigenvalue(BallProblem problem, int n, int k, const BallParams& params = {});

struct BallSpectrumEntry {
    BallProblem problem;
    int n;
    int k;
    Rational eigenvalue;
    long long multiplicity;
};

std::vector<BallSpectrumEntry> ball_table(BallProblem problem, int n, int kmax, const BallParams& params = {});
// Header "problem,n,k,eigenvalue,multiplicity"; eigenvalues as p/q.
std::string ball_table_csv(const std::vector<BallSpectrumEntry>& rows);

// -2 phi + k (|x|^2 - 1) phi
Polynomial psi_eigenfunction(const HarmonicPolynomial& phi);

// Residual of n L^2 z + 2 L^3 z = xi_k z (xi) or 2 L^3 w + n L^2 w = zeta_k (L^2 w + (n-2) L w)
// (zeta) with L the Euler operator and k the degree of z. Rejects non-harmonic or
// non-homogeneous input and problems other than xi and zeta.
Polynomial check_relation(const Polynomial& z, BallProblem problem);

struct BoundaryResiduals {
    Polynomial bilaplacian;  // Lap^2 psi in the ball
    Polynomial neumann;      // Lambda psi on the sphere, reduced
    Polynomial natural;      // problem-specific third condition on the sphere, reduced

    bool all_zero() const { return bilaplacian.is_zero() && neumann.is_zero() && natural.is_zero(); }
    std::string describe() const;
};

// Boundary conditions of the xi or zeta problem on the unit ball with eigenvalue k-th value.
BoundaryResiduals verify_boundary_conditions(const Polynomial& psi, BallProblem problem, int n, int k);

// int_B (Lap psi)^2 / int_S psi^2 (xi) or / int_S |grad_S psi|^2 (zeta), exactly.
Rational exact_rayleigh(const Polynomial& psi, BallProblem problem, int n);

// u = g + |x|^2 h with g, h harmonic; rejects u with nonzero bilaplacian.
std::pair<Polynomial, Polynomial> biharmonic_split(const Polynomial& u);

}  // namespace wentzell
