#include <sstream>
#include <stdexcept>

#include "wentzell/ballspec.hpp"

namespace wentzell {

namespace {

void check_problem_on_sphere(BallProblem problem) {
    if (problem != BallProblem::xi && problem != BallProblem::zeta) {
        throw std::invalid_argument("only the xi and zeta problems have fourth-order boundary conditions, got " +
                                    to_string(problem));
    }
}

}  // namespace

std::string to_string(BallProblem problem) {
    switch (problem) {
        case BallProblem::wentzell: return "wentzell";
        case BallProblem::steklov: return "steklov";
        case BallProblem::xi: return "xi";
        case BallProblem::zeta: return "zeta";
        case BallProblem::tau_tone: return "tau_tone";
    }
    return "unknown";
}

BallProblem parse_ball_problem(const std::string& name) {
    for (BallProblem p : {BallProblem::wentzell, BallProblem::steklov, BallProblem::xi, BallProblem::zeta,
                          BallProblem::tau_tone}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown ball problem '" + name + "'");
}

Rational ball_eigenvalue(BallProblem problem, int n, int k, const BallParams& params) {
    if (n < 2) throw std::invalid_argument("ball_eigenvalue: dimension must be >= 2, got " + std::to_string(n));
    if (k < 0) throw std::invalid_argument("ball_eigenvalue: order must be >= 0, got " + std::to_string(k));
    const Rational& R = params.radius;
    if (R <= 0) throw std::invalid_argument("ball_eigenvalue: radius must be positive");
    switch (problem) {
        case BallProblem::wentzell:
            if (params.beta < 0) throw std::invalid_argument("ball_eigenvalue: beta must be nonnegative");
            return (Rational(k * (k + n - 2)) * params.beta + k * R) / (R * R);
        case BallProblem::steklov:
            return Rational(k) / R;
        case BallProblem::xi:
            return Rational(k * k * (n + 2 * k)) / (R * R * R);
        case BallProblem::zeta:
            if (k == 0) return 0;
            return Rational(2 * k * k + n * k, k + n - 2) / R;
        case BallProblem::tau_tone:
            if (params.tau < 0) throw std::invalid_argument("ball_eigenvalue: tau must be nonnegative");
            if (k == 0) return 0;
            if (k == 1) return params.tau / R;
            throw std::invalid_argument("ball_eigenvalue: tau_tone is known in closed form only for k <= 1");
    }
    throw std::invalid_argument("ball_eigenvalue: unknown problem");
}

std::vector<BallSpectrumEntry> ball_table(BallProblem problem, int n, int kmax, const BallParams& params) {
    if (kmax < 0) throw std::invalid_argument("ball_table: kmax must be >= 0");
    std::vector<BallSpectrumEntry> rows;
    const int top = problem == BallProblem::tau_tone ? std::min(kmax, 1) : kmax;
    for (int k = 0; k <= top; ++k) rows.push_back({problem, n, k, ball_eigenvalue(problem, n, k, params), mu(n, k)});
    return rows;
}

std::string ball_table_csv(const std::vector<BallSpectrumEntry>& rows) {
    std::ostringstream out;
    out << "problem,n,k,eigenvalue,multiplicity\n";
    for (const auto& r : rows) {
        out << to_string(r.problem) << ',' << r.n << ',' << r.k << ',' << to_string(r.eigenvalue) << ','
            << r.multiplicity << '\n';
    }
    return out.str();
}

Polynomial psi_eigenfunction(const HarmonicPolynomial& phi) {
    const int n = phi.dimension();
    const Polynomial& p = phi.polynomial();
    const Polynomial shell = Polynomial::radius_squared(n) - Polynomial::constant(n, 1);
    return Rational(-2) * p + Rational(phi.degree()) * (shell * p);
}

Polynomial check_relation(const Polynomial& z, BallProblem problem) {
    check_problem_on_sphere(problem);
    if (!laplacian(z).is_zero()) throw std::invalid_argument("check_relation: input is not harmonic: " + z.to_string());
    const int k = std::max(z.degree(), 0);
    if (!z.is_homogeneous(k)) throw std::invalid_argument("check_relation: input is not homogeneous");
    const int n = z.dimension();
    const Rational value = ball_eigenvalue(problem, n, k);
    const Polynomial l1 = euler_apply(z, 1), l2 = euler_apply(z, 2), l3 = euler_apply(z, 3);
    if (problem == BallProblem::xi) return Rational(n) * l2 + Rational(2) * l3 - value * z;
    return Rational(2) * l3 + Rational(n) * l2 - value * (l2 + Rational(n - 2) * l1);
}

std::string BoundaryResiduals::describe() const {
    return "bilaplacian: " + bilaplacian.to_string() + "; neumann: " + neumann.to_string() +
           "; natural: " + natural.to_string();
}

BoundaryResiduals verify_boundary_conditions(const Polynomial& psi, BallProblem problem, int n, int k) {
    check_problem_on_sphere(problem);
    if (psi.dimension() != n) throw std::invalid_argument("verify_boundary_conditions: dimension mismatch");
    const Rational value = ball_eigenvalue(problem, n, k);
    const Polynomial lap = laplacian(psi);
    BoundaryResiduals r{laplacian(lap), reduce_on_sphere(euler_apply(psi, 1)), Polynomial(n)};
    if (problem == BallProblem::xi) {
        r.natural = reduce_on_sphere(euler_apply(lap, 1) + value * psi);
    } else {
        r.natural = reduce_on_sphere(euler_apply(lap, 1) - value * sphere_laplacian(psi));
    }
    return r;
}

Rational exact_rayleigh(const Polynomial& psi, BallProblem problem, int n) {
    check_problem_on_sphere(problem);
    if (psi.dimension() != n) throw std::invalid_argument("exact_rayleigh: dimension mismatch");
    if (!reduce_on_sphere(euler_apply(psi, 1)).is_zero()) {
        throw std::invalid_argument("exact_rayleigh: normal derivative does not vanish on the sphere");
    }
    const Polynomial lap = laplacian(psi);
    const Rational num = integrate_ball(lap * lap);
    const Rational den =
        problem == BallProblem::xi ? integrate_sphere(psi * psi) : integrate_sphere(tangential_gradient_squared(psi));
    if (den == 0) throw std::invalid_argument("exact_rayleigh: denominator vanishes");
    return num / den;
}

std::pair<Polynomial, Polynomial> biharmonic_split(const Polynomial& u) {
    const int n = u.dimension();
    if (!laplacian(laplacian(u)).is_zero()) throw std::invalid_argument("biharmonic_split: input is not biharmonic");
    Polynomial g(n), h(n);
    const Polynomial r2 = Polynomial::radius_squared(n);
    for (int m = 0; m <= u.degree(); ++m) {
        const Polynomial part = u.homogeneous_part(m);
        if (m < 2) {
            g += part;
            continue;
        }
        // Lap(|x|^2 h) = (2n + 4 Lambda) h for harmonic h of degree m - 2.
        const Polynomial hm = laplacian(part) * Rational(1, 2 * n + 4 * m - 8);
        g += part - r2 * hm;
        h += hm;
    }
    return {g, h};
}

}  // namespace wentzell
