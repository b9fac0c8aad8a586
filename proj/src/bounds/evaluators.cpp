#include <cmath>
#include <stdexcept>

#include "wentzell/bounds.hpp"
#include "wentzell/format.hpp"

namespace wentzell {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_dimension(int n) { require(n >= 2, "dimension must be >= 2"); }

// (|Omega| / omega_n)^{p/n}, the p-th power of the radius of the ball with the same volume.
double equal_volume_radius_pow(double area, int n, double p) {
    return std::pow(area / unit_ball_volume(n), p / n);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::equality_within_tol: return "equality_within_tol";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::theorem: return "theorem";
        case BoundKind::conjecture: return "conjecture";
        case BoundKind::comparison: return "comparison";
    }
    return "unknown";
}

BoundReport make_report(std::string id, std::string description, BoundKind kind, BoundDirection direction,
                        bool strict, double lhs, double rhs, double tol) {
    BoundReport r;
    r.theorem_id = std::move(id);
    r.description = std::move(description);
    r.kind = kind;
    r.direction = direction;
    r.strict = strict;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    const double slack = direction == BoundDirection::upper ? rhs - lhs : lhs - rhs;
    r.slack = slack;
    const double band = tol * std::max(std::abs(lhs), std::abs(rhs));
    if (!std::isfinite(slack)) {
        r.verdict = Verdict::not_applicable;
        r.note = "non-finite value";
    } else if (slack > band) {
        r.verdict = Verdict::holds;
    } else if (slack < -band) {
        r.verdict = Verdict::violated;
    } else if (strict) {
        r.verdict = Verdict::violated;
        r.note = "strict inequality attained within tolerance";
    } else {
        r.verdict = Verdict::equality_within_tol;
    }
    return r;
}

BoundReport not_applicable_report(std::string id, std::string description, BoundKind kind,
                                  BoundDirection direction, std::string reason) {
    BoundReport r;
    r.theorem_id = std::move(id);
    r.description = std::move(description);
    r.kind = kind;
    r.direction = direction;
    r.verdict = Verdict::not_applicable;
    r.note = std::move(reason);
    return r;
}

std::optional<double> curvature_wentzell_upper(double eta1, double kappa0, double c, double beta, int n) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    require(eta1 > 0.0, "eta1 must be positive");
    require(beta >= 0.0, "beta must be nonnegative");
    require(kappa0 >= 0.0, "kappa0 must be nonnegative");
    const double s = 2.0 * eta1 + kappa0;
    const double disc = s * s - 4.0 * (n - 1) * eta1 * c * c;
    if (disc < 0.0) return std::nullopt;
    return beta * eta1 + (s + std::sqrt(disc)) / (2.0 * (n - 1) * c);
}

double isoperimetric_wentzell_upper(double area, double perimeter, int n, double beta) {
    require_dimension(n);
    require(area > 0.0 && perimeter > 0.0, "area and perimeter must be positive");
    require(beta >= 0.0, "beta must be nonnegative");
    return (n * area + beta * (n - 1) * perimeter) / (n * area * equal_volume_radius_pow(area, n, 1.0));
}

double curvature_steklov_lower(double eta1, double kappa, double c) {
    require(c > 0.0, "curvature bound c must be positive");
    require(eta1 > 0.0, "eta1 must be positive");
    require(kappa >= 0.0, "kappa must be nonnegative");
    return c * eta1 / (2.0 * eta1 + kappa);
}

double curvature_wentzell_lower(double c, double beta, int n) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    require(beta >= 0.0, "beta must be nonnegative");
    const double a = (n - 1) * c * beta;
    return (1.0 + a + std::sqrt(a * a + 2.0 * a)) * c / 2.0;
}

double conjectured_wentzell_lower(double c, double beta, int n) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    require(beta >= 0.0, "beta must be nonnegative");
    return (n - 1) * beta * c * c + c;
}

std::optional<double> tau_tone_upper(double eta1, double tau, double c, int n) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    require(eta1 > 0.0, "eta1 must be positive");
    require(tau >= 0.0, "tau must be nonnegative");
    const double disc = eta1 * eta1 - (n - 1) * eta1 * c * c;
    if (disc < 0.0) return std::nullopt;
    return (eta1 * eta1 + tau * (eta1 + std::sqrt(disc))) / ((n - 1) * c) - c * eta1;
}

std::optional<double> tau_tone_ricci_upper(double eta1, double kappa, double tau, double c, int n) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    require(eta1 > 0.0, "eta1 must be positive");
    require(tau >= 0.0, "tau must be nonnegative");
    require(kappa >= 0.0, "kappa must be nonnegative");
    const double s = 2.0 * eta1 + kappa;
    const double disc = s * s - 4.0 * (n - 1) * eta1 * c * c;
    if (disc < 0.0) return std::nullopt;
    return (s * s + 2.0 * tau * (s + std::sqrt(disc))) / (4.0 * (n - 1) * c) - c * eta1;
}

double xi_isoperimetric_upper(double area, double perimeter, int n) {
    require_dimension(n);
    require(area > 0.0 && perimeter > 0.0, "area and perimeter must be positive");
    return (n + 2) * perimeter / (n * area * equal_volume_radius_pow(area, n, 2.0));
}

double zeta_isoperimetric_upper(double area, double perimeter, int n, double eta1) {
    require(eta1 > 0.0, "eta1 must be positive");
    return xi_isoperimetric_upper(area, perimeter, n) / eta1;
}

BoundReport eta1_curvature_check(double eta1, double c, int n, double tol) {
    require_dimension(n);
    require(c > 0.0, "curvature bound c must be positive");
    BoundReport r = make_report("eta1_curvature", "eta_1 >= (n-1) c^2", BoundKind::theorem, BoundDirection::lower,
                                false, eta1, (n - 1) * c * c, tol);
    r.inputs = {{"eta1", eta1}, {"c", c}, {"n", n}};
    return r;
}

}  // namespace wentzell
