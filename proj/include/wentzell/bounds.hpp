#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wentzell/ballspec.hpp"
#include "wentzell/geometry.hpp"
#include "wentzell/spectral.hpp"

namespace wentzell {

struct ProblemParams {
    int n = 2;
    double beta = 1.0;
    double tau = 1.0;
    double kappa = 0.0;   // Ricci lower bound magnitude for the Steklov and tau-tone bounds
    double kappa0 = 0.0;  // Ricci lower bound magnitude for the curvature upper bound
    std::optional<double> c;  // boundary curvature lower bound; taken from the domain when absent
};

enum class Verdict { holds, violated, equality_within_tol, not_applicable };
// theorem: a proven inequality; conjecture: a probe whose failure is a finding;
// comparison: two upper bounds for the same quantity, ordered empirically.
enum class BoundKind { theorem, conjecture, comparison };
// upper: lhs <= rhs.  lower: lhs >= rhs.
enum class BoundDirection { upper, lower };

std::string to_string(Verdict v);
std::string to_string(BoundKind k);

struct BoundReport {
    std::string theorem_id;
    std::string description;
    BoundKind kind = BoundKind::theorem;
    BoundDirection direction = BoundDirection::upper;
    bool strict = false;
    std::optional<double> lhs;
    std::optional<double> rhs;
    std::optional<double> slack;  // positive when the inequality holds
    Verdict verdict = Verdict::not_applicable;
    double tolerance = 0.0;  // relative
    std::vector<std::pair<std::string, double>> inputs;
    std::string note;
};

// Classifies lhs against rhs: |slack| <= tol * max(|lhs|, |rhs|) is equality, which
// a strict inequality treats as violated.
BoundReport make_report(std::string id, std::string description, BoundKind kind, BoundDirection direction,
                        bool strict, double lhs, double rhs, double tol);
BoundReport not_applicable_report(std::string id, std::string description, BoundKind kind,
                                  BoundDirection direction, std::string reason);

// Upper bound for the first nonzero Wentzell eigenvalue from eta_1, the Ricci bound
// kappa0 and the curvature bound c. Absent when the discriminant is negative.
std::optional<double> curvature_wentzell_upper(double eta1, double kappa0, double c, double beta, int n);
// Isoperimetric upper bound for the first nonzero Wentzell eigenvalue.
double isoperimetric_wentzell_upper(double area, double perimeter, int n, double beta);
// Strict lower bound c eta_1 / (2 eta_1 + kappa) for the first nonzero Steklov eigenvalue.
double curvature_steklov_lower(double eta1, double kappa, double c);
// Strict lower bound for the first nonzero Wentzell eigenvalue on domains with Ric >= 0.
double curvature_wentzell_lower(double c, double beta, int n);
// Conjectured lower bound (n - 1) beta c^2 + c.
double conjectured_wentzell_lower(double c, double beta, int n);
// Upper bounds for the tau-fundamental tone; the Ricci version reduces to the
// Euclidean one at kappa = 0.
std::optional<double> tau_tone_upper(double eta1, double tau, double c, int n);
std::optional<double> tau_tone_ricci_upper(double eta1, double kappa, double tau, double c, int n);
// Isoperimetric upper bounds for the first nonzero xi and zeta eigenvalues.
double xi_isoperimetric_upper(double area, double perimeter, int n);
double zeta_isoperimetric_upper(double area, double perimeter, int n, double eta1);

// eta_1 >= (n - 1) c^2, with equality exactly for balls.
BoundReport eta1_curvature_check(double eta1, double c, int n, double tol = 1e-3);

// Both sides of Reilly's identity for f on the unit ball of R^n (Ric = 0, H = 1),
// exactly, as multiples of |S^{n-1}|.
struct ReillySides {
    Rational lhs;  // int_B (Lap f)^2 - |Hess f|^2
    Rational rhs;  // int_S ((n - 1) h + 2 Lap_S z) h + |grad_S z|^2, h = df/dr, z = f on S
};
ReillySides reilly_sides(const Polynomial& f);
// |LHS - RHS| on the unit disk centered at the origin; rejects other domains.
double reilly_residual(const Polynomial& f, const DomainSpec& disk);

struct DomainQuantities {
    double p1 = 0.0;
    double lambda1 = 0.0;  // first nonzero Wentzell eigenvalue at params.beta
    int lambda1_multiplicity = 0;
    double eta1_numeric = 0.0;
    double eta1_closed = 0.0;
    std::optional<double> c;
    double area = 0.0;
    double perimeter = 0.0;
    XiBounds xi;
    double mesh_h = 0.0;
};

struct VerifyResult {
    DomainQuantities quantities;
    std::vector<BoundReport> reports;
    std::vector<std::string> warnings;

    // True when some proven inequality came out violated.
    bool any_theorem_violated() const;
};

// Computes p_1, lambda_1, eta_1 and the xi construction on the mesh and evaluates every
// applicable bound. Area and perimeter come from the domain's curve; the curvature
// bound from params.c or else the curve.
VerifyResult verify_domain(const DomainSpec& spec, const TriangleMesh& mesh, const ProblemParams& params,
                           double tol = 1e-3);

// Report list as JSON, and as CSV with columns theorem,lhs,rhs,slack,verdict.
std::string reports_json(const std::vector<BoundReport>& reports, int digits = 12);
std::string reports_csv(const std::vector<BoundReport>& reports, int digits = 12);

}  // namespace wentzell
