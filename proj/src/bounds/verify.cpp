#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wentzell/bounds.hpp"
#include "wentzell/format.hpp"

namespace wentzell {

namespace {

constexpr int kSpectrumCount = 8;
constexpr double kPositiveCurvature = 1e-9;
// The splitting inequality holds exactly for the discrete forms (the minimum of a sum
// is at least the sum of the minima), so only round-off limits its verdict.
constexpr double kDiscreteExactTol = 1e-8;

}  // namespace

bool VerifyResult::any_theorem_violated() const {
    for (const auto& r : reports) {
        if (r.kind == BoundKind::theorem && r.verdict == Verdict::violated) return true;
    }
    return false;
}

VerifyResult verify_domain(const DomainSpec& spec, const TriangleMesh& mesh, const ProblemParams& params, double tol) {
    if (params.n != 2) throw std::invalid_argument("verify_domain: numerics run on planar domains only (n = 2)");
    if (!(params.beta >= 0.0)) throw std::invalid_argument("verify_domain: beta must be nonnegative");
    if (!(tol >= 0.0)) throw std::invalid_argument("verify_domain: tolerance must be nonnegative");
    const int n = params.n;
    const double beta = params.beta;

    VerifyResult out;
    DomainQuantities& q = out.quantities;
    const BoundaryOperators ops = boundary_operators(mesh);
    q.mesh_h = mesh.h;
    q.p1 = steklov_spectrum(ops, kSpectrumCount).first_nonzero();
    const SpectralResult wentzell = wentzell_spectrum(ops, beta, kSpectrumCount);
    q.lambda1 = wentzell.first_nonzero();
    q.lambda1_multiplicity = wentzell.first_nonzero_multiplicity();
    q.eta1_numeric = boundary_eta1(ops, kSpectrumCount).first_nonzero();
    q.area = spec.curve_area();
    q.perimeter = spec.curve_perimeter();
    q.eta1_closed = closed_form_eta1(q.perimeter);
    q.c = params.c ? params.c : spec.min_curvature();
    q.xi = xi1_upper_bounds(normalize_origin(mesh, OriginMode::domain_centroid));
    for (const auto& w : q.xi.warnings) out.warnings.push_back(w);

    auto& reports = out.reports;
    const std::vector<std::pair<std::string, double>> common = {{"beta", beta}, {"n", n}, {"h", mesh.h}};
    auto with_inputs = [&](BoundReport r, std::vector<std::pair<std::string, double>> extra) {
        r.inputs = common;
        r.inputs.insert(r.inputs.end(), extra.begin(), extra.end());
        return r;
    };

    reports.push_back(with_inputs(
        make_report("splitting", "lambda_1(beta) >= beta eta_1 + p_1", BoundKind::theorem, BoundDirection::lower,
                    false, q.lambda1, beta * q.eta1_numeric + q.p1, std::min(tol, kDiscreteExactTol)),
        {{"eta1_numeric", q.eta1_numeric}, {"p1", q.p1}}));

    const bool have_c = q.c.has_value() && *q.c > kPositiveCurvature;
    const std::string no_c_reason = !q.c ? "domain has corners; no boundary curvature bound"
                                         : "boundary curvature lower bound is not positive";
    auto curvature_report = [&](const std::string& id, const std::string& desc, BoundKind kind,
                                BoundDirection dir, bool strict, double lhs, auto&& rhs_fn,
                                std::vector<std::pair<std::string, double>> extra) {
        if (!have_c) {
            reports.push_back(with_inputs(not_applicable_report(id, desc, kind, dir, no_c_reason), extra));
            return;
        }
        const std::optional<double> rhs = rhs_fn(*q.c);
        extra.emplace_back("c", *q.c);
        if (!rhs) {
            reports.push_back(with_inputs(not_applicable_report(id, desc, kind, dir, "negative discriminant"), extra));
            return;
        }
        reports.push_back(with_inputs(make_report(id, desc, kind, dir, strict, lhs, *rhs, tol), extra));
    };

    curvature_report("curvature_upper", "lambda_1(beta) <= curvature upper bound", BoundKind::theorem,
                     BoundDirection::upper, false, q.lambda1,
                     [&](double c) { return curvature_wentzell_upper(q.eta1_closed, params.kappa0, c, beta, n); },
                     {{"eta1", q.eta1_closed}, {"kappa0", params.kappa0}});

    reports.push_back(with_inputs(
        make_report("isoperimetric_upper", "lambda_1(beta) <= isoperimetric upper bound", BoundKind::theorem,
                    BoundDirection::upper, false, q.lambda1,
                    isoperimetric_wentzell_upper(q.area, q.perimeter, n, beta), tol),
        {{"area", q.area}, {"perimeter", q.perimeter}}));

    curvature_report("steklov_curvature_lower", "p_1 > c eta_1 / (2 eta_1 + kappa)", BoundKind::theorem,
                     BoundDirection::lower, true, q.p1,
                     [&](double c) { return std::optional<double>(curvature_steklov_lower(q.eta1_closed, params.kappa, c)); },
                     {{"eta1", q.eta1_closed}, {"kappa", params.kappa}});

    curvature_report("wentzell_curvature_lower", "lambda_1(beta) > curvature lower bound", BoundKind::theorem,
                     BoundDirection::lower, true, q.lambda1,
                     [&](double c) { return std::optional<double>(curvature_wentzell_lower(c, beta, n)); }, {});

    curvature_report("conjecture_lower", "lambda_1(beta) >= (n-1) beta c^2 + c", BoundKind::conjecture,
                     BoundDirection::lower, false, q.lambda1,
                     [&](double c) { return std::optional<double>(conjectured_wentzell_lower(c, beta, n)); }, {});

    reports.push_back(with_inputs(
        make_report("xi_isoperimetric", "xi_1 construction bound vs isoperimetric bound", BoundKind::comparison,
                    BoundDirection::upper, false, q.xi.bound, xi_isoperimetric_upper(q.area, q.perimeter, n), tol),
        {{"per_coordinate_x", q.xi.per_coordinate[0]},
         {"per_coordinate_y", q.xi.per_coordinate[1]},
         {"aggregate", q.xi.aggregate}}));

    const double zeta_construction = std::min(q.xi.zeta_per_coordinate[0], q.xi.zeta_per_coordinate[1]);
    reports.push_back(with_inputs(
        make_report("zeta_isoperimetric", "zeta_1 construction bound vs isoperimetric bound", BoundKind::comparison,
                    BoundDirection::upper, false, zeta_construction,
                    zeta_isoperimetric_upper(q.area, q.perimeter, n, q.eta1_closed), tol),
        {{"eta1", q.eta1_closed}}));

    if (have_c) {
        reports.push_back(with_inputs(eta1_curvature_check(q.eta1_closed, *q.c, n, tol), {}));
    } else {
        reports.push_back(with_inputs(not_applicable_report("eta1_curvature", "eta_1 >= (n-1) c^2", BoundKind::theorem,
                                                            BoundDirection::lower, no_c_reason),
                                      {}));
    }

    for (const auto& r : reports) {
        if (r.kind == BoundKind::conjecture && r.verdict == Verdict::violated) {
            out.warnings.push_back("conjectured bound '" + r.theorem_id + "' fails on " + spec.describe());
        }
    }
    return out;
}

std::string reports_json(const std::vector<BoundReport>& reports, int digits) {
    auto num = [&](const std::optional<double>& v) -> nlohmann::ordered_json {
        if (!v) return nullptr;
        return round_significant(*v, digits);
    };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["theorem"] = r.theorem_id;
        j["description"] = r.description;
        j["kind"] = to_string(r.kind);
        j["direction"] = r.direction == BoundDirection::upper ? "upper" : "lower";
        j["strict"] = r.strict;
        j["lhs"] = num(r.lhs);
        j["rhs"] = num(r.rhs);
        j["slack"] = num(r.slack);
        j["verdict"] = to_string(r.verdict);
        j["tolerance"] = r.tolerance;
        nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs) inputs[k] = round_significant(v, digits);
        j["inputs"] = inputs;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string reports_csv(const std::vector<BoundReport>& reports, int digits) {
    std::ostringstream out;
    auto num = [&](const std::optional<double>& v) { return v ? format_number(*v, digits) : std::string(); };
    out << "theorem,lhs,rhs,slack,verdict\n";
    for (const auto& r : reports) {
        out << r.theorem_id << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.slack) << ','
            << to_string(r.verdict) << '\n';
    }
    return out.str();
}

}  // namespace wentzell
