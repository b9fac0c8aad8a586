#include "commands.hpp"

#include <charconv>
#include <sstream>

#include "output.hpp"
#include "wentzell/ballspec.hpp"
#include "wentzell/bounds.hpp"
#include "wentzell/cli.hpp"

namespace wentzell::cli::detail {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

double parse_double(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(context + ": cannot parse '" + text + "' as a number");
    }
    return v;
}

std::vector<Vec2> parse_vertices(const std::string& text) {
    std::vector<Vec2> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (trim(item).empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw ConfigError("--vertices: expected x,y in '" + item + "'");
        out.push_back({parse_double(item.substr(0, comma), "--vertices"),
                       parse_double(item.substr(comma + 1), "--vertices")});
    }
    return out;
}

void check_output(const OutputOptions& o) { check_output_path(o.path); }

Json spectrum_json(const SpectralResult& r, const DomainSpec& spec) {
    Json j;
    j["domain"] = spec.describe();
    const Json fields = Json::parse(to_json(r, 12));
    for (const auto& [key, value] : fields.items()) j[key] = value;
    return j;
}

std::string spectrum_csv(const SpectralResult& r) {
    std::vector<int> cluster(static_cast<std::size_t>(r.eigenvalues.size()), 0);
    std::vector<int> size(cluster.size(), 0);
    for (std::size_t g = 0; g < r.multiplicity_groups.size(); ++g) {
        for (int i : r.multiplicity_groups[g]) {
            cluster[i] = static_cast<int>(g);
            size[i] = static_cast<int>(r.multiplicity_groups[g].size());
        }
    }
    std::string out = csv_line({"problem", "beta", "h", "index", "eigenvalue", "cluster", "multiplicity"});
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
        out += csv_line({to_string(r.problem), num(r.beta), num(r.mesh_h), std::to_string(i), num(r.eigenvalues[i]),
                         std::to_string(cluster[i]), std::to_string(size[i])});
    }
    return out;
}

Json xi_json(const XiBounds& xi) {
    Json j;
    j["per_coordinate"] = {json_num(xi.per_coordinate[0]), json_num(xi.per_coordinate[1])};
    j["aggregate"] = json_num(xi.aggregate);
    j["bound"] = json_num(xi.bound);
    j["zeta_per_coordinate"] = {json_num(xi.zeta_per_coordinate[0]), json_num(xi.zeta_per_coordinate[1])};
    j["normalization_residual"] = json_num(xi.normalization_residual);
    j["solve_residual"] = json_num(xi.solve_residual);
    return j;
}

}  // namespace

DomainSpec build_domain(const DomainOptions& d) {
    auto need = [&](const auto& value, const char* flag) {
        if (!value) throw ConfigError(std::string(flag) + " is required for --domain " + d.kind);
        return *value;
    };
    auto forbid = [&](bool present, const char* flag) {
        if (present) throw ConfigError(std::string(flag) + " does not apply to --domain " + d.kind);
    };
    const bool disk = d.kind == "disk", ellipse = d.kind == "ellipse", star = d.kind == "star";
    const bool polygon = d.kind == "polygon";
    forbid(!disk && d.radius.has_value(), "--R");
    forbid(!ellipse && (d.a || d.b), "--a/--b");
    forbid(!star && (d.eps || d.lobes), "--eps/--m");
    forbid(!polygon && !d.vertices.empty(), "--vertices");
    if (disk) return DomainSpec::disk(need(d.radius, "--R"));
    if (ellipse) return DomainSpec::ellipse(need(d.a, "--a"), need(d.b, "--b"));
    if (star) return DomainSpec::star(need(d.eps, "--eps"), need(d.lobes, "--m"));
    if (polygon) {
        if (d.vertices.empty()) throw ConfigError("--vertices is required for --domain polygon");
        return DomainSpec::polygon(parse_vertices(d.vertices));
    }
    throw ConfigError("unknown domain '" + d.kind + "'");
}

int cmd_mesh(const MeshConfig& cfg, std::ostream& out, std::ostream&) {
    const DomainSpec spec = build_domain(cfg.domain);
    check_output(cfg.output);
    const TriangleMesh mesh = generate_mesh(spec, cfg.domain.h);
    const GeometricSummary s = geometric_summary(spec, mesh);
    std::string text;
    if (cfg.output.format == "text") {
        text = save_mesh(mesh);
    } else if (cfg.output.format == "csv") {
        text = csv_line({"domain", "vertices", "triangles", "boundary_vertices", "h", "min_angle_deg", "area",
                         "perimeter"}) +
               csv_line({spec.describe(), std::to_string(mesh.vertices.size()), std::to_string(mesh.triangles.size()),
                         std::to_string(mesh.boundary_loop.size()), num(mesh.h), num(min_angle_degrees(mesh)),
                         num(s.area), num(s.perimeter)});
    } else {
        Json j;
        j["domain"] = spec.describe();
        j["h"] = json_num(mesh.h);
        j["min_angle_deg"] = json_num(min_angle_degrees(mesh));
        j["area"] = json_num(s.area);
        j["perimeter"] = json_num(s.perimeter);
        Json vertices = Json::array();
        for (const Vec2& v : mesh.vertices) vertices.push_back({v.x, v.y});
        j["vertices"] = vertices;
        j["triangles"] = mesh.triangles;
        j["boundary_loop"] = mesh.boundary_loop;
        text = j.dump(2) + "\n";
    }
    emit(text, cfg.output.path, out);
    return exit_ok;
}

int cmd_spectrum(const SpectrumConfig& cfg, std::ostream& out, std::ostream& err) {
    const DomainSpec spec = build_domain(cfg.domain);
    if (cfg.problem != "wentzell" && cfg.beta != 0.0) throw ConfigError("--beta applies only to --problem wentzell");
    check_output(cfg.output);
    const TriangleMesh mesh = generate_mesh(spec, cfg.domain.h);
    const BoundaryOperators ops = boundary_operators(mesh);
    SpectralResult r;
    if (cfg.problem == "boundary") {
        r = boundary_eta1(ops, cfg.count);
    } else if (cfg.problem == "steklov" || cfg.beta == 0.0) {
        r = steklov_spectrum(ops, cfg.count);
    } else {
        r = wentzell_spectrum(ops, cfg.beta, cfg.count);
    }
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    emit(cfg.output.format == "json" ? spectrum_json(r, spec).dump(2) + "\n" : spectrum_csv(r), cfg.output.path, out);
    return exit_ok;
}

int cmd_ball(const BallConfig& cfg, std::ostream& out, std::ostream&) {
    BallParams params;
    params.beta = parse_rational(cfg.beta);
    params.radius = parse_rational(cfg.radius);
    params.tau = parse_rational(cfg.tau);
    if (params.beta < 0) throw ConfigError("--beta must be nonnegative");
    if (params.radius <= 0) throw ConfigError("--R must be positive");
    if (params.tau <= 0) throw ConfigError("--tau must be positive");
    check_output(cfg.output);

    std::vector<BallProblem> problems;
    if (cfg.problem == "all") {
        problems = {BallProblem::wentzell, BallProblem::steklov, BallProblem::xi, BallProblem::zeta,
                    BallProblem::tau_tone};
    } else {
        problems = {parse_ball_problem(cfg.problem)};
    }
    std::vector<BallSpectrumEntry> rows;
    try {
        for (BallProblem p : problems) {
            auto t = ball_table(p, cfg.n, cfg.kmax, params);
            rows.insert(rows.end(), t.begin(), t.end());
        }
    } catch (const std::overflow_error&) {
        throw ConfigError("multiplicities for --n " + std::to_string(cfg.n) + " --kmax " + std::to_string(cfg.kmax) +
                          " exceed 64 bits");
    }

    std::string text;
    if (cfg.output.format == "csv") {
        text = ball_table_csv(rows);
    } else {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["problem"] = to_string(r.problem);
            j["n"] = r.n;
            j["k"] = r.k;
            j["eigenvalue"] = to_string(r.eigenvalue);
            j["value"] = json_num(static_cast<double>(r.eigenvalue));
            j["multiplicity"] = r.multiplicity;
            arr.push_back(j);
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, cfg.output.path, out);
    return exit_ok;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    const DomainSpec spec = build_domain(cfg.domain);
    check_output(cfg.output);
    ProblemParams params;
    params.beta = cfg.beta;
    params.tau = cfg.tau;
    params.kappa = cfg.kappa;
    params.kappa0 = cfg.kappa0;
    params.c = cfg.c;
    const TriangleMesh mesh = generate_mesh(spec, cfg.domain.h);
    const VerifyResult r = verify_domain(spec, mesh, params, cfg.tol);
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';

    std::string text;
    if (cfg.output.format == "csv") {
        text = reports_csv(r.reports);
    } else {
        const DomainQuantities& q = r.quantities;
        Json j;
        j["domain"] = spec.describe();
        j["h"] = json_num(q.mesh_h);
        j["params"] = {{"beta", json_num(cfg.beta)},     {"tau", json_num(cfg.tau)},
                       {"kappa", json_num(cfg.kappa)},   {"kappa0", json_num(cfg.kappa0)},
                       {"c", json_num(cfg.c)},           {"tol", json_num(cfg.tol)}};
        Json qj;
        qj["p1"] = json_num(q.p1);
        qj["lambda1"] = json_num(q.lambda1);
        qj["lambda1_multiplicity"] = q.lambda1_multiplicity;
        qj["eta1_numeric"] = json_num(q.eta1_numeric);
        qj["eta1_closed"] = json_num(q.eta1_closed);
        qj["c"] = json_num(q.c);
        qj["area"] = json_num(q.area);
        qj["perimeter"] = json_num(q.perimeter);
        qj["xi"] = xi_json(q.xi);
        j["quantities"] = qj;
        j["reports"] = Json::parse(reports_json(r.reports));
        j["warnings"] = r.warnings;
        text = j.dump(2) + "\n";
    }
    emit(text, cfg.output.path, out);

    if (r.any_theorem_violated()) {
        for (const auto& rep : r.reports) {
            if (rep.kind == BoundKind::theorem && rep.verdict == Verdict::violated) {
                err << "violated: " << rep.theorem_id << " (lhs " << num(rep.lhs) << ", rhs " << num(rep.rhs) << ")\n";
            }
        }
        return exit_theorem_violation;
    }
    return exit_ok;
}

}  // namespace wentzell::cli::detail
