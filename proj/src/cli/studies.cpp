#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "commands.hpp"
#include "output.hpp"
#include "wentzell/ballspec.hpp"
#include "wentzell/bounds.hpp"
#include "wentzell/cli.hpp"

namespace wentzell::cli::detail {

namespace {

struct SweepRow {
    std::string parameter;
    double value = 0.0;
    double beta = 0.0;
    std::string domain;
    std::optional<VerifyResult> result;
    std::string error;
};

DomainSpec sweep_domain(const SweepConfig& cfg, double value) {
    if (cfg.kind == "disk") return DomainSpec::disk(value);
    if (cfg.kind == "ellipse") return DomainSpec::ellipse(value * cfg.b, cfg.b);
    return DomainSpec::star(value, cfg.lobes);
}

void run_row(const SweepConfig& cfg, SweepRow& row) {
    try {
        const DomainSpec spec = sweep_domain(cfg, row.value);
        row.domain = spec.describe();
        ProblemParams params;
        params.beta = row.beta;
        params.tau = cfg.tau;
        row.result = verify_domain(spec, generate_mesh(spec, cfg.h), params, cfg.tol);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = csv_line({"row", "domain", "parameter", "value", "beta", "h", "status", "lambda1", "p1", "eta1",
                                "theorem", "kind", "lhs", "rhs", "slack", "verdict", "message"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        const std::vector<std::string> head = {std::to_string(i), r.domain, r.parameter, num(r.value), num(r.beta)};
        auto line = [&](std::vector<std::string> tail) {
            std::vector<std::string> fields = head;
            fields.insert(fields.end(), tail.begin(), tail.end());
            out += csv_line(fields);
        };
        if (!r.result) {
            line({"", "failed", "", "", "", "", "", "", "", "", "", r.error});
            continue;
        }
        const DomainQuantities& q = r.result->quantities;
        for (const auto& rep : r.result->reports) {
            line({num(q.mesh_h), "ok", num(q.lambda1), num(q.p1), num(q.eta1_numeric), rep.theorem_id,
                  to_string(rep.kind), num(rep.lhs), num(rep.rhs), num(rep.slack), to_string(rep.verdict), rep.note});
        }
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        Json j;
        j["row"] = i;
        j["domain"] = r.domain;
        j["parameter"] = r.parameter;
        j["value"] = json_num(r.value);
        j["beta"] = json_num(r.beta);
        if (!r.result) {
            j["status"] = "failed";
            j["error"] = r.error;
        } else {
            const DomainQuantities& q = r.result->quantities;
            j["status"] = "ok";
            j["h"] = json_num(q.mesh_h);
            j["lambda1"] = json_num(q.lambda1);
            j["p1"] = json_num(q.p1);
            j["eta1"] = json_num(q.eta1_numeric);
            j["reports"] = Json::parse(reports_json(r.result->reports));
            j["warnings"] = r.result->warnings;
        }
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

struct LevelValue {
    int level = 0;
    double h = 0.0;
    std::size_t vertices = 0;
    double value = 0.0;
    std::optional<double> reference;
    std::optional<double> error;
    std::optional<double> rate;
};

}  // namespace

int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::vector<double>* values = nullptr;
    std::string parameter;
    auto forbid = [&](bool present, const char* flag) {
        if (present) throw ConfigError(std::string(flag) + " does not apply to sweep --domain " + cfg.kind);
    };
    forbid(cfg.kind != "disk" && !cfg.radii.empty(), "--R");
    forbid(cfg.kind != "ellipse" && !cfg.aspects.empty(), "--aspect");
    forbid(cfg.kind != "star" && !cfg.eps.empty(), "--eps");
    if (cfg.kind == "disk") {
        values = &cfg.radii;
        parameter = "R";
    } else if (cfg.kind == "ellipse") {
        values = &cfg.aspects;
        parameter = "aspect";
    } else {
        values = &cfg.eps;
        parameter = "eps";
    }
    if (values->empty()) throw ConfigError("sweep --domain " + cfg.kind + " needs --" + parameter + " values");
    if (cfg.betas.empty()) throw ConfigError("sweep needs at least one --beta value");
    check_output_path(cfg.output.path);

    // Grid order: domain parameter outer, beta inner.
    std::vector<SweepRow> rows;
    for (double v : *values) {
        for (double beta : cfg.betas) rows.push_back({parameter, v, beta, "", std::nullopt, ""});
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) run_row(cfg, rows[i]);
    };
    const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), rows.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool any_ok = false, violated = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].result) {
            err << "row " << i << " failed: " << rows[i].error << '\n';
            continue;
        }
        any_ok = true;
        for (const auto& w : rows[i].result->warnings) err << "row " << i << " warning: " << w << '\n';
        if (rows[i].result->any_theorem_violated()) {
            violated = true;
            err << "row " << i << ": a theorem verdict is violated\n";
        }
    }
    emit(cfg.output.format == "json" ? sweep_json(rows) : sweep_csv(rows), cfg.output.path, out);
    if (!any_ok) return exit_solver_failure;
    return violated ? exit_theorem_violation : exit_ok;
}

int cmd_convergence(const ConvergenceConfig& cfg, std::ostream& out, std::ostream& err) {
    const DomainSpec spec = build_domain(cfg.domain);
    check_output_path(cfg.output.path);

    std::map<std::string, std::optional<double>> reference;
    if (spec.kind() == DomainKind::disk) {
        const BallParams ball{Rational(cfg.beta), Rational(spec.radius()), 1};
        reference["p1"] = static_cast<double>(ball_eigenvalue(BallProblem::steklov, 2, 1, ball));
        reference["lambda1"] = static_cast<double>(ball_eigenvalue(BallProblem::wentzell, 2, 1, ball));
        reference["xi"] = static_cast<double>(ball_eigenvalue(BallProblem::xi, 2, 1, ball));
    }
    reference["eta1"] = closed_form_eta1(spec.curve_perimeter());

    std::map<std::string, std::vector<LevelValue>> series;
    TriangleMesh mesh;
    for (int level = 0; level < cfg.levels; ++level) {
        try {
            mesh = level == 0 ? generate_mesh(spec, cfg.domain.h) : refine(mesh, spec);
            const BoundaryOperators ops = boundary_operators(mesh);
            for (const auto& q : cfg.quantities) {
                double v = 0.0;
                if (q == "p1") {
                    v = steklov_spectrum(ops, 8).first_nonzero();
                } else if (q == "lambda1") {
                    v = wentzell_spectrum(ops, cfg.beta, 8).first_nonzero();
                } else if (q == "eta1") {
                    v = boundary_eta1(ops).first_nonzero();
                } else {
                    v = xi1_upper_bounds(normalize_origin(mesh, OriginMode::domain_centroid)).bound;
                }
                series[q].push_back({level, mesh.h, mesh.vertices.size(), v, reference[q], {}, {}});
            }
        } catch (const std::exception& e) {
            err << "error: level " << level << " failed: " << e.what() << '\n';
            return exit_solver_failure;
        }
    }

    // Error against the reference when one is known, else the change from the previous level.
    for (auto& [name, s] : series) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].reference) {
                s[i].error = std::abs(s[i].value - *s[i].reference);
            } else if (i > 0) {
                s[i].error = std::abs(s[i].value - s[i - 1].value);
            }
            if (i > 0 && s[i].error && s[i - 1].error && *s[i].error > 0.0 && *s[i - 1].error > 0.0) {
                s[i].rate = std::log(*s[i - 1].error / *s[i].error) / std::log(s[i - 1].h / s[i].h);
            }
        }
    }

    std::string text;
    if (cfg.output.format == "csv") {
        text = csv_line({"quantity", "level", "h", "vertices", "value", "reference", "error", "rate"});
        for (const auto& q : cfg.quantities) {
            for (const auto& l : series[q]) {
                text += csv_line({q, std::to_string(l.level), num(l.h), std::to_string(l.vertices), num(l.value),
                                  num(l.reference), num(l.error), num(l.rate)});
            }
        }
    } else {
        Json j;
        j["domain"] = spec.describe();
        j["beta"] = json_num(cfg.beta);
        Json rows = Json::array();
        for (const auto& q : cfg.quantities) {
            for (const auto& l : series[q]) {
                rows.push_back({{"quantity", q},
                                {"level", l.level},
                                {"h", json_num(l.h)},
                                {"vertices", l.vertices},
                                {"value", json_num(l.value)},
                                {"reference", json_num(l.reference)},
                                {"error", json_num(l.error)},
                                {"rate", json_num(l.rate)}});
            }
        }
        j["levels"] = rows;
        text = j.dump(2) + "\n";
    }
    emit(text, cfg.output.path, out);
    return exit_ok;
}

}  // namespace wentzell::cli::detail
