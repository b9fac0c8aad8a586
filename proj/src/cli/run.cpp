#include <CLI11.hpp>

#include "commands.hpp"
#include "wentzell/cli.hpp"

namespace wentzell::cli {

namespace {

using namespace detail;

void add_domain_options(CLI::App* cmd, DomainOptions& d, double default_h) {
    d.h = default_h;
    cmd->add_option("--domain", d.kind, "disk, ellipse, star or polygon")
        ->required()
        ->check(CLI::IsMember({"disk", "ellipse", "star", "polygon"}));
    cmd->add_option("--R", d.radius, "disk radius")->check(CLI::PositiveNumber);
    cmd->add_option("--a", d.a, "ellipse semi-axis along x")->check(CLI::PositiveNumber);
    cmd->add_option("--b", d.b, "ellipse semi-axis along y")->check(CLI::PositiveNumber);
    cmd->add_option("--eps", d.eps, "star amplitude, boundary r = 1 + eps cos(m t)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m", d.lobes, "star lobe count")->check(CLI::PositiveNumber);
    cmd->add_option("--vertices", d.vertices, "polygon corners as x,y;x,y;... counterclockwise");
    cmd->add_option("--h", d.h, "target mesh size")->check(CLI::PositiveNumber)->capture_default_str();
}

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::vector<std::string>& formats) {
    cmd->add_option("--out", o.path, "report file (default: standard output)");
    cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember(formats))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wentzell, Steklov and fourth-order Steklov eigenvalues with bound verification", "wentzell"};
    app.require_subcommand(1, 1);
    // --h is the mesh size, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");

    MeshConfig mesh;
    auto* mesh_cmd = app.add_subcommand("mesh", "Generate a triangle mesh of a domain");
    add_domain_options(mesh_cmd, mesh.domain, 0.05);
    mesh.output.format = "text";
    add_output_options(mesh_cmd, mesh.output, {"text", "csv", "json"});

    SpectrumConfig spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Wentzell, Steklov or boundary Laplacian eigenvalues");
    add_domain_options(spectrum_cmd, spectrum.domain, 0.05);
    spectrum_cmd->add_option("--problem", spectrum.problem, "wentzell, steklov or boundary")
        ->check(CLI::IsMember({"wentzell", "steklov", "boundary"}))
        ->capture_default_str();
    spectrum_cmd->add_option("--beta", spectrum.beta, "Wentzell coefficient; 0 gives the Steklov problem")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    spectrum_cmd->add_option("--count", spectrum.count, "number of eigenvalues")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(spectrum_cmd, spectrum.output, {"csv", "json"});

    BallConfig ball;
    auto* ball_cmd = app.add_subcommand("ball", "Exact eigenvalue tables on balls");
    ball_cmd->add_option("--n", ball.n, "dimension")->required()->check(CLI::Range(2, 1000));
    ball_cmd->add_option("--kmax", ball.kmax, "largest degree")->check(CLI::Range(0, 1000))->capture_default_str();
    ball_cmd->add_option("--problem", ball.problem, "wentzell, steklov, xi, zeta, tau_tone or all")
        ->check(CLI::IsMember({"wentzell", "steklov", "xi", "zeta", "tau_tone", "all"}))
        ->capture_default_str();
    ball_cmd->add_option("--beta", ball.beta, "Wentzell coefficient, rational")->capture_default_str();
    ball_cmd->add_option("--R", ball.radius, "radius, rational")->capture_default_str();
    ball_cmd->add_option("--tau", ball.tau, "fourth-order coefficient, rational")->capture_default_str();
    add_output_options(ball_cmd, ball.output, {"csv", "json"});

    VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "Evaluate every applicable bound on a domain");
    add_domain_options(verify_cmd, verify.domain, 0.05);
    verify_cmd->add_option("--beta", verify.beta, "Wentzell coefficient")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--tau", verify.tau, "fourth-order coefficient")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--kappa", verify.kappa, "Ricci lower bound magnitude")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--kappa0", verify.kappa0, "Ricci lower bound magnitude for the curvature upper bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--c", verify.c, "boundary curvature lower bound (default: from the curve)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--tol", verify.tol, "relative equality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(verify_cmd, verify.output, {"csv", "json"});

    SweepConfig sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify a grid of domains and coefficients");
    sweep_cmd->add_option("--domain", sweep.kind, "disk, ellipse or star")
        ->required()
        ->check(CLI::IsMember({"disk", "ellipse", "star"}));
    sweep_cmd->add_option("--R", sweep.radii, "disk radii")->delimiter(',')->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--aspect", sweep.aspects, "ellipse aspect ratios a/b")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--b", sweep.b, "ellipse minor semi-axis")->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--eps", sweep.eps, "star amplitudes")->delimiter(',')->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--m", sweep.lobes, "star lobe count")->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--beta", sweep.betas, "Wentzell coefficients")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--h", sweep.h, "target mesh size")->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--tau", sweep.tau, "fourth-order coefficient")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--tol", sweep.tol, "relative equality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--jobs", sweep.jobs, "concurrent rows")->check(CLI::Range(1, 256))->capture_default_str();
    add_output_options(sweep_cmd, sweep.output, {"csv", "json"});

    ConvergenceConfig convergence;
    auto* convergence_cmd = app.add_subcommand("convergence", "Refinement study with observed rates");
    add_domain_options(convergence_cmd, convergence.domain, 0.1);
    convergence_cmd->add_option("--levels", convergence.levels, "number of meshes, each a refinement of the last")
        ->check(CLI::Range(3, 8))
        ->capture_default_str();
    convergence_cmd->add_option("--beta", convergence.beta, "Wentzell coefficient")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    convergence_cmd->add_option("--quantity", convergence.quantities, "p1, lambda1, eta1 and/or xi")
        ->delimiter(',')
        ->check(CLI::IsMember({"p1", "lambda1", "eta1", "xi"}))
        ->capture_default_str();
    add_output_options(convergence_cmd, convergence.output, {"csv", "json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid_config;
    }

    try {
        if (*mesh_cmd) return cmd_mesh(mesh, out, err);
        if (*spectrum_cmd) return cmd_spectrum(spectrum, out, err);
        if (*ball_cmd) return cmd_ball(ball, out, err);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*sweep_cmd) return cmd_sweep(sweep, out, err);
        return cmd_convergence(convergence, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_solver_failure;
    }
}

}  // namespace wentzell::cli
