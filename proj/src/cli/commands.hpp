#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wentzell/geometry.hpp"

namespace wentzell::cli::detail {

struct DomainOptions {
    std::string kind;
    std::optional<double> radius;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> eps;
    std::optional<int> lobes;
    std::string vertices;  // "x,y;x,y;..."
    double h = 0.05;
};

// Validates that the flags needed by the domain kind are present.
DomainSpec build_domain(const DomainOptions& d);

struct OutputOptions {
    std::string path;
    std::string format;
};

struct MeshConfig {
    DomainOptions domain;
    OutputOptions output;  // empty format: the plain-text mesh file
};

struct SpectrumConfig {
    DomainOptions domain;
    std::string problem = "wentzell";
    double beta = 0.0;
    int count = 6;
    OutputOptions output{"", "json"};
};

struct BallConfig {
    int n = 2;
    int kmax = 5;
    std::string problem = "all";
    std::string beta = "0";
    std::string radius = "1";
    std::string tau = "1";
    OutputOptions output{"", "csv"};
};

struct VerifyConfig {
    DomainOptions domain;
    double beta = 1.0;
    double tau = 1.0;
    double kappa = 0.0;
    double kappa0 = 0.0;
    std::optional<double> c;
    double tol = 1e-3;
    OutputOptions output{"", "json"};
};

struct SweepConfig {
    std::string kind;
    std::vector<double> radii;
    std::vector<double> aspects;
    std::vector<double> eps;
    double b = 1.0;
    int lobes = 3;
    std::vector<double> betas{1.0};
    double h = 0.05;
    double tau = 1.0;
    double tol = 1e-3;
    int jobs = 1;
    OutputOptions output{"", "csv"};
};

struct ConvergenceConfig {
    DomainOptions domain;
    int levels = 3;
    double beta = 1.0;
    std::vector<std::string> quantities{"p1", "lambda1", "eta1", "xi"};
    OutputOptions output{"", "csv"};
};

int cmd_mesh(const MeshConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const SpectrumConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ball(const BallConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convergence(const ConvergenceConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace wentzell::cli::detail
