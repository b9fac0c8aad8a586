#include <cmath>
#include <numbers>

#include "wentzell/geometry.hpp"

namespace wentzell {

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: dimension must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

Vec2 domain_centroid(const TriangleMesh& mesh) {
    double area = 0.0;
    Vec2 acc{};
    for (const auto& t : mesh.triangles) {
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], c = mesh.vertices[t[2]];
        const double A = signed_area(a, b, c);
        area += A;
        acc = acc + (A / 3.0) * (a + b + c);
    }
    return (1.0 / area) * acc;
}

Vec2 boundary_centroid(const TriangleMesh& mesh) {
    const auto& loop = mesh.boundary_loop;
    double length = 0.0;
    Vec2 acc{};
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Vec2 a = mesh.vertices[loop[i]], b = mesh.vertices[loop[(i + 1) % loop.size()]];
        const double L = norm(b - a);
        length += L;
        acc = acc + (0.5 * L) * (a + b);
    }
    return (1.0 / length) * acc;
}

TriangleMesh normalize_origin(const TriangleMesh& mesh, OriginMode mode) {
    const Vec2 shift = mode == OriginMode::domain_centroid ? domain_centroid(mesh) : boundary_centroid(mesh);
    TriangleMesh out = mesh;
    for (Vec2& v : out.vertices) v = v - shift;
    return out;
}

GeometricSummary geometric_summary(const DomainSpec& spec, const TriangleMesh& mesh, int n) {
    GeometricSummary s;
    s.dimension = n;
    s.domain_centroid = domain_centroid(mesh);
    s.boundary_centroid = boundary_centroid(mesh);
    for (const auto& t : mesh.triangles) {
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], c = mesh.vertices[t[2]];
        const double A = signed_area(a, b, c);
        s.area += A;
        // Edge-midpoint rule, exact for quadratics.
        const Vec2 mids[3] = {0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)};
        for (Vec2 m : mids) {
            const Vec2 d = m - s.domain_centroid;
            s.second_moment += (A / 3.0) * dot(d, d);
        }
    }
    const auto& loop = mesh.boundary_loop;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        s.perimeter += norm(mesh.vertices[loop[(i + 1) % loop.size()]] - mesh.vertices[loop[i]]);
    }
    s.min_curvature = spec.min_curvature();
    s.unit_ball_volume = unit_ball_volume(n);
    s.convex = spec.is_convex();
    return s;
}

}  // namespace wentzell
