#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wentzell/geometry.hpp"

using namespace wentzell;

namespace {

constexpr double pi = std::numbers::pi;

double loop_integral_of_x(const TriangleMesh& m) {
    // Exact for the linear integrand along each straight edge.
    double sx = 0.0, sy = 0.0;
    const auto& loop = m.boundary_loop;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Vec2 a = m.vertices[loop[i]], b = m.vertices[loop[(i + 1) % loop.size()]];
        const double L = norm(b - a);
        sx += 0.5 * L * (a.x + b.x);
        sy += 0.5 * L * (a.y + b.y);
    }
    return std::hypot(sx, sy);
}

}  // namespace

TEST(Domain, RejectsInvalidSpecs) {
    EXPECT_THROW(DomainSpec::disk(0.0), GeometryError);
    EXPECT_THROW(DomainSpec::ellipse(1.0, 2.0), GeometryError);
    EXPECT_THROW(DomainSpec::star(1.0, 3), GeometryError);
    EXPECT_THROW(DomainSpec::star(-0.1, 3), GeometryError);
    // Bow-tie polygon self-intersects.
    EXPECT_THROW(DomainSpec::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), GeometryError);
    // Clockwise square.
    EXPECT_THROW(DomainSpec::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), GeometryError);
}

TEST(Domain, EllipseMinCurvatureIsBOverASquared) {
    const auto s = DomainSpec::ellipse(2.0, 1.0);
    ASSERT_TRUE(s.min_curvature().has_value());
    EXPECT_NEAR(*s.min_curvature(), 0.25, 1e-12);
}

TEST(Domain, StarConvexityFlag) {
    // At the inner lobes r = 1 - eps, r'' = eps m^2, so the curvature numerator
    // r^2 - r r'' stays positive iff eps (m^2 + 1) < 1.
    EXPECT_TRUE(DomainSpec::star(0.05, 3).is_convex());
    EXPECT_TRUE(DomainSpec::star(0.099, 3).is_convex());
    EXPECT_FALSE(DomainSpec::star(0.101, 3).is_convex());
    EXPECT_FALSE(DomainSpec::star(0.2, 3).is_convex());
    EXPECT_NEAR(*DomainSpec::star(0.1, 3).min_curvature(), 0.0, 1e-9);
}

TEST(Domain, PolygonHasNoCurvature) {
    const auto s = DomainSpec::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    EXPECT_FALSE(s.min_curvature().has_value());
    EXPECT_TRUE(s.is_convex());
    EXPECT_DOUBLE_EQ(s.curve_perimeter(), 4.0);
    EXPECT_DOUBLE_EQ(s.curve_area(), 1.0);
}

TEST(Domain, EllipsePerimeterMatchesReference) {
    EXPECT_NEAR(DomainSpec::ellipse(2.0, 1.0).curve_perimeter(), 9.688448220547675, 1e-12);
}

TEST(Mesh, DiskBoundaryOnCircle) {
    const auto m = generate_mesh(DomainSpec::disk(1.0), 0.1);
    for (int b : m.boundary_loop) EXPECT_NEAR(norm(m.vertices[b]), 1.0, 1e-15);
    EXPECT_LE(m.h, 0.15);
    EXPECT_GE(min_angle_degrees(m), 20.0);
}

TEST(Mesh, EllipseAreaIsSecondOrder) {
    const auto spec = DomainSpec::ellipse(2.0, 1.0);
    const auto m = generate_mesh(spec, 0.2);
    const double err = std::abs(geometric_summary(spec, m).area - 2.0 * pi);
    EXPECT_LT(err, 2.0 * m.h * m.h);
    EXPECT_LE(m.h, 0.3);
    EXPECT_GE(min_angle_degrees(m), 20.0);
}

TEST(Mesh, StarHasOneClosedLoop) {
    const auto spec = DomainSpec::star(0.1, 3);
    const auto m = generate_mesh(spec, 0.1);
    EXPECT_NO_THROW(validate_mesh(m));
    for (int b : m.boundary_loop) {
        const Vec2 p = m.vertices[b];
        const double t = std::atan2(p.y, p.x);
        EXPECT_NEAR(norm(p), 1.0 + 0.1 * std::cos(3.0 * t), 1e-12);
    }
}

TEST(Mesh, NonconvexDomainsMeshWithQuality) {
    for (const auto& spec : {DomainSpec::star(0.3, 3),
                             DomainSpec::polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}})}) {
        const auto m = generate_mesh(spec, 0.1);
        EXPECT_NO_THROW(validate_mesh(m));
        EXPECT_GE(min_angle_degrees(m), 20.0) << spec.describe();
        EXPECT_LE(m.h, 0.15) << spec.describe();
    }
}

TEST(Mesh, RejectsBadTargets) {
    EXPECT_THROW(generate_mesh(DomainSpec::disk(1.0), 0.0), GeometryError);
    EXPECT_THROW(generate_mesh(DomainSpec::disk(1.0), 2.5), GeometryError);
}

TEST(Mesh, RejectsSharpPolygonCorner) {
    const auto spec = DomainSpec::polygon({{0, 0}, {1, 0}, {0, 0.1}});
    EXPECT_THROW(generate_mesh(spec, 0.02), GeometryError);
}

TEST(Refine, DoublesBoundaryAndQuadruplesTriangles) {
    const auto spec = DomainSpec::disk(1.0);
    const auto m = generate_mesh(spec, 0.1);
    const auto r = refine(m, spec);
    EXPECT_EQ(r.boundary_loop.size(), 2 * m.boundary_loop.size());
    EXPECT_EQ(r.triangles.size(), 4 * m.triangles.size());
    for (int b : r.boundary_loop) EXPECT_NEAR(norm(r.vertices[b]), 1.0, 1e-15);
    EXPECT_NO_THROW(validate_mesh(r));
}

TEST(Refine, DiskAreaErrorDropsByFour) {
    const auto spec = DomainSpec::disk(1.0);
    const auto m0 = generate_mesh(spec, 0.2);
    const auto m1 = refine(m0, spec);
    const auto m2 = refine(m1, spec);
    const double e0 = pi - geometric_summary(spec, m0).area;
    const double e1 = pi - geometric_summary(spec, m1).area;
    const double e2 = pi - geometric_summary(spec, m2).area;
    EXPECT_NEAR(e0 / e1, 4.0, 0.2);
    EXPECT_NEAR(e1 / e2, 4.0, 0.1);
    // Polygon inscribed in a circle with N sides: area defect pi - (N/2) sin(2pi/N).
    const double N = static_cast<double>(m2.boundary_loop.size());
    EXPECT_NEAR(e2, pi - 0.5 * N * std::sin(2.0 * pi / N), 1e-12);
}

TEST(Summary, DiskRadiusTwo) {
    const auto spec = DomainSpec::disk(2.0);
    const auto m = generate_mesh(spec, 0.1);
    const auto s = geometric_summary(spec, m);
    EXPECT_NEAR(s.area, 4.0 * pi, 0.01);
    EXPECT_NEAR(s.perimeter, 4.0 * pi, 0.01);
    ASSERT_TRUE(s.min_curvature.has_value());
    EXPECT_DOUBLE_EQ(*s.min_curvature, 0.5);
    EXPECT_TRUE(s.convex);
    EXPECT_NEAR(s.unit_ball_volume, pi, 1e-15);
}

TEST(Summary, DiskSecondMoment) {
    const auto spec = DomainSpec::disk(1.0);
    const auto m = generate_mesh(spec, 0.05);
    EXPECT_NEAR(geometric_summary(spec, m).second_moment, pi / 2.0, 5e-3);
}

TEST(Summary, UnitBallVolumes) {
    EXPECT_NEAR(unit_ball_volume(1), 2.0, 1e-15);
    EXPECT_NEAR(unit_ball_volume(3), 4.0 * pi / 3.0, 1e-14);
    EXPECT_NEAR(unit_ball_volume(4), pi * pi / 2.0, 1e-14);
}

TEST(Summary, IsoperimetricSanity) {
    for (const auto& spec : {DomainSpec::disk(1.0), DomainSpec::ellipse(1.5, 1.0), DomainSpec::star(0.1, 3),
                             DomainSpec::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})}) {
        const auto m = generate_mesh(spec, 0.05);
        const auto s = geometric_summary(spec, m);
        const double ratio = s.perimeter * s.perimeter / (4.0 * pi * s.area);
        if (spec.kind() == DomainKind::disk) {
            EXPECT_NEAR(ratio, 1.0, 1e-3);
        } else {
            EXPECT_GT(ratio, 1.0 + 1e-3) << spec.describe();
        }
    }
}

TEST(Origin, DomainModeCentersShiftedDisk) {
    const auto spec = DomainSpec::disk(1.0, {3.0, 5.0});
    const auto m = normalize_origin(generate_mesh(spec, 0.1), OriginMode::domain_centroid);
    const Vec2 c = domain_centroid(m);
    EXPECT_LT(norm(c), 1e-12 * 6.0);
}

TEST(Origin, BoundaryModeZeroesBoundaryMoment) {
    const auto spec = DomainSpec::ellipse(2.0, 1.0, {1.0, 0.0});
    const auto m = normalize_origin(generate_mesh(spec, 0.1), OriginMode::boundary_centroid);
    EXPECT_LT(loop_integral_of_x(m), 1e-12 * 10.0);
    // The removed shift is the offset up to the polyline's O(h^2) asymmetry.
    const auto raw = generate_mesh(spec, 0.1);
    EXPECT_NEAR(raw.vertices[0].x - m.vertices[0].x, 1.0, 1e-3);
    EXPECT_NEAR(raw.vertices[0].y - m.vertices[0].y, 0.0, 1e-3);
}

TEST(Origin, Idempotent) {
    for (auto mode : {OriginMode::domain_centroid, OriginMode::boundary_centroid}) {
        const auto spec = DomainSpec::star(0.1, 3, {0.3, -0.2});
        const auto once = normalize_origin(generate_mesh(spec, 0.1), mode);
        const auto twice = normalize_origin(once, mode);
        for (std::size_t i = 0; i < once.vertices.size(); ++i) {
            EXPECT_LT(norm(once.vertices[i] - twice.vertices[i]), 1e-12);
        }
    }
}

TEST(MeshIo, RoundTripIsBitExact) {
    const auto m = generate_mesh(DomainSpec::star(0.1, 3), 0.1);
    const auto back = load_mesh(save_mesh(m));
    ASSERT_EQ(back.vertices.size(), m.vertices.size());
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        EXPECT_EQ(back.vertices[i].x, m.vertices[i].x);
        EXPECT_EQ(back.vertices[i].y, m.vertices[i].y);
    }
    EXPECT_EQ(back.triangles, m.triangles);
    EXPECT_EQ(back.boundary_loop, m.boundary_loop);
}

TEST(MeshIo, MissingVertexNamesIndex) {
    const std::string text = "3 1 3\n0 0\n1 0\n0 1\n0 1 7\n0\n1\n2\n";
    try {
        load_mesh(text);
        FAIL() << "expected a parse error";
    } catch (const MeshParseError& e) {
        EXPECT_NE(std::string(e.what()).find("missing vertex 7"), std::string::npos);
        EXPECT_EQ(e.line(), 5);
    }
}

TEST(MeshIo, EmptyFile) {
    try {
        load_mesh("");
        FAIL() << "expected a parse error";
    } catch (const MeshParseError& e) {
        EXPECT_NE(std::string(e.what()).find("no header"), std::string::npos);
    }
}

TEST(MeshIo, MalformedLineReportsLineNumber) {
    try {
        load_mesh("3 1 3\n0 0\n1 zero\n0 1\n0 1 2\n0\n1\n2\n");
        FAIL() << "expected a parse error";
    } catch (const MeshParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}
