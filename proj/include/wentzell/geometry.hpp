#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wentzell {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Raised for invalid domain descriptions and meshing requests.
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class DomainKind { disk, ellipse, star, polygon, custom };

std::string to_string(DomainKind kind);

// A bounded planar domain described by its positively oriented boundary curve.
//
// Smooth kinds (disk, ellipse, star) are parametrized on [0, 2*pi); polygonal
// kinds (polygon, custom) on [0, vertex_count) where the integer part selects
// the edge. All boundary vertices produced by the mesher are images of this
// parametrization, so they lie exactly on the curve.
class DomainSpec {
public:
    static DomainSpec disk(double radius, Vec2 center = {});
    static DomainSpec ellipse(double a, double b, Vec2 center = {});
    // Boundary r(theta) = 1 + eps * cos(m * theta).
    static DomainSpec star(double eps, int m, Vec2 center = {});
    static DomainSpec polygon(std::vector<Vec2> vertices);
    // Closed curve given by ordered samples, treated as the polygon through them.
    static DomainSpec custom(std::vector<Vec2> samples);

    DomainKind kind() const { return kind_; }
    bool is_smooth() const { return kind_ == DomainKind::disk || kind_ == DomainKind::ellipse || kind_ == DomainKind::star; }

    double radius() const { return p0_; }
    double semi_major() const { return p0_; }
    double semi_minor() const { return p1_; }
    double star_eps() const { return p0_; }
    int star_lobes() const { return lobes_; }
    Vec2 center() const { return center_; }
    const std::vector<Vec2>& vertices() const { return vertices_; }

    double period() const;
    Vec2 point(double t) const;
    Vec2 derivative(double t) const;
    // Signed curvature of the curve at t; absent for polygonal kinds.
    std::optional<double> curvature(double t) const;
    // Parameter of a point lying on (or very near) the curve.
    double parameter_of(Vec2 p) const;
    // Parameter values that must appear as mesh vertices (polygon corners).
    std::vector<double> corner_parameters() const;

    bool contains(Vec2 p) const;
    double diameter() const;

    // Curve-based reference values (periodic trapezoid rule for smooth kinds,
    // exact for polygonal kinds).
    double curve_perimeter() const;
    double curve_area() const;

    // Minimum boundary curvature c; absent for polygonal kinds.
    std::optional<double> min_curvature() const;
    bool is_convex() const;

    std::string describe() const;

private:
    DomainSpec() = default;
    void validate_polygon() const;

    DomainKind kind_ = DomainKind::disk;
    double p0_ = 1.0;
    double p1_ = 1.0;
    int lobes_ = 0;
    Vec2 center_{};
    std::vector<Vec2> vertices_;
};

struct TriangleMesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;  // counterclockwise
    std::vector<int> boundary_loop;             // counterclockwise traversal of the boundary
    double h = 0.0;                             // maximum edge length
};

double signed_area(Vec2 a, Vec2 b, Vec2 c);
double max_edge_length(const TriangleMesh& mesh);
double min_angle_degrees(const TriangleMesh& mesh);

// Throws GeometryError if any TriangleMesh invariant fails.
void validate_mesh(const TriangleMesh& mesh);

TriangleMesh generate_mesh(const DomainSpec& spec, double h_target);
TriangleMesh refine(const TriangleMesh& mesh, const DomainSpec& spec);

struct GeometricSummary {
    int dimension = 2;
    double area = 0.0;
    double perimeter = 0.0;
    std::optional<double> min_curvature;
    Vec2 domain_centroid{};
    Vec2 boundary_centroid{};
    double second_moment = 0.0;  // integral of |x - domain_centroid|^2 over the domain
    double unit_ball_volume = 0.0;
    bool convex = false;
};

// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

GeometricSummary geometric_summary(const DomainSpec& spec, const TriangleMesh& mesh, int n = 2);

enum class OriginMode { domain_centroid, boundary_centroid };

Vec2 domain_centroid(const TriangleMesh& mesh);
Vec2 boundary_centroid(const TriangleMesh& mesh);
TriangleMesh normalize_origin(const TriangleMesh& mesh, OriginMode mode);

class MeshParseError : public std::runtime_error {
public:
    MeshParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

std::string save_mesh(const TriangleMesh& mesh);
TriangleMesh load_mesh(const std::string& text);

}  // namespace wentzell
