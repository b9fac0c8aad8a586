#include "wentzell/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/tools/minima.hpp>

namespace wentzell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kCurveQuadraturePoints = 8192;

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const double d1 = signed_area(q1, q2, p1);
    const double d2 = signed_area(q1, q2, p2);
    const double d3 = signed_area(p1, p2, q1);
    const double d4 = signed_area(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    auto on_segment = [](Vec2 a, Vec2 b, Vec2 p) {
        return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
               p.y <= std::max(a.y, b.y);
    };
    if (d1 == 0 && on_segment(q1, q2, p1)) return true;
    if (d2 == 0 && on_segment(q1, q2, p2)) return true;
    if (d3 == 0 && on_segment(p1, p2, q1)) return true;
    if (d4 == 0 && on_segment(p1, p2, q2)) return true;
    return false;
}

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

}  // namespace

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::disk: return "disk";
        case DomainKind::ellipse: return "ellipse";
        case DomainKind::star: return "star";
        case DomainKind::polygon: return "polygon";
        case DomainKind::custom: return "custom";
    }
    return "unknown";
}

double signed_area(Vec2 a, Vec2 b, Vec2 c) { return 0.5 * cross(b - a, c - a); }

DomainSpec DomainSpec::disk(double radius, Vec2 center) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw GeometryError("disk: radius must be positive, got " + std::to_string(radius));
    }
    DomainSpec s;
    s.kind_ = DomainKind::disk;
    s.p0_ = radius;
    s.p1_ = radius;
    s.center_ = center;
    return s;
}

DomainSpec DomainSpec::ellipse(double a, double b, Vec2 center) {
    if (!(b > 0.0) || !(a >= b) || !std::isfinite(a)) {
        throw GeometryError("ellipse: require a >= b > 0, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
    DomainSpec s;
    s.kind_ = DomainKind::ellipse;
    s.p0_ = a;
    s.p1_ = b;
    s.center_ = center;
    return s;
}

DomainSpec DomainSpec::star(double eps, int m, Vec2 center) {
    if (m < 1) throw GeometryError("star: lobe count m must be >= 1, got " + std::to_string(m));
    if (!(eps >= 0.0) || !(eps < 1.0)) {
        throw GeometryError("star: need 0 <= eps < 1 so that 1 + eps*cos(m*theta) > 0, got eps=" +
                            std::to_string(eps));
    }
    DomainSpec s;
    s.kind_ = DomainKind::star;
    s.p0_ = eps;
    s.lobes_ = m;
    s.center_ = center;
    return s;
}

DomainSpec DomainSpec::polygon(std::vector<Vec2> vertices) {
    DomainSpec s;
    s.kind_ = DomainKind::polygon;
    s.vertices_ = std::move(vertices);
    s.validate_polygon();
    return s;
}

DomainSpec DomainSpec::custom(std::vector<Vec2> samples) {
    DomainSpec s;
    s.kind_ = DomainKind::custom;
    s.vertices_ = std::move(samples);
    s.validate_polygon();
    return s;
}

void DomainSpec::validate_polygon() const {
    const std::string name = to_string(kind_);
    const auto n = vertices_.size();
    if (n < 3) throw GeometryError(name + ": need at least 3 vertices");
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 b = vertices_[(i + 1) % n];
        if (!std::isfinite(a.x) || !std::isfinite(a.y)) throw GeometryError(name + ": non-finite vertex");
        if (a.x == b.x && a.y == b.y) {
            throw GeometryError(name + ": repeated vertex at index " + std::to_string(i));
        }
        twice_area += cross(a, b);
    }
    if (!(twice_area > 0.0)) throw GeometryError(name + ": vertices must be ordered counterclockwise");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j], vertices_[(j + 1) % n])) {
                throw GeometryError(name + ": self-intersecting boundary (edges " + std::to_string(i) + " and " +
                                    std::to_string(j) + ")");
            }
        }
    }
}

double DomainSpec::period() const { return is_smooth() ? kTwoPi : static_cast<double>(vertices_.size()); }

Vec2 DomainSpec::point(double t) const {
    switch (kind_) {
        case DomainKind::disk:
            return center_ + Vec2{p0_ * std::cos(t), p0_ * std::sin(t)};
        case DomainKind::ellipse:
            return center_ + Vec2{p0_ * std::cos(t), p1_ * std::sin(t)};
        case DomainKind::star: {
            const double r = 1.0 + p0_ * std::cos(lobes_ * t);
            return center_ + Vec2{r * std::cos(t), r * std::sin(t)};
        }
        case DomainKind::polygon:
        case DomainKind::custom: {
            const auto n = static_cast<int>(vertices_.size());
            double tt = std::fmod(t, static_cast<double>(n));
            if (tt < 0) tt += n;
            int i = std::min(static_cast<int>(std::floor(tt)), n - 1);
            const double s = tt - i;
            const Vec2 a = vertices_[i];
            const Vec2 b = vertices_[(i + 1) % n];
            if (s == 0.0) return a;
            return a + s * (b - a);
        }
    }
    return {};
}

Vec2 DomainSpec::derivative(double t) const {
    switch (kind_) {
        case DomainKind::disk:
            return {-p0_ * std::sin(t), p0_ * std::cos(t)};
        case DomainKind::ellipse:
            return {-p0_ * std::sin(t), p1_ * std::cos(t)};
        case DomainKind::star: {
            const double r = 1.0 + p0_ * std::cos(lobes_ * t);
            const double dr = -p0_ * lobes_ * std::sin(lobes_ * t);
            return {dr * std::cos(t) - r * std::sin(t), dr * std::sin(t) + r * std::cos(t)};
        }
        case DomainKind::polygon:
        case DomainKind::custom: {
            const auto n = static_cast<int>(vertices_.size());
            double tt = std::fmod(t, static_cast<double>(n));
            if (tt < 0) tt += n;
            int i = std::min(static_cast<int>(std::floor(tt)), n - 1);
            return vertices_[(i + 1) % n] - vertices_[i];
        }
    }
    return {};
}

std::optional<double> DomainSpec::curvature(double t) const {
    switch (kind_) {
        case DomainKind::disk:
            return 1.0 / p0_;
        case DomainKind::ellipse: {
            const double s = std::sin(t), c = std::cos(t);
            const double q = p0_ * p0_ * s * s + p1_ * p1_ * c * c;
            return p0_ * p1_ / (q * std::sqrt(q));
        }
        case DomainKind::star: {
            const double m = lobes_;
            const double r = 1.0 + p0_ * std::cos(m * t);
            const double dr = -p0_ * m * std::sin(m * t);
            const double ddr = -p0_ * m * m * std::cos(m * t);
            const double q = r * r + dr * dr;
            return (r * r + 2.0 * dr * dr - r * ddr) / (q * std::sqrt(q));
        }
        case DomainKind::polygon:
        case DomainKind::custom:
            return std::nullopt;
    }
    return std::nullopt;
}

double DomainSpec::parameter_of(Vec2 p) const {
    const Vec2 q = p - center_;
    switch (kind_) {
        case DomainKind::disk:
        case DomainKind::star:
            return wrap_angle(std::atan2(q.y, q.x));
        case DomainKind::ellipse:
            return wrap_angle(std::atan2(q.y / p1_, q.x / p0_));
        case DomainKind::polygon:
        case DomainKind::custom: {
            const auto n = vertices_.size();
            double best = std::numeric_limits<double>::infinity();
            double best_t = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2 a = vertices_[i];
                const Vec2 e = vertices_[(i + 1) % n] - a;
                double s = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
                const double d = norm(p - (a + s * e));
                if (d < best) {
                    best = d;
                    best_t = static_cast<double>(i) + s;
                }
            }
            if (best_t >= static_cast<double>(n)) best_t -= static_cast<double>(n);
            return best_t;
        }
    }
    return 0.0;
}

std::vector<double> DomainSpec::corner_parameters() const {
    std::vector<double> out;
    if (!is_smooth()) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(static_cast<double>(i));
    }
    return out;
}

bool DomainSpec::contains(Vec2 p) const {
    const Vec2 q = p - center_;
    switch (kind_) {
        case DomainKind::disk:
            return dot(q, q) < p0_ * p0_;
        case DomainKind::ellipse:
            return (q.x * q.x) / (p0_ * p0_) + (q.y * q.y) / (p1_ * p1_) < 1.0;
        case DomainKind::star: {
            const double t = std::atan2(q.y, q.x);
            return norm(q) < 1.0 + p0_ * std::cos(lobes_ * t);
        }
        case DomainKind::polygon:
        case DomainKind::custom: {
            bool inside = false;
            const auto n = vertices_.size();
            for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
                const Vec2 a = vertices_[i], b = vertices_[j];
                if ((a.y > p.y) != (b.y > p.y)) {
                    const double x = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
                    if (p.x < x) inside = !inside;
                }
            }
            return inside;
        }
    }
    return false;
}

double DomainSpec::diameter() const {
    switch (kind_) {
        case DomainKind::disk: return 2.0 * p0_;
        case DomainKind::ellipse: return 2.0 * p0_;
        default: break;
    }
    std::vector<Vec2> pts = vertices_;
    if (kind_ == DomainKind::star) {
        constexpr int kSamples = 720;
        for (int i = 0; i < kSamples; ++i) pts.push_back(point(kTwoPi * i / kSamples));
    }
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, norm(pts[i] - pts[j]));
    }
    return d;
}

double DomainSpec::curve_perimeter() const {
    if (kind_ == DomainKind::disk) return kTwoPi * p0_;
    if (is_smooth()) {
        double sum = 0.0;
        for (int i = 0; i < kCurveQuadraturePoints; ++i) sum += norm(derivative(kTwoPi * i / kCurveQuadraturePoints));
        return sum * kTwoPi / kCurveQuadraturePoints;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        sum += norm(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
    }
    return sum;
}

double DomainSpec::curve_area() const {
    switch (kind_) {
        case DomainKind::disk: return std::numbers::pi * p0_ * p0_;
        case DomainKind::ellipse: return std::numbers::pi * p0_ * p1_;
        case DomainKind::star: return std::numbers::pi * (1.0 + 0.5 * p0_ * p0_);
        default: break;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        twice += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    return 0.5 * twice;
}

std::optional<double> DomainSpec::min_curvature() const {
    switch (kind_) {
        case DomainKind::disk: return 1.0 / p0_;
        case DomainKind::ellipse: return p1_ / (p0_ * p0_);
        case DomainKind::star: {
            if (p0_ == 0.0) return 1.0;
            // Curvature is periodic with period 2*pi/m; bracket the minimum on a grid, then polish.
            const double span = kTwoPi / lobes_;
            constexpr int kGrid = 2048;
            int best = 0;
            double best_val = std::numeric_limits<double>::infinity();
            for (int i = 0; i < kGrid; ++i) {
                const double v = *curvature(span * i / kGrid);
                if (v < best_val) {
                    best_val = v;
                    best = i;
                }
            }
            auto f = [this](double t) { return *curvature(t); };
            const double lo = span * (best - 1) / kGrid;
            const double hi = span * (best + 1) / kGrid;
            auto res = boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits / 2);
            return std::min(best_val, res.second);
        }
        case DomainKind::polygon:
        case DomainKind::custom:
            return std::nullopt;
    }
    return std::nullopt;
}

bool DomainSpec::is_convex() const {
    if (is_smooth()) return *min_curvature() >= -1e-12;
    const auto n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i], b = vertices_[(i + 1) % n], c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) < -1e-14 * norm(b - a) * norm(c - b)) return false;
    }
    return true;
}

std::string DomainSpec::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind_) {
        case DomainKind::disk: os << "disk(R=" << p0_ << ")"; break;
        case DomainKind::ellipse: os << "ellipse(a=" << p0_ << ",b=" << p1_ << ")"; break;
        case DomainKind::star: os << "star(eps=" << p0_ << ",m=" << lobes_ << ")"; break;
        case DomainKind::polygon: os << "polygon(" << vertices_.size() << " vertices)"; break;
        case DomainKind::custom: os << "custom(" << vertices_.size() << " samples)"; break;
    }
    return os.str();
}

}  // namespace wentzell
