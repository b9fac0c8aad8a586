#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "delaunay.hpp"
#include "wentzell/geometry.hpp"

namespace wentzell {

namespace {

constexpr double kMinAngleTarget = 20.5;   // degrees, refinement trigger
constexpr double kMinAngleContract = 20.0;  // degrees, postcondition
constexpr double kSizeContract = 1.5;       // h <= 1.5 * h_target

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 e = b - a;
    const double len2 = dot(e, e);
    const double s = len2 > 0 ? std::clamp(dot(p - a, e) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + s * e));
}

double triangle_min_angle(Vec2 a, Vec2 b, Vec2 c) {
    const double la = norm(b - c), lb = norm(c - a), lc = norm(a - b);
    auto angle = [](double opp, double s1, double s2) {
        const double cosv = std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2), -1.0, 1.0);
        return std::acos(cosv);
    };
    const double m = std::min({angle(la, lb, lc), angle(lb, lc, la), angle(lc, la, lb)});
    return m * 180.0 / std::numbers::pi;
}

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
    return a + Vec2{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
}

// Structured mesh of a disk: concentric rings with 8*j vertices on ring j.
// The vertex set and connectivity are invariant under rotation by 45 degrees,
// so rotationally paired eigenvalues of orders 1..3 stay exactly paired.
TriangleMesh polar_disk_mesh(const DomainSpec& spec, double h_target) {
    const double R = spec.radius();
    // Ring spacing below h_target keeps the zig-zag diagonals under the size bound.
    const int rings = std::max(2, static_cast<int>(std::ceil(1.15 * R / h_target - 1e-9)));
    constexpr int kBase = 8;
    TriangleMesh mesh;
    auto ring_start = [](int j) { return j == 0 ? 0 : 1 + kBase * j * (j - 1) / 2; };
    mesh.vertices.push_back(spec.center());
    for (int j = 1; j <= rings; ++j) {
        const int nj = kBase * j;
        for (int i = 0; i < nj; ++i) {
            const double theta = 2.0 * std::numbers::pi * i / nj;
            if (j == rings) {
                mesh.vertices.push_back(spec.point(theta));
            } else {
                const double r = R * j / rings;
                mesh.vertices.push_back(spec.center() + Vec2{r * std::cos(theta), r * std::sin(theta)});
            }
        }
    }
    auto vid = [&](int j, int i) {
        if (j == 0) return 0;
        const int nj = kBase * j;
        return ring_start(j) + ((i % nj) + nj) % nj;
    };
    for (int i = 0; i < kBase; ++i) mesh.triangles.push_back({0, vid(1, i), vid(1, i + 1)});
    for (int j = 1; j < rings; ++j) {
        for (int s = 0; s < kBase; ++s) {
            int i = 0, k = 0;
            const int inner0 = s * j, outer0 = s * (j + 1);
            while (i < j || k < j + 1) {
                const double next_inner = static_cast<double>(i + 1) / j;
                const double next_outer = static_cast<double>(k + 1) / (j + 1);
                if (i < j && (k == j + 1 || next_inner < next_outer)) {
                    mesh.triangles.push_back({vid(j, inner0 + i), vid(j + 1, outer0 + k), vid(j, inner0 + i + 1)});
                    ++i;
                } else {
                    mesh.triangles.push_back({vid(j, inner0 + i), vid(j + 1, outer0 + k), vid(j + 1, outer0 + k + 1)});
                    ++k;
                }
            }
        }
    }
    for (int i = 0; i < kBase * rings; ++i) mesh.boundary_loop.push_back(vid(rings, i));
    mesh.h = max_edge_length(mesh);
    return mesh;
}

enum class Role : std::uint8_t { enclosing, ghost, interior, boundary };

class GeneralMesher {
public:
    GeneralMesher(const DomainSpec& spec, double h) : spec_(spec), h_(h) {}

    TriangleMesh run() {
        sample_boundary();
        seed_interior();
        for (int round = 0; round < 4; ++round) {
            rebuild();
            smooth_interior();
        }
        rebuild();
        refine_quality();
        return extract();
    }

private:
    struct Sample {
        double t;
        int vertex = -1;
    };

    void sample_boundary() {
        const double period = spec_.period();
        std::vector<double> ts;
        if (spec_.is_smooth()) {
            const int table = 16384;
            std::vector<double> cum(table + 1, 0.0);
            for (int i = 0; i < table; ++i) {
                const double t0 = period * i / table, t1 = period * (i + 1) / table;
                const double tm = 0.5 * (t0 + t1);
                cum[i + 1] = cum[i] + norm(spec_.derivative(tm)) * (t1 - t0);
            }
            const double L = cum.back();
            const int n = std::max(12, static_cast<int>(std::ceil(L / h_ - 1e-9)));
            int seg = 0;
            for (int j = 0; j < n; ++j) {
                const double s = L * j / n;
                while (seg < table - 1 && cum[seg + 1] < s) ++seg;
                const double frac = (cum[seg + 1] > cum[seg]) ? (s - cum[seg]) / (cum[seg + 1] - cum[seg]) : 0.0;
                ts.push_back(period * (seg + frac) / table);
            }
        } else {
            const auto& v = spec_.vertices();
            for (std::size_t i = 0; i < v.size(); ++i) {
                const double len = norm(v[(i + 1) % v.size()] - v[i]);
                const int pieces = std::max(1, static_cast<int>(std::ceil(len / h_ - 1e-9)));
                for (int k = 0; k < pieces; ++k) ts.push_back(static_cast<double>(i) + static_cast<double>(k) / pieces);
            }
        }
        samples_.clear();
        for (double t : ts) samples_.push_back({t, -1});
    }

    Vec2 sample_point(std::size_t i) const { return spec_.point(samples_[i].t); }

    double distance_to_boundary(Vec2 p) const {
        double d = std::numeric_limits<double>::infinity();
        const std::size_t n = samples_.size();
        for (std::size_t i = 0; i < n; ++i) {
            d = std::min(d, point_segment_distance(p, boundary_pts_[i], boundary_pts_[(i + 1) % n]));
        }
        return d;
    }

    void refresh_boundary_points() {
        boundary_pts_.clear();
        for (std::size_t i = 0; i < samples_.size(); ++i) boundary_pts_.push_back(sample_point(i));
    }

    void seed_interior() {
        refresh_boundary_points();
        Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        Vec2 hi{-lo.x, -lo.y};
        for (Vec2 p : boundary_pts_) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
        const double dy = h_ * std::sqrt(3.0) / 2.0;
        const Vec2 c = 0.5 * (lo + hi);
        const int nx = static_cast<int>(std::ceil((hi.x - lo.x) / h_)) + 2;
        const int ny = static_cast<int>(std::ceil((hi.y - lo.y) / dy)) + 2;
        for (int j = -ny / 2 - 1; j <= ny / 2 + 1; ++j) {
            for (int i = -nx / 2 - 1; i <= nx / 2 + 1; ++i) {
                const Vec2 p = c + Vec2{(i + ((j & 1) ? 0.5 : 0.0)) * h_, j * dy};
                if (spec_.contains(p) && distance_to_boundary(p) >= 0.55 * h_) interior_.push_back(p);
            }
        }
    }

    void rebuild() {
        refresh_boundary_points();
        Vec2 lo = boundary_pts_.front(), hi = lo;
        for (Vec2 p : boundary_pts_) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
        }
        lo = lo - Vec2{2 * h_, 2 * h_};
        hi = hi + Vec2{2 * h_, 2 * h_};
        dt_ = std::make_unique<detail::DelaunayTriangulation>(lo, hi);
        roles_.assign(3, Role::enclosing);
        const std::size_t n = samples_.size();
        for (std::size_t i = 0; i < n; ++i) {
            samples_[i].vertex = add_vertex(boundary_pts_[i], Role::boundary);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 prev = boundary_pts_[(i + n - 1) % n], next = boundary_pts_[(i + 1) % n];
            Vec2 tangent = next - prev;
            if (spec_.is_smooth()) tangent = spec_.derivative(samples_[i].t);
            const double len = norm(tangent);
            if (len == 0.0) continue;
            const Vec2 ghost = boundary_pts_[i] + (h_ / len) * Vec2{tangent.y, -tangent.x};
            if (!spec_.contains(ghost) && distance_to_boundary(ghost) >= 0.5 * h_) add_vertex(ghost, Role::ghost);
        }
        for (Vec2 p : interior_) add_vertex(p, Role::interior);
    }

    int add_vertex(Vec2 p, Role role) {
        const int v = dt_->insert(p);
        if (v >= static_cast<int>(roles_.size())) roles_.resize(v + 1, role);
        return v;
    }

    std::vector<std::array<int, 3>> inside_triangles() const {
        std::vector<std::array<int, 3>> out;
        const auto& pts = dt_->points();
        for (const auto& t : dt_->triangles()) {
            bool ok = true;
            for (int v : t) {
                if (roles_[v] != Role::interior && roles_[v] != Role::boundary) ok = false;
            }
            if (!ok) continue;
            const Vec2 a = pts[t[0]], b = pts[t[1]], c = pts[t[2]];
            if (!(signed_area(a, b, c) > 1e-12 * h_ * h_)) continue;
            if (!spec_.contains((1.0 / 3.0) * (a + b + c))) continue;
            out.push_back(t);
        }
        return out;
    }

    void smooth_interior() {
        const auto tris = inside_triangles();
        const auto& pts = dt_->points();
        std::map<int, std::set<int>> nbrs;
        for (const auto& t : tris) {
            for (int k = 0; k < 3; ++k) {
                if (roles_[t[k]] != Role::interior) continue;
                nbrs[t[k]].insert(t[(k + 1) % 3]);
                nbrs[t[k]].insert(t[(k + 2) % 3]);
            }
        }
        std::vector<Vec2> moved;
        for (int v = 0; v < static_cast<int>(pts.size()); ++v) {
            if (roles_[v] != Role::interior) continue;
            Vec2 p = pts[v];
            auto it = nbrs.find(v);
            if (it != nbrs.end() && !it->second.empty()) {
                Vec2 avg{};
                for (int w : it->second) avg = avg + pts[w];
                avg = (1.0 / static_cast<double>(it->second.size())) * avg;
                if (spec_.contains(avg) && distance_to_boundary(avg) >= 0.3 * h_) p = avg;
            }
            moved.push_back(p);
        }
        interior_ = std::move(moved);
    }

    // Splits boundary segment i (between samples i and i+1) at its parameter midpoint.
    void split_segment(std::size_t i) {
        const std::size_t n = samples_.size();
        const double period = spec_.period();
        const double t0 = samples_[i].t;
        double t1 = samples_[(i + 1) % n].t;
        if (t1 <= t0) t1 += period;
        double tm = 0.5 * (t0 + t1);
        if (tm >= period) tm -= period;
        const Vec2 p = spec_.point(tm);
        const int v = add_vertex(p, Role::boundary);
        samples_.insert(samples_.begin() + static_cast<std::ptrdiff_t>(i + 1), Sample{tm, v});
        boundary_pts_.insert(boundary_pts_.begin() + static_cast<std::ptrdiff_t>(i + 1), p);
    }

    void refine_quality() {
        const std::size_t max_insertions = 50 * (samples_.size() + interior_.size()) + 1000;
        std::size_t insertions = 0;
        for (int pass = 0; pass < 200 && insertions < max_insertions; ++pass) {
            const auto tris = inside_triangles();
            std::unordered_set<std::uint64_t> edges;
            for (const auto& t : tris) {
                for (int k = 0; k < 3; ++k) edges.insert(edge_key(t[k], t[(k + 1) % 3]));
            }
            std::vector<std::size_t> missing;
            for (std::size_t i = 0; i < samples_.size(); ++i) {
                const int a = samples_[i].vertex, b = samples_[(i + 1) % samples_.size()].vertex;
                if (!edges.count(edge_key(a, b))) missing.push_back(i);
            }
            if (!missing.empty()) {
                std::sort(missing.rbegin(), missing.rend());
                for (std::size_t i : missing) split_segment(i);
                insertions += missing.size();
                continue;
            }

            const auto& pts = dt_->points();
            std::vector<Vec2> centers;
            for (const auto& t : tris) {
                const Vec2 a = pts[t[0]], b = pts[t[1]], c = pts[t[2]];
                const double longest = std::max({norm(b - a), norm(c - b), norm(a - c)});
                if (triangle_min_angle(a, b, c) >= kMinAngleTarget && longest <= 1.3 * h_) continue;
                centers.push_back(circumcenter(a, b, c));
            }
            if (centers.empty()) return;

            std::vector<Vec2> accepted;
            std::set<std::size_t> to_split;
            for (Vec2 cc : centers) {
                bool encroaches = false;
                std::size_t nearest = 0;
                double nearest_d = std::numeric_limits<double>::infinity();
                const std::size_t n = samples_.size();
                for (std::size_t i = 0; i < n; ++i) {
                    const Vec2 a = boundary_pts_[i], b = boundary_pts_[(i + 1) % n];
                    if (dot(a - cc, b - cc) < 0.0) {
                        to_split.insert(i);
                        encroaches = true;
                    }
                    const double d = point_segment_distance(cc, a, b);
                    if (d < nearest_d) {
                        nearest_d = d;
                        nearest = i;
                    }
                }
                if (encroaches) continue;
                if (!spec_.contains(cc)) {
                    to_split.insert(nearest);
                    continue;
                }
                bool crowded = false;
                for (Vec2 q : accepted) {
                    if (norm(q - cc) < 0.25 * h_) crowded = true;
                }
                if (!crowded) accepted.push_back(cc);
            }
            if (!to_split.empty()) {
                for (auto it = to_split.rbegin(); it != to_split.rend(); ++it) split_segment(*it);
                insertions += to_split.size();
                continue;
            }
            for (Vec2 cc : accepted) {
                add_vertex(cc, Role::interior);
                interior_.push_back(cc);
            }
            insertions += accepted.size();
        }
    }

    TriangleMesh extract() const {
        const auto tris = inside_triangles();
        const auto& pts = dt_->points();
        std::vector<int> remap(pts.size(), -1);
        TriangleMesh mesh;
        // Boundary vertices first, in loop order.
        for (const Sample& s : samples_) {
            remap[s.vertex] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back(pts[s.vertex]);
            mesh.boundary_loop.push_back(remap[s.vertex]);
        }
        for (const auto& t : tris) {
            for (int v : t) {
                if (remap[v] < 0) {
                    remap[v] = static_cast<int>(mesh.vertices.size());
                    mesh.vertices.push_back(pts[v]);
                }
            }
            mesh.triangles.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
        }
        mesh.h = max_edge_length(mesh);
        return mesh;
    }

    const DomainSpec& spec_;
    double h_;
    std::vector<Sample> samples_;
    std::vector<Vec2> boundary_pts_;
    std::vector<Vec2> interior_;
    std::unique_ptr<detail::DelaunayTriangulation> dt_;
    std::vector<Role> roles_;
};

void check_polygon_corners(const DomainSpec& spec) {
    if (spec.kind() != DomainKind::polygon) return;
    const auto& v = spec.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 prev = v[(i + n - 1) % n], cur = v[i], next = v[(i + 1) % n];
        const Vec2 e1 = prev - cur, e2 = next - cur;
        double angle = std::atan2(cross(e2, e1), dot(e1, e2)) * 180.0 / std::numbers::pi;
        if (angle < 0) angle += 360.0;
        if (angle < kMinAngleContract + 1e-9) {
            throw GeometryError("polygon: interior angle " + std::to_string(angle) + " degrees at vertex " +
                                std::to_string(i) + " is below the 20 degree mesh quality bound");
        }
    }
}

}  // namespace

double max_edge_length(const TriangleMesh& mesh) {
    double h = 0.0;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) h = std::max(h, norm(mesh.vertices[t[k]] - mesh.vertices[t[(k + 1) % 3]]));
    }
    return h;
}

double min_angle_degrees(const TriangleMesh& mesh) {
    double m = 180.0;
    for (const auto& t : mesh.triangles) {
        m = std::min(m, triangle_min_angle(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]));
    }
    return m;
}

TriangleMesh generate_mesh(const DomainSpec& spec, double h_target) {
    if (!(h_target > 0.0) || !(h_target < spec.diameter())) {
        throw GeometryError("generate_mesh: h_target must satisfy 0 < h_target < diameter (" +
                            std::to_string(spec.diameter()) + "), got " + std::to_string(h_target));
    }
    check_polygon_corners(spec);
    TriangleMesh mesh =
        spec.kind() == DomainKind::disk ? polar_disk_mesh(spec, h_target) : GeneralMesher(spec, h_target).run();
    validate_mesh(mesh);
    if (mesh.h > kSizeContract * h_target) {
        throw GeometryError("generate_mesh: could not reach h <= 1.5*h_target for " + spec.describe() +
                            " (h = " + std::to_string(mesh.h) + ")");
    }
    const double angle = min_angle_degrees(mesh);
    if (angle < kMinAngleContract) {
        throw GeometryError("generate_mesh: minimum angle " + std::to_string(angle) + " below 20 degrees for " +
                            spec.describe());
    }
    return mesh;
}

TriangleMesh refine(const TriangleMesh& mesh, const DomainSpec& spec) {
    validate_mesh(mesh);
    TriangleMesh out;
    out.vertices = mesh.vertices;
    std::unordered_map<std::uint64_t, int> midpoint;
    const std::size_t nb = mesh.boundary_loop.size();
    const double period = spec.period();
    std::vector<int> new_loop;
    new_loop.reserve(2 * nb);
    for (std::size_t i = 0; i < nb; ++i) {
        const int a = mesh.boundary_loop[i], b = mesh.boundary_loop[(i + 1) % nb];
        const double ta = spec.parameter_of(mesh.vertices[a]);
        double tb = spec.parameter_of(mesh.vertices[b]);
        if (tb <= ta) tb += period;
        double tm = 0.5 * (ta + tb);
        if (tm >= period) tm -= period;
        const int m = static_cast<int>(out.vertices.size());
        out.vertices.push_back(spec.point(tm));
        midpoint[edge_key(a, b)] = m;
        new_loop.push_back(a);
        new_loop.push_back(m);
    }
    auto mid = [&](int a, int b) {
        auto [it, inserted] = midpoint.try_emplace(edge_key(a, b), static_cast<int>(out.vertices.size()));
        if (inserted) out.vertices.push_back(0.5 * (mesh.vertices[a] + mesh.vertices[b]));
        return it->second;
    };
    out.triangles.reserve(4 * mesh.triangles.size());
    for (const auto& t : mesh.triangles) {
        const int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
        out.triangles.push_back({t[0], ab, ca});
        out.triangles.push_back({ab, t[1], bc});
        out.triangles.push_back({ca, bc, t[2]});
        out.triangles.push_back({ab, bc, ca});
    }
    out.boundary_loop = std::move(new_loop);
    out.h = max_edge_length(out);
    validate_mesh(out);
    return out;
}

}  // namespace wentzell
