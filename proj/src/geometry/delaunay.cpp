#include "delaunay.hpp"

#include <algorithm>
#include <stdexcept>

namespace wentzell::detail {

namespace {

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

}  // namespace

DelaunayTriangulation::DelaunayTriangulation(Vec2 lo, Vec2 hi) {
    const double d = std::max({hi.x - lo.x, hi.y - lo.y, 1e-300});
    const Vec2 c = 0.5 * (lo + hi);
    points_ = {{c.x - 20.0 * d, c.y - 10.0 * d}, {c.x + 20.0 * d, c.y - 10.0 * d}, {c.x, c.y + 20.0 * d}};
    tris_.push_back(Tri{{0, 1, 2}, {-1, -1, -1}, true});
}

bool DelaunayTriangulation::in_circumcircle(const Tri& t, Vec2 p) const {
    const Vec2 a = points_[t.v[0]] - p;
    const Vec2 b = points_[t.v[1]] - p;
    const Vec2 c = points_[t.v[2]] - p;
    const double det = (a.x * a.x + a.y * a.y) * cross(b, c) - (b.x * b.x + b.y * b.y) * cross(a, c) +
                       (c.x * c.x + c.y * c.y) * cross(a, b);
    return det > 0.0;
}

int DelaunayTriangulation::locate(Vec2 p) const {
    int t = hint_;
    if (t < 0 || t >= static_cast<int>(tris_.size()) || !tris_[t].alive) {
        t = static_cast<int>(tris_.size()) - 1;
        while (t > 0 && !tris_[t].alive) --t;
    }
    const int max_steps = static_cast<int>(tris_.size()) + 16;
    for (int step = 0; step < max_steps; ++step) {
        const Tri& tri = tris_[t];
        bool moved = false;
        for (int k = 0; k < 3; ++k) {
            const int i = (k + step) % 3;
            const Vec2 a = points_[tri.v[(i + 1) % 3]];
            const Vec2 b = points_[tri.v[(i + 2) % 3]];
            if (orient(a, b, p) < 0.0) {
                if (tri.nbr[i] < 0) throw std::runtime_error("delaunay: point outside enclosing triangle");
                t = tri.nbr[i];
                moved = true;
                break;
            }
        }
        if (!moved) return t;
    }
    // Walk failed to converge; fall back to a scan.
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
        const Tri& tri = tris_[i];
        if (!tri.alive) continue;
        const Vec2 a = points_[tri.v[0]], b = points_[tri.v[1]], c = points_[tri.v[2]];
        if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) return i;
    }
    throw std::runtime_error("delaunay: point location failed");
}

int DelaunayTriangulation::insert(Vec2 p) {
    const int t0 = locate(p);
    for (int v : tris_[t0].v) {
        const Vec2 q = points_[v];
        if (q.x == p.x && q.y == p.y) return v;
    }

    in_cavity_.resize(tris_.size(), 0);
    cavity_.clear();
    cavity_.push_back(t0);
    in_cavity_[t0] = 1;
    for (std::size_t head = 0; head < cavity_.size(); ++head) {
        const Tri& tri = tris_[cavity_[head]];
        for (int nb : tri.nbr) {
            if (nb < 0 || in_cavity_[nb]) continue;
            if (in_circumcircle(tris_[nb], p)) {
                in_cavity_[nb] = 1;
                cavity_.push_back(nb);
            }
        }
    }

    struct Edge {
        int a, b, outside, owner;
    };
    std::vector<Edge> edges;
    // The cavity must be star-shaped with respect to p; drop triangles that break this.
    for (;;) {
        edges.clear();
        int offender = -1;
        for (int t : cavity_) {
            if (!in_cavity_[t]) continue;
            const Tri& tri = tris_[t];
            for (int i = 0; i < 3; ++i) {
                const int nb = tri.nbr[i];
                if (nb >= 0 && in_cavity_[nb]) continue;
                const int a = tri.v[(i + 1) % 3];
                const int b = tri.v[(i + 2) % 3];
                if (orient(points_[a], points_[b], p) <= 0.0 && t != t0) offender = t;
                edges.push_back({a, b, nb, t});
            }
        }
        if (offender < 0) break;
        in_cavity_[offender] = 0;
    }

    const int pi = static_cast<int>(points_.size());
    points_.push_back(p);
    const int first_new = static_cast<int>(tris_.size());
    for (const Edge& e : edges) {
        tris_.push_back(Tri{{pi, e.a, e.b}, {e.outside, -1, -1}, true});
    }
    const int count = static_cast<int>(edges.size());
    for (int k = 0; k < count; ++k) {
        Tri& nt = tris_[first_new + k];
        for (int j = 0; j < count; ++j) {
            const Tri& other = tris_[first_new + j];
            if (other.v[1] == nt.v[2]) nt.nbr[1] = first_new + j;
            if (other.v[2] == nt.v[1]) nt.nbr[2] = first_new + j;
        }
        const Edge& e = edges[k];
        if (e.outside >= 0) {
            for (int& back : tris_[e.outside].nbr) {
                if (back == e.owner) back = first_new + k;
            }
        }
    }
    for (int t : cavity_) {
        if (in_cavity_[t]) tris_[t].alive = false;
        in_cavity_[t] = 0;
    }
    hint_ = first_new;
    return pi;
}

std::vector<std::array<int, 3>> DelaunayTriangulation::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris_) {
        if (t.alive) out.push_back(t.v);
    }
    return out;
}

}  // namespace wentzell::detail
