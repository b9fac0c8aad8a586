#pragma once

#include <array>
#include <vector>

#include "wentzell/geometry.hpp"

namespace wentzell::detail {

// Incremental Bowyer-Watson triangulation inside a large enclosing triangle.
// Vertices 0..2 are the enclosing triangle's corners.
class DelaunayTriangulation {
public:
    DelaunayTriangulation(Vec2 lo, Vec2 hi);

    int insert(Vec2 p);

    const std::vector<Vec2>& points() const { return points_; }
    static constexpr int kFirstRealVertex = 3;

    // Alive triangles, counterclockwise.
    std::vector<std::array<int, 3>> triangles() const;

private:
    struct Tri {
        std::array<int, 3> v;
        std::array<int, 3> nbr;  // nbr[i] is across the edge opposite v[i]
        bool alive = true;
    };

    int locate(Vec2 p) const;
    bool in_circumcircle(const Tri& t, Vec2 p) const;

    std::vector<Vec2> points_;
    std::vector<Tri> tris_;
    int hint_ = 0;
    // scratch buffers reused across insertions
    std::vector<int> cavity_;
    std::vector<char> in_cavity_;
};

}  // namespace wentzell::detail
