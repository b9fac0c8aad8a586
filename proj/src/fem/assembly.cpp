#include <cstdint>
#include <unordered_set>

#include "wentzell/fem.hpp"

namespace wentzell {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

SparseSymMatrix from_triplets(std::size_t n, const Triplets& trips) {
    SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m.setFromTriplets(trips.begin(), trips.end());
    return SparseSymMatrix(std::move(m));
}

double checked_area(const TriangleMesh& mesh, std::size_t ti) {
    const auto& t = mesh.triangles[ti];
    const double A = signed_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
    if (!(A > 0.0)) {
        throw AssemblyError("degenerate triangle " + std::to_string(ti) + " (signed area " + std::to_string(A) + ")");
    }
    return A;
}

// Boundary edges in loop order, after checking that the loop closes through mesh edges.
std::vector<std::array<int, 2>> loop_edges(const TriangleMesh& mesh) {
    const auto& loop = mesh.boundary_loop;
    if (loop.size() < 3) throw AssemblyError("open boundary loop: fewer than 3 vertices");
    std::unordered_set<std::uint64_t> edges;
    auto key = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) edges.insert(key(t[k], t[(k + 1) % 3]));
    }
    std::vector<std::array<int, 2>> out;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const int a = loop[i], b = loop[(i + 1) % loop.size()];
        if (!edges.count(key(a, b))) {
            throw AssemblyError("open boundary loop: " + std::to_string(a) + "-" + std::to_string(b) +
                                " is not a mesh edge");
        }
        if (norm(mesh.vertices[b] - mesh.vertices[a]) == 0.0) {
            throw AssemblyError("zero-length boundary edge at loop position " + std::to_string(i));
        }
        out.push_back({a, b});
    }
    return out;
}

}  // namespace

SparseSymMatrix assemble_domain_stiffness(const TriangleMesh& mesh) {
    Triplets trips;
    trips.reserve(9 * mesh.triangles.size());
    for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const double A = checked_area(mesh, ti);
        // grad(phi_k) = rot90(opposite edge) / (2A)
        Vec2 g[3];
        for (int k = 0; k < 3; ++k) {
            const Vec2 e = mesh.vertices[t[(k + 2) % 3]] - mesh.vertices[t[(k + 1) % 3]];
            g[k] = (0.5 / A) * Vec2{-e.y, e.x};
        }
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) trips.emplace_back(t[a], t[b], A * dot(g[a], g[b]));
        }
    }
    return from_triplets(mesh.vertices.size(), trips);
}

SparseSymMatrix assemble_domain_mass(const TriangleMesh& mesh) {
    Triplets trips;
    trips.reserve(9 * mesh.triangles.size());
    for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const double A = checked_area(mesh, ti);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) trips.emplace_back(t[a], t[b], (a == b ? A / 6.0 : A / 12.0));
        }
    }
    return from_triplets(mesh.vertices.size(), trips);
}

SparseSymMatrix assemble_boundary_mass(const TriangleMesh& mesh) {
    Triplets trips;
    for (const auto& [a, b] : loop_edges(mesh)) {
        const double L = norm(mesh.vertices[b] - mesh.vertices[a]);
        trips.emplace_back(a, a, L / 3.0);
        trips.emplace_back(b, b, L / 3.0);
        trips.emplace_back(a, b, L / 6.0);
        trips.emplace_back(b, a, L / 6.0);
    }
    return from_triplets(mesh.vertices.size(), trips);
}

SparseSymMatrix assemble_boundary_stiffness(const TriangleMesh& mesh) {
    Triplets trips;
    for (const auto& [a, b] : loop_edges(mesh)) {
        const double inv = 1.0 / norm(mesh.vertices[b] - mesh.vertices[a]);
        trips.emplace_back(a, a, inv);
        trips.emplace_back(b, b, inv);
        trips.emplace_back(a, b, -inv);
        trips.emplace_back(b, a, -inv);
    }
    return from_triplets(mesh.vertices.size(), trips);
}

}  // namespace wentzell
