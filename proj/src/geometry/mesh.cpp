#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_map>

#include "wentzell/geometry.hpp"

namespace wentzell {

namespace {

std::uint64_t directed_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

void append_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

}  // namespace

void validate_mesh(const TriangleMesh& mesh) {
    const int nv = static_cast<int>(mesh.vertices.size());
    if (nv < 3 || mesh.triangles.empty()) throw GeometryError("mesh: empty");
    std::unordered_map<std::uint64_t, int> directed;
    for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        for (int v : t) {
            if (v < 0 || v >= nv) {
                throw GeometryError("mesh: triangle " + std::to_string(ti) + " references missing vertex " +
                                    std::to_string(v));
            }
        }
        if (!(signed_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]) > 0.0)) {
            throw GeometryError("mesh: triangle " + std::to_string(ti) + " has non-positive signed area");
        }
        for (int k = 0; k < 3; ++k) {
            if (++directed[directed_key(t[k], t[(k + 1) % 3])] > 1) {
                throw GeometryError("mesh: edge traversed twice in the same direction near triangle " +
                                    std::to_string(ti));
            }
        }
    }
    std::size_t boundary_edges = 0;
    for (const auto& [key, count] : directed) {
        const int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
        if (!directed.count(directed_key(b, a))) ++boundary_edges;
    }
    const auto& loop = mesh.boundary_loop;
    if (loop.size() < 3) throw GeometryError("mesh: boundary loop has fewer than 3 vertices");
    std::set<int> seen;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const int a = loop[i], b = loop[(i + 1) % loop.size()];
        if (a < 0 || a >= nv) throw GeometryError("mesh: boundary loop references missing vertex " + std::to_string(a));
        if (!seen.insert(a).second) throw GeometryError("mesh: boundary loop repeats vertex " + std::to_string(a));
        if (!directed.count(directed_key(a, b)) || directed.count(directed_key(b, a))) {
            throw GeometryError("mesh: boundary loop edge " + std::to_string(a) + "-" + std::to_string(b) +
                                " is not a counterclockwise boundary edge");
        }
    }
    if (boundary_edges != loop.size()) {
        throw GeometryError("mesh: boundary loop covers " + std::to_string(loop.size()) + " of " +
                            std::to_string(boundary_edges) + " boundary edges");
    }
}

MeshParseError::MeshParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string save_mesh(const TriangleMesh& mesh) {
    std::string out;
    out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.triangles.size()) + " " +
           std::to_string(mesh.boundary_loop.size()) + "\n";
    for (const Vec2& v : mesh.vertices) {
        append_double(out, v.x);
        out += ' ';
        append_double(out, v.y);
        out += '\n';
    }
    for (const auto& t : mesh.triangles) {
        out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
    }
    for (int b : mesh.boundary_loop) out += std::to_string(b) + "\n";
    return out;
}

TriangleMesh load_mesh(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](const char* what) -> std::string {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        if (lineno == 0 || std::string(what) == "header") throw MeshParseError(lineno, "no header");
        throw MeshParseError(lineno, std::string("unexpected end of file while reading ") + what);
    };
    auto parse_fields = [&](const std::string& s, auto&... out) {
        const char* p = s.data();
        const char* end = s.data() + s.size();
        auto read_one = [&](auto& value) {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
            auto res = std::from_chars(p, end, value);
            if (res.ec != std::errc()) throw MeshParseError(lineno, "malformed line '" + s + "'");
            p = res.ptr;
        };
        (read_one(out), ...);
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p != end) throw MeshParseError(lineno, "trailing characters in '" + s + "'");
    };

    long nv = 0, nt = 0, nb = 0;
    parse_fields(next_line("header"), nv, nt, nb);
    if (nv < 0 || nt < 0 || nb < 0) throw MeshParseError(lineno, "negative count in header");

    TriangleMesh mesh;
    mesh.vertices.resize(nv);
    for (long i = 0; i < nv; ++i) parse_fields(next_line("vertices"), mesh.vertices[i].x, mesh.vertices[i].y);
    mesh.triangles.resize(nt);
    for (long i = 0; i < nt; ++i) {
        auto& t = mesh.triangles[i];
        parse_fields(next_line("triangles"), t[0], t[1], t[2]);
        for (int v : t) {
            if (v < 0 || v >= nv) {
                throw MeshParseError(lineno, "triangle " + std::to_string(i) + " references missing vertex " +
                                                 std::to_string(v));
            }
        }
    }
    mesh.boundary_loop.resize(nb);
    for (long i = 0; i < nb; ++i) {
        parse_fields(next_line("boundary loop"), mesh.boundary_loop[i]);
        if (mesh.boundary_loop[i] < 0 || mesh.boundary_loop[i] >= nv) {
            throw MeshParseError(lineno, "boundary loop references missing vertex " +
                                             std::to_string(mesh.boundary_loop[i]));
        }
    }
    mesh.h = max_edge_length(mesh);
    validate_mesh(mesh);
    return mesh;
}

}  // namespace wentzell
