#include <charconv>

#include "wentzell/fem.hpp"

namespace wentzell {

SparseSymMatrix::SparseSymMatrix(SparseMatrix m) : m_(std::move(m)) {
    m_.makeCompressed();
}

Eigen::MatrixXd SparseSymMatrix::dense_block(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> row_pos(static_cast<std::size_t>(m_.rows()), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = static_cast<int>(r);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (SparseMatrix::InnerIterator it(m_, cols[c]); it; ++it) {
            const int r = row_pos[it.row()];
            if (r >= 0) out(r, static_cast<Eigen::Index>(c)) = it.value();
        }
    }
    return out;
}

std::string SparseSymMatrix::to_coordinate_text() const {
    std::string out;
    char buf[64];
    for (int k = 0; k < m_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(m_, k); it; ++it) {
            out += std::to_string(it.row()) + " " + std::to_string(it.col()) + " ";
            auto res = std::to_chars(buf, buf + sizeof(buf), it.value());
            out.append(buf, res.ptr);
            out += '\n';
        }
    }
    return out;
}

DofPartition make_partition(const TriangleMesh& mesh) {
    DofPartition p;
    std::vector<char> on_boundary(mesh.vertices.size(), 0);
    for (int b : mesh.boundary_loop) on_boundary[b] = 1;
    p.boundary = mesh.boundary_loop;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (!on_boundary[i]) p.interior.push_back(static_cast<int>(i));
    }
    return p;
}

}  // namespace wentzell
