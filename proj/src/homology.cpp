#include "pokertopo/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pokertopo {
namespace {

// Rank over GF(2) of a matrix given as dense bit rows.
std::size_t rank_mod2(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t p = rank;
        while (p < rows.size() && !(rows[p][w] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (rows[i][w] & bit))
                for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

BoundaryMatrix boundary_matrix(const FaceTable& faces, const FaceTable& facets) {
    if (facets.dim() + 1 != faces.dim()) throw std::invalid_argument("boundary_matrix: dimensions do not match");
    BoundaryMatrix b;
    b.dimension = faces.dim();
    b.matrix = SparseIntMatrix(facets.size(), faces.size());
    std::vector<std::uint32_t> facet(facets.width());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        const auto f = faces[j];
        auto& col = b.matrix.columns[j];
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) facet[w++] = f[i];
            const auto row = facets.find(facet);
            if (row == facets.size()) throw std::logic_error("boundary_matrix: facet missing from table");
            col.push_back({static_cast<std::uint32_t>(row), drop % 2 == 0 ? 1 : -1});
        }
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
    }
    return b;
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k) {
    const auto faces = k.faces_by_dimension();
    std::vector<BoundaryMatrix> out;
    for (std::size_t d = 1; d < faces.size(); ++d) out.push_back(boundary_matrix(faces[d], faces[d - 1]));
    return out;
}

std::vector<std::size_t> HomologyReport::betti() const {
    std::vector<std::size_t> out;
    for (const auto& g : groups) out.push_back(g.betti);
    return out;
}

bool HomologyReport::torsion_free() const {
    for (const auto& g : groups)
        if (!g.torsion.empty()) return false;
    return true;
}

long long HomologyReport::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < groups.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].betti);
    return reduced ? chi + 1 : chi;
}

std::vector<std::string> HomologyReport::lines() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < groups.size(); ++k) {
        std::string s = std::to_string(k) + ": ";
        std::string body;
        if (groups[k].betti) body = "Z^" + std::to_string(groups[k].betti);
        for (const auto& t : groups[k].torsion) body += (body.empty() ? "" : " + ") + std::string("Z/") + t.str();
        out.push_back(s + (body.empty() ? "0" : body));
    }
    return out;
}

HomologyReport homology(const SimplicialComplex& k, bool reduced) {
    HomologyReport report;
    report.reduced = reduced;
    const auto faces = k.faces_by_dimension();
    if (faces.empty()) return report;
    const std::size_t top = faces.size() - 1;

    // snf[d] for the boundary from d-faces; d = 0 is the augmentation.
    std::vector<SmithForm> snf(top + 2);
    if (reduced) {
        snf[0].rank = 1;
        snf[0].unit_factors = 1;
    }
    for (std::size_t d = 1; d <= top; ++d) snf[d] = smith_normal_form(boundary_matrix(faces[d], faces[d - 1]).matrix);

    for (std::size_t d = 0; d <= top; ++d) {
        HomologyGroup g;
        g.betti = faces[d].size() - snf[d].rank - snf[d + 1].rank;
        g.torsion = snf[d + 1].torsion;
        report.groups.push_back(std::move(g));
    }
    return report;
}

std::vector<std::size_t> betti_mod2(const SimplicialComplex& k, bool reduced) {
    const auto faces = k.faces_by_dimension();
    if (faces.empty()) return {};
    const std::size_t top = faces.size() - 1;
    std::vector<std::size_t> rank(top + 2, 0);
    if (reduced) rank[0] = 1;
    for (std::size_t d = 1; d <= top; ++d) {
        const auto b = boundary_matrix(faces[d], faces[d - 1]);
        const std::size_t words = (b.matrix.cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(b.matrix.rows, std::vector<std::uint64_t>(words, 0));
        for (std::size_t j = 0; j < b.matrix.cols; ++j)
            for (const auto& e : b.matrix.columns[j]) rows[e.row][j / 64] |= std::uint64_t{1} << (j % 64);
        rank[d] = rank_mod2(std::move(rows), b.matrix.cols);
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= top; ++d) out.push_back(faces[d].size() - rank[d] - rank[d + 1]);
    return out;
}

}  // namespace pokertopo
