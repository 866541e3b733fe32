#pragma once

#include <string>
#include <vector>

#include "pokertopo/complex.hpp"
#include "pokertopo/rational.hpp"
#include "pokertopo/smith.hpp"

namespace pokertopo {

/// Boundary map from d-faces (columns) to (d-1)-faces (rows), both in the
/// lexicographic order of FaceTable. The facet dropping the i-th smallest
/// vertex gets sign (-1)^i.
struct BoundaryMatrix {
    int dimension = 0;
    SparseIntMatrix matrix;
};

/// Matrices for d = 1..dim.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k);
BoundaryMatrix boundary_matrix(const FaceTable& faces, const FaceTable& facets);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

struct HomologyReport {
    bool reduced = false;
    /// groups[k] = H_k for k = 0..dim.
    std::vector<HomologyGroup> groups;

    std::vector<std::size_t> betti() const;
    bool torsion_free() const;
    long long euler_characteristic() const;
    /// "k: Z^b + Z/d1 + ..." per dimension; "0" for trivial groups.
    std::vector<std::string> lines() const;
};

/// Integer homology via Smith normal form. Reduced homology augments C_0 by
/// the map to Z (rank 1 on a nonempty complex).
HomologyReport homology(const SimplicialComplex& k, bool reduced);

/// Betti numbers with coefficients in the two-element field, by plain
/// Gaussian elimination on bit vectors. Independent of the persistence code.
std::vector<std::size_t> betti_mod2(const SimplicialComplex& k, bool reduced);

}  // namespace pokertopo
