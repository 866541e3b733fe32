#pragma once

#include <cstdint>
#include <vector>

#include "pokertopo/rational.hpp"

namespace pokertopo {

/// Column-major sparse integer matrix.
struct SparseIntMatrix {
    struct Entry {
        std::uint32_t row;
        std::int64_t value;
    };
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Each column sorted by row, no explicit zeros.
    std::vector<std::vector<Entry>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
    std::vector<std::vector<std::int64_t>> to_dense() const;
    std::size_t nonzeros() const;
};

/// Invariant factors d1 | d2 | ... | d_rank, all positive. Unit factors are
/// only counted since boundary matrices produce millions of them.
struct SmithForm {
    std::size_t rank = 0;
    std::size_t unit_factors = 0;
    /// Factors greater than one, in divisibility order.
    std::vector<BigInt> torsion;

    std::vector<BigInt> invariant_factors() const;
};

/// Sparse elimination on unit pivots (int64 with overflow detection, falling
/// back to arbitrary precision), then a dense Smith reduction of whatever is
/// left over.
SmithForm smith_normal_form(const SparseIntMatrix& m);
SmithForm smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense);

/// Plain dense Smith reduction over arbitrary-precision integers.
SmithForm smith_normal_form_dense(std::vector<std::vector<BigInt>> a);

}  // namespace pokertopo
