#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pokertopo/tournament.hpp"

namespace pokertopo {

using Face = std::vector<std::uint32_t>;  // sorted vertex ids

/// All faces of one dimension, stored as sorted rows of width dim + 1.
class FaceTable {
public:
    FaceTable() = default;
    explicit FaceTable(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    std::size_t width() const { return static_cast<std::size_t>(dim_ + 1); }
    std::size_t size() const { return dim_ < 0 ? 0 : data_.size() / width(); }
    std::span<const std::uint32_t> operator[](std::size_t i) const { return {data_.data() + i * width(), width()}; }

    void push_back(std::span<const std::uint32_t> face) { data_.insert(data_.end(), face.begin(), face.end()); }
    /// Sorts rows lexicographically and drops duplicates.
    void normalize();
    /// Row index of a face, or size() when absent. Requires normalize().
    std::size_t find(std::span<const std::uint32_t> face) const;

private:
    int dim_ = -1;
    std::vector<std::uint32_t> data_;
};

/// A finite abstract simplicial complex kept as its maximal faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Faces are given by vertex id into `labels`; non-maximal faces are dropped
    /// and every label becomes a vertex.
    SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces);
    /// Skips the maximality filter: `faces` must be pairwise incomparable
    /// and cover every vertex.
    static SimplicialComplex from_maximal_faces(std::vector<std::string> labels, std::vector<Face> faces);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t vertex_count() const { return labels_.size(); }
    /// Sorted lexicographically.
    const std::vector<Face>& maximal_faces() const { return maximal_; }
    /// -1 for the void complex.
    int dimension() const;

    bool contains(std::span<const std::uint32_t> face) const;
    bool contains_labels(const std::vector<std::string>& face) const;

    /// faces_by_dimension()[d] holds every d-face.
    std::vector<FaceTable> faces_by_dimension() const;
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    /// Maximal faces rendered as sorted label sets, sorted; used to compare
    /// complexes whose vertex ids differ.
    std::vector<std::vector<std::string>> labelled_faces() const;
    bool same_faces(const SimplicialComplex& other) const { return labelled_faces() == other.labelled_faces(); }

    /// Induced subcomplex on the given labels.
    SimplicialComplex induced(const std::vector<std::string>& labels) const;

private:
    std::vector<std::string> labels_;
    std::vector<Face> maximal_;
};

/// True iff the relation restricted to `vertices` is a total order.
/// Throws std::invalid_argument on out-of-range ids.
bool is_simplex(const Tournament& t, std::span<const std::uint32_t> vertices);

/// Complex of all subsets on which the relation is a total order. Maximal
/// faces are found by growing chains top-down through the "beaten by all
/// chosen" set while tracking vertices that could still be inserted.
SimplicialComplex order_complex(const Tournament& t);

/// Faces are unions of a face from each side. Throws on shared labels.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

std::vector<std::size_t> f_vector(const SimplicialComplex& k);

/// Complex file: one maximal face per line, labels separated by spaces.
void write_complex(std::ostream& out, const SimplicialComplex& k);
SimplicialComplex read_complex(std::istream& in);

}  // namespace pokertopo
