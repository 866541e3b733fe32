#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pokertopo/rational.hpp"

namespace pokertopo {

/// Dense bitset over vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool empty() const;
    std::size_t count() const;
    /// First member at or after i, or universe() if none.
    std::size_t next(std::size_t i) const;
    std::vector<std::uint32_t> members() const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    bool is_subset_of(const VertexSet& o) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Antisymmetric "beats" relation on labelled vertices. Edge u -> v means u beats v.
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_[v]; }
    std::optional<std::size_t> find(const std::string& label) const;
    /// Throws std::invalid_argument for unknown labels.
    std::size_t id(const std::string& label) const;

    /// Throws if u == v or the reverse edge is present.
    void add_edge(std::size_t u, std::size_t v, std::optional<Rational> probability = std::nullopt);

    bool beats(std::size_t u, std::size_t v) const { return out_[u].test(v); }
    bool comparable(std::size_t u, std::size_t v) const { return beats(u, v) || beats(v, u); }
    const VertexSet& beaten_by(std::size_t u) const { return out_[u]; }
    const VertexSet& beaters_of(std::size_t v) const { return in_[v]; }
    std::optional<Rational> probability(std::size_t u, std::size_t v) const;

    std::size_t edge_count() const { return edge_count_; }
    /// Edges sorted by (u, v).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Induced sub-tournament on the given vertex ids, in the given order.
    Tournament induced(const std::vector<std::size_t>& vertices) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> probability_;
    std::size_t edge_count_ = 0;
};

/// Relation file: one edge per line "u v [prob]"; a line with a single label
/// declares an isolated vertex; '#' starts a comment. Probabilities are
/// written as exact fractions.
Tournament read_relation(std::istream& in);
void write_relation(std::ostream& out, const Tournament& t);

}  // namespace pokertopo
