#include "pokertopo/tournament.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "pokertopo/cards.hpp"

namespace pokertopo {

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t VertexSet::next(std::size_t i) const {
    if (i >= n_) return n_;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (w) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        if (++wi >= words_.size()) return n_;
        w = words_[wi];
    }
}

std::vector<std::uint32_t> VertexSet::members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        for (std::uint64_t w = words_[wi]; w; w &= w - 1) out.push_back(static_cast<std::uint32_t>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
    }
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

Tournament::Tournament(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
    }
    out_.assign(labels_.size(), VertexSet(labels_.size()));
    in_.assign(labels_.size(), VertexSet(labels_.size()));
}

std::optional<std::size_t> Tournament::find(const std::string& label) const {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t Tournament::id(const std::string& label) const {
    if (auto v = find(label)) return *v;
    throw std::invalid_argument("unknown vertex '" + label + "'");
}

void Tournament::add_edge(std::size_t u, std::size_t v, std::optional<Rational> probability) {
    if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on '" + labels_[u] + "'");
    if (beats(v, u)) throw std::invalid_argument("edge " + labels_[u] + " -> " + labels_[v] + " contradicts the reverse edge");
    if (!beats(u, v)) {
        out_[u].set(v);
        in_[v].set(u);
        ++edge_count_;
    }
    if (probability) probability_[{u, v}] = *probability;
}

std::optional<Rational> Tournament::probability(std::size_t u, std::size_t v) const {
    if (auto it = probability_.find({u, v}); it != probability_.end()) return it->second;
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Tournament::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (auto v : out_[u].members()) out.emplace_back(u, v);
    return out;
}

Tournament Tournament::induced(const std::vector<std::size_t>& vertices) const {
    std::vector<std::string> labels;
    for (auto v : vertices) labels.push_back(labels_.at(v));
    Tournament t(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (beats(vertices[i], vertices[j])) t.add_edge(i, j, probability(vertices[i], vertices[j]));
    return t;
}

Tournament read_relation(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> seen;
    struct Edge {
        std::size_t u, v;
        std::optional<Rational> p;
        int line;
    };
    std::vector<Edge> edges;
    auto intern = [&](const std::string& s) {
        auto [it, inserted] = seen.emplace(s, labels.size());
        if (inserted) labels.push_back(s);
        return it->second;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() > 3) throw ParseError("relation line " + std::to_string(lineno) + ": expected 'u v [prob]'");
        const auto u = intern(tok[0]);
        if (tok.size() == 1) continue;
        const auto v = intern(tok[1]);
        std::optional<Rational> p;
        if (tok.size() == 3) p = parse_rational(tok[2]);
        edges.push_back({u, v, p, lineno});
    }
    Tournament t(labels);
    for (const auto& e : edges) {
        try {
            t.add_edge(e.u, e.v, e.p);
        } catch (const std::invalid_argument& ex) {
            throw ParseError("relation line " + std::to_string(e.line) + ": " + ex.what());
        }
    }
    return t;
}

void write_relation(std::ostream& out, const Tournament& t) {
    VertexSet touched(t.size());
    for (auto [u, v] : t.edges()) {
        touched.set(u);
        touched.set(v);
        out << t.label(u) << ' ' << t.label(v);
        if (auto p = t.probability(u, v)) out << ' ' << to_string(*p);
        out << '\n';
    }
    for (std::size_t v = 0; v < t.size(); ++v)
        if (!touched.test(v)) out << t.label(v) << '\n';
}

}  // namespace pokertopo
