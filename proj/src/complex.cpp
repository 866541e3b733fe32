#include "pokertopo/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pokertopo/cards.hpp"

namespace pokertopo {
namespace {

bool is_subset(const Face& small, const Face& big) { return std::includes(big.begin(), big.end(), small.begin(), small.end()); }

struct ChainSearch {
    const Tournament& t;
    std::vector<std::uint32_t> chain;
    std::vector<Face> found;

    void extend(const VertexSet& below, const VertexSet& insertable) {
        for (std::size_t v = below.next(0); v < below.universe(); v = below.next(v + 1)) {
            VertexSet next_below = below & t.beaten_by(v);
            VertexSet next_insert = (insertable | below) & t.beaters_of(v);
            chain.push_back(static_cast<std::uint32_t>(v));
            if (next_below.empty()) {
                if (next_insert.empty()) {
                    Face f = chain;
                    std::sort(f.begin(), f.end());
                    found.push_back(std::move(f));
                }
            } else if (!dominated(next_below, next_insert)) {
                extend(next_below, next_insert);
            }
            chain.pop_back();
        }
    }

    // Some insertable vertex beats every remaining candidate, so it can be
    // inserted into every completion of this chain.
    bool dominated(const VertexSet& below, const VertexSet& insertable) const {
        for (std::size_t w = insertable.next(0); w < insertable.universe(); w = insertable.next(w + 1))
            if (below.is_subset_of(t.beaten_by(w))) return true;
        return false;
    }
};

SimplicialComplex from_labels(const std::vector<std::vector<std::string>>& faces) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<Face> out;
    for (const auto& f : faces) {
        Face face;
        for (const auto& l : f) {
            auto [it, inserted] = ids.emplace(l, static_cast<std::uint32_t>(labels.size()));
            if (inserted) labels.push_back(l);
            face.push_back(it->second);
        }
        out.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(labels), std::move(out));
}

}  // namespace

void FaceTable::normalize() {
    const std::size_t w = width();
    const std::size_t n = size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return data_.begin() + static_cast<std::ptrdiff_t>(i * w); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(w), row(b), row(b) + static_cast<std::ptrdiff_t>(w)); });
    std::vector<std::uint32_t> sorted;
    sorted.reserve(data_.size());
    for (std::size_t k = 0; k < n; ++k) {
        auto r = row(order[k]);
        if (k > 0 && std::equal(r, r + static_cast<std::ptrdiff_t>(w), sorted.end() - static_cast<std::ptrdiff_t>(w))) continue;
        sorted.insert(sorted.end(), r, r + static_cast<std::ptrdiff_t>(w));
    }
    data_ = std::move(sorted);
}

std::size_t FaceTable::find(std::span<const std::uint32_t> face) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto r = (*this)[mid];
        if (std::lexicographical_compare(r.begin(), r.end(), face.begin(), face.end())) lo = mid + 1;
        else hi = mid;
    }
    if (lo < size() && std::ranges::equal((*this)[lo], face)) return lo;
    return size();
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces) : labels_(std::move(labels)) {
    {
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("duplicate vertex label");
    }
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (auto v : f)
            if (v >= labels_.size()) throw std::invalid_argument("face references unknown vertex");
    }
    for (std::uint32_t v = 0; v < labels_.size(); ++v) faces.push_back({v});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
        if (f.empty()) continue;
        bool covered = std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) { return m.size() > f.size() && is_subset(f, m); });
        if (!covered) maximal_.push_back(std::move(f));
    }
    std::sort(maximal_.begin(), maximal_.end());
}

SimplicialComplex SimplicialComplex::from_maximal_faces(std::vector<std::string> labels, std::vector<Face> faces) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    k.maximal_ = std::move(faces);
    return k;
}

int SimplicialComplex::dimension() const {
    std::size_t m = 0;
    for (const auto& f : maximal_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
}

bool SimplicialComplex::contains(std::span<const std::uint32_t> face) const {
    Face f(face.begin(), face.end());
    std::sort(f.begin(), f.end());
    if (f.empty()) return true;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) { return is_subset(f, m); });
}

bool SimplicialComplex::contains_labels(const std::vector<std::string>& face) const {
    Face f;
    for (const auto& l : face) {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) return false;
        f.push_back(static_cast<std::uint32_t>(it - labels_.begin()));
    }
    return contains(f);
}

std::vector<FaceTable> SimplicialComplex::faces_by_dimension() const {
    const int dim = dimension();
    std::vector<FaceTable> tables;
    for (int d = 0; d <= dim; ++d) tables.emplace_back(d);
    std::vector<std::uint32_t> sub;
    for (const auto& m : maximal_) {
        if (m.size() > 30) throw std::length_error("maximal face too large to expand");
        const std::uint32_t subsets = 1u << m.size();
        for (std::uint32_t s = 1; s < subsets; ++s) {
            sub.clear();
            for (std::size_t i = 0; i < m.size(); ++i)
                if ((s >> i) & 1) sub.push_back(m[i]);
            tables[sub.size() - 1].push_back(sub);
        }
    }
    for (auto& t : tables) t.normalize();
    return tables;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& t : faces_by_dimension()) out.push_back(t.size());
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    const auto f = f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    return chi;
}

std::vector<std::vector<std::string>> SimplicialComplex::labelled_faces() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : maximal_) {
        std::vector<std::string> l;
        for (auto v : f) l.push_back(labels_[v]);
        std::sort(l.begin(), l.end());
        out.push_back(std::move(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<std::string>& labels) const {
    std::vector<std::uint32_t> remap(labels_.size(), UINT32_MAX);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find(labels_.begin(), labels_.end(), labels[i]);
        if (it == labels_.end()) throw std::invalid_argument("unknown vertex '" + labels[i] + "'");
        remap[static_cast<std::size_t>(it - labels_.begin())] = static_cast<std::uint32_t>(i);
    }
    std::vector<Face> faces;
    for (const auto& m : maximal_) {
        Face f;
        for (auto v : m)
            if (remap[v] != UINT32_MAX) f.push_back(remap[v]);
        if (!f.empty()) faces.push_back(std::move(f));
    }
    return SimplicialComplex(labels, std::move(faces));
}

bool is_simplex(const Tournament& t, std::span<const std::uint32_t> vertices) {
    for (auto v : vertices)
        if (v >= t.size()) throw std::invalid_argument("vertex id out of range");
    // A tournament is a total order iff its out-degrees are exactly 0..k-1.
    const std::size_t k = vertices.size();
    std::vector<bool> seen(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (vertices[i] == vertices[j]) throw std::invalid_argument("repeated vertex in face");
            if (!t.comparable(vertices[i], vertices[j])) return false;
            out += t.beats(vertices[i], vertices[j]);
        }
        if (seen[out]) return false;
        seen[out] = true;
    }
    return true;
}

SimplicialComplex order_complex(const Tournament& t) {
    ChainSearch search{t, {}, {}};
    VertexSet all(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) all.set(v);
    if (t.size() > 0) search.extend(all, VertexSet(t.size()));
    return SimplicialComplex::from_maximal_faces(t.labels(), std::move(search.found));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) {
        if (std::find(a.labels().begin(), a.labels().end(), l) != a.labels().end()) throw std::invalid_argument("join: shared vertex label '" + l + "'");
        labels.push_back(l);
    }
    const auto offset = static_cast<std::uint32_t>(a.vertex_count());
    std::vector<Face> lhs = a.maximal_faces(), rhs = b.maximal_faces();
    if (lhs.empty()) lhs.push_back({});
    if (rhs.empty()) rhs.push_back({});
    std::vector<Face> faces;
    for (const auto& f : lhs) {
        for (const auto& g : rhs) {
            Face u = f;
            for (auto v : g) u.push_back(v + offset);
            if (!u.empty()) faces.push_back(std::move(u));
        }
    }
    return SimplicialComplex(std::move(labels), std::move(faces));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k) { return k.f_vector(); }

void write_complex(std::ostream& out, const SimplicialComplex& k) {
    for (const auto& f : k.maximal_faces()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << k.labels()[f[i]];
        out << '\n';
    }
}

SimplicialComplex read_complex(std::istream& in) {
    std::vector<std::vector<std::string>> faces;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> face;
        for (std::string tok; ls >> tok;) face.push_back(tok);
        if (!face.empty()) faces.push_back(std::move(face));
    }
    return from_labels(faces);
}

}  // namespace pokertopo
