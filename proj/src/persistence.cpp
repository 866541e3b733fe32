#include "pokertopo/persistence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pokertopo {
namespace {

class MemoSource final : public CountsSource {
public:
    explicit MemoSource(const CountsSource& inner) : inner_(inner) {}
    MatchupCount counts(const HolePair& a, const HolePair& b) const override {
        const auto key = std::make_pair(a.index(), b.index());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const auto c = inner_.counts(a, b);
        memo_[key] = c;
        memo_[{b.index(), a.index()}] = c.swapped();
        return c;
    }

private:
    const CountsSource& inner_;
    mutable std::map<std::pair<int, int>, MatchupCount> memo_;
};

struct FilteredFace {
    Face vertices;  // global ids, sorted
    std::vector<std::string> sort_key;
    std::size_t stage = 0;
};

}  // namespace

Rational persistence_sentinel() { return Rational(1, 2); }

std::size_t PersistenceDiagram::alive(int dimension, const Rational& threshold) const {
    std::size_t n = 0;
    for (const auto& p : points)
        if (p.dimension == dimension && p.birth >= threshold && (p.essential || p.death < threshold)) ++n;
    return n;
}

PersistenceDiagram persistence(const Filtration& filtration) {
    // Global vertex ids across stages.
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> ids;
    for (const auto& stage : filtration)
        for (const auto& l : stage.complex.labels())
            if (ids.emplace(l, static_cast<std::uint32_t>(labels.size())).second) labels.push_back(l);

    for (std::size_t s = 1; s < filtration.size(); ++s) {
        if (!(filtration[s].threshold < filtration[s - 1].threshold)) throw FiltrationError("filtration thresholds must strictly decrease");
        const auto& prev = filtration[s - 1].complex;
        const auto& next = filtration[s].complex;
        for (const auto& f : prev.maximal_faces()) {
            std::vector<std::string> face;
            for (auto v : f) face.push_back(prev.labels()[v]);
            if (!next.contains_labels(face)) {
                std::string msg = "filtration not nested: face {";
                for (std::size_t i = 0; i < face.size(); ++i) msg += (i ? " " : "") + face[i];
                throw FiltrationError(msg + "} at threshold " + to_string(filtration[s - 1].threshold) + " missing at " + to_string(filtration[s].threshold));
            }
        }
    }

    std::map<Face, std::size_t> birth_stage;
    for (std::size_t s = 0; s < filtration.size(); ++s) {
        const auto& k = filtration[s].complex;
        for (const auto& table : k.faces_by_dimension()) {
            for (std::size_t i = 0; i < table.size(); ++i) {
                Face g;
                for (auto v : table[i]) g.push_back(ids.at(k.labels()[v]));
                std::sort(g.begin(), g.end());
                birth_stage.emplace(std::move(g), s);
            }
        }
    }

    std::vector<FilteredFace> faces;
    for (const auto& [f, s] : birth_stage) {
        FilteredFace ff{f, {}, s};
        for (auto v : f) ff.sort_key.push_back(labels[v]);
        std::sort(ff.sort_key.begin(), ff.sort_key.end());
        faces.push_back(std::move(ff));
    }
    std::sort(faces.begin(), faces.end(), [](const FilteredFace& a, const FilteredFace& b) {
        if (a.stage != b.stage) return a.stage < b.stage;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.sort_key < b.sort_key;
    });
    std::map<Face, std::size_t> position;
    for (std::size_t i = 0; i < faces.size(); ++i) position[faces[i].vertices] = i;

    std::vector<std::vector<std::size_t>> columns(faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        const auto& f = faces[j].vertices;
        if (f.size() < 2) continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face facet;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) facet.push_back(f[i]);
            columns[j].push_back(position.at(facet));
        }
        std::sort(columns[j].begin(), columns[j].end());
    }

    std::unordered_map<std::size_t, std::size_t> owner_of_low;
    std::vector<bool> paired(faces.size(), false);
    PersistenceDiagram diagram;
    for (std::size_t j = 0; j < faces.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = owner_of_low.find(col.back());
            if (it == owner_of_low.end()) break;
            // col ^= columns[it->second]
            std::vector<std::size_t> sum;
            std::set_symmetric_difference(col.begin(), col.end(), columns[it->second].begin(), columns[it->second].end(), std::back_inserter(sum));
            col.swap(sum);
        }
        if (col.empty()) continue;
        const std::size_t low = col.back();
        owner_of_low[low] = j;
        paired[low] = paired[j] = true;
        if (faces[low].stage == faces[j].stage) continue;
        diagram.points.push_back({static_cast<int>(faces[low].vertices.size()) - 1, filtration[faces[low].stage].threshold,
                                  filtration[faces[j].stage].threshold, false});
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (paired[i]) continue;
        diagram.points.push_back({static_cast<int>(faces[i].vertices.size()) - 1, filtration[faces[i].stage].threshold, persistence_sentinel(), true});
    }
    std::sort(diagram.points.begin(), diagram.points.end(), [](const PersistencePoint& a, const PersistencePoint& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.birth != b.birth) return a.birth > b.birth;
        return a.death > b.death;
    });
    return diagram;
}

Filtration filtration_from_matrix(const CountsSource& source, const std::vector<HolePair>& vertices, TieConvention tc) {
    require_disjoint(vertices);
    MemoSource memo(source);
    const Rational half(1, 2);
    std::vector<Rational> thresholds{Rational(1)};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i == j) continue;
            const Rational p = win_probability(memo.counts(vertices[i], vertices[j]), tc);
            if (p > half && p < 1) thresholds.push_back(p);
        }
    }
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    Filtration out;
    for (const auto& p : thresholds) out.push_back({p, order_complex(relation_at(memo, vertices, tc, p))});
    return out;
}

}  // namespace pokertopo
