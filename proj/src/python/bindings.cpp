#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pokertopo/cards.hpp"
#include "pokertopo/complex.hpp"
#include "pokertopo/equity.hpp"
#include "pokertopo/evaluator.hpp"
#include "pokertopo/explore.hpp"
#include "pokertopo/homology.hpp"
#include "pokertopo/penney.hpp"
#include "pokertopo/persistence.hpp"
#include "pokertopo/verify.hpp"

namespace py = pybind11;
using namespace pokertopo;

namespace {

py::object fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(numerator(q).str())), py::int_(py::str(denominator(q).str())));
}

Rational to_rational(py::handle x) {
    if (py::isinstance<py::str>(x)) return parse_rational(x.cast<std::string>());
    const py::object frac = py::module_::import("fractions").attr("Fraction")(x);
    return Rational(BigInt(py::str(frac.attr("numerator")).cast<std::string>()), BigInt(py::str(frac.attr("denominator")).cast<std::string>()));
}

std::vector<HolePair> to_pairs(const std::vector<std::string>& hands) {
    std::vector<HolePair> out;
    for (const auto& h : hands) out.push_back(pair_from_text(h));
    return out;
}

py::dict homology_dict(const HomologyReport& h) {
    py::dict d;
    d["reduced"] = h.reduced;
    d["betti"] = h.betti();
    py::list torsion;
    for (const auto& g : h.groups) {
        py::list t;
        for (const auto& f : g.torsion) t.append(py::int_(py::str(f.str())));
        torsion.append(t);
    }
    d["torsion"] = torsion;
    d["lines"] = h.lines();
    return d;
}

Tournament tournament_from_edges(const std::vector<std::pair<std::string, std::string>>& edges, const std::vector<std::string>& extra) {
    std::vector<std::string> labels;
    auto add = [&](const std::string& s) {
        if (std::find(labels.begin(), labels.end(), s) == labels.end()) labels.push_back(s);
    };
    for (const auto& [u, v] : edges) {
        add(u);
        add(v);
    }
    for (const auto& s : extra) add(s);
    Tournament t(labels);
    for (const auto& [u, v] : edges) t.add_edge(t.id(u), t.id(v));
    return t;
}

std::vector<std::vector<std::string>> complex_faces(const Tournament& t) { return order_complex(t).labelled_faces(); }

OnDemandCounts& shared_counts() {
    static OnDemandCounts counts;
    return counts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact hold'em equities and order-complex homology";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    m.def("card_index", [](const std::string& s) { return card_from_text(s).index(); }, py::arg("card"));
    m.def("pair_index", [](const std::string& s) { return pair_from_text(s).index(); }, py::arg("pair"));
    m.def("pair_label", [](const std::string& s) { return pair_label(pair_from_text(s)); }, py::arg("pair"));

    m.def(
        "evaluate",
        [](const std::string& cards) {
            const auto cs = cards_from_text(cards);
            if (cs.size() != 5 && cs.size() != 7) throw ParseError("evaluate needs 5 or 7 cards");
            const HandValue v = cs.size() == 7 ? rank7(cs) : rank5(cs);
            return py::make_tuple(category_name(v.category()), v.tiebreak(), v.packed());
        },
        py::arg("cards"), "Category name, tiebreak ranks and packed value of a 5- or 7-card hand.");

    m.def(
        "matchup",
        [](const std::string& a, const std::string& b, int jobs) {
            MatchupCount c;
            {
                py::gil_scoped_release release;
                c = matchup_counts(pair_from_text(a), pair_from_text(b), jobs);
            }
            return py::make_tuple(c.wins, c.ties, c.losses);
        },
        py::arg("a"), py::arg("b"), py::arg("jobs") = 1, "Exact (wins, ties, losses) over all 1,712,304 boards.");

    m.def(
        "win_probability",
        [](std::uint32_t w, std::uint32_t t, std::uint32_t l, const std::string& tie) {
            return fraction(win_probability(MatchupCount{w, t, l}, parse_tie_convention(tie)));
        },
        py::arg("wins"), py::arg("ties"), py::arg("losses"), py::arg("tie") = "split-tie");

    m.def(
        "relation",
        [](const std::vector<std::string>& hands, py::object p, const std::string& tie) {
            const auto t = relation_at(shared_counts(), to_pairs(hands), parse_tie_convention(tie), to_rational(p));
            py::list edges;
            for (auto [u, v] : t.edges()) edges.append(py::make_tuple(t.label(u), t.label(v), fraction(*t.probability(u, v))));
            return edges;
        },
        py::arg("hands"), py::arg("p") = "1/2", py::arg("tie") = "split-tie",
        "Edges (winner, loser, probability) of the thresholded relation on a hand set.");

    m.def(
        "order_complex",
        [](const std::vector<std::pair<std::string, std::string>>& edges, const std::vector<std::string>& vertices) {
            return complex_faces(tournament_from_edges(edges, vertices));
        },
        py::arg("edges"), py::arg("vertices") = std::vector<std::string>{}, "Maximal faces of the order complex of an edge list.");

    m.def(
        "homology",
        [](const std::vector<std::vector<std::string>>& faces, bool reduced) {
            std::vector<std::string> labels;
            std::vector<Face> ids;
            for (const auto& f : faces) {
                Face face;
                for (const auto& l : f) {
                    auto it = std::find(labels.begin(), labels.end(), l);
                    if (it == labels.end()) it = labels.insert(labels.end(), l);
                    face.push_back(static_cast<std::uint32_t>(it - labels.begin()));
                }
                std::sort(face.begin(), face.end());
                ids.push_back(face);
            }
            return homology_dict(homology(SimplicialComplex(labels, ids), reduced));
        },
        py::arg("faces"), py::arg("reduced") = true, "Integer homology of the complex spanned by the given faces.");

    m.def(
        "hand_set_homology",
        [](const std::vector<std::string>& hands, const std::string& tie) {
            return homology_dict(hand_set_homology(shared_counts(), to_pairs(hands), parse_tie_convention(tie)));
        },
        py::arg("hands"), py::arg("tie") = "split-tie");

    m.def(
        "persistence",
        [](const std::vector<std::string>& hands, const std::string& tie) {
            const auto d = persistence(filtration_from_matrix(shared_counts(), to_pairs(hands), parse_tie_convention(tie)));
            py::list out;
            for (const auto& p : d.points) out.append(py::make_tuple(p.dimension, fraction(p.birth), fraction(p.death)));
            return out;
        },
        py::arg("hands"), py::arg("tie") = "split-tie", "(dimension, birth, death) triples; death 1/2 means never killed.");

    m.def(
        "penney_probability",
        [](const std::string& a, const std::string& b) { return fraction(penney::first_occurrence_probability(penney::BinaryWord(a), penney::BinaryWord(b))); },
        py::arg("a"), py::arg("b"), "Probability that word a appears before word b in fair coin flips.");
    m.def("penney_homology", [](int n) { return homology_dict(penney::penney_homology(n)); }, py::arg("n"));

    m.def(
        "sample_hand_set",
        [](double p, std::uint64_t seed, std::uint64_t trial) {
            SearchConfig cfg;
            cfg.keep_probability = p;
            cfg.seed = seed;
            std::vector<std::string> out;
            for (const auto& h : sample_hand_set(cfg, trial)) out.push_back(pair_label(h));
            return out;
        },
        py::arg("p") = 0.5, py::arg("seed") = 42, py::arg("trial") = 0);

    m.def(
        "verify",
        [](std::vector<int> only) {
            verify::SuiteOptions opts;
            opts.only = std::move(only);
            std::vector<verify::CheckResult> results;
            {
                py::gil_scoped_release release;
                results = verify::run_suite(opts);
            }
            py::list out;
            for (const auto& r : results) out.append(py::make_tuple(r.id, r.title, r.passed, r.detail));
            return out;
        },
        py::arg("only") = std::vector<int>{}, "Run acceptance checks (fast mode); returns (id, title, passed, detail).");
}
