#include "pokertopo/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "pokertopo/complex.hpp"
#include "pokertopo/evaluator.hpp"
#include "pokertopo/evaluator_oracle.hpp"
#include "pokertopo/homology.hpp"
#include "pokertopo/landmarks.hpp"
#include "pokertopo/penney.hpp"
#include "pokertopo/persistence.hpp"

namespace pokertopo::verify {
namespace {

const OnDemandCounts& shared_counts() {
    static OnDemandCounts counts;
    return counts;
}

template <class Body>
CheckResult timed(int id, std::string title, Body body) {
    CheckResult r;
    r.id = id;
    r.title = std::move(title);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        r.passed = body(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string join_counts(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool near(const Rational& q, double target, double tol) { return std::abs(to_double(q) - target) <= tol; }

}  // namespace

CheckResult check_evaluator_oracle() {
    return timed(1, "evaluator agrees with the naive oracle", [](std::ostream& out) {
        const std::vector<std::string> directed = {
            "Ac2d3h4s5c9dKh",  // wheel
            "Ac2c3c4c5cKdQh",  // steel wheel
            "5h6h7h8d9sAh2h",  // flush beats the straight on board
            "2c2d5h5s6c6dKh",  // counterfeited two pair
            "AsAhAdAcKsKh2c",  // quads, king kicker
            "AcAdAhKcKdKh2c",  // two sets make a full house
            "AcAdKcKdQcQd2h",  // three pairs
            "2c3d4h5s6c7dKh",  // six-card straight
            "2h4h6h8hThQhAs",  // six-card flush
            "9h8h7h6h5hThJd",  // straight flush over a straight
        };
        std::size_t mismatches = 0;
        for (const auto& s : directed) {
            const auto cards = cards_from_text(s);
            if (rank7(cards) != oracle::rank7_oracle(cards)) {
                ++mismatches;
                out << "mismatch on " << s << "; ";
            }
        }
        std::mt19937_64 rng(20240601);
        std::array<int, 52> deck{};
        for (int i = 0; i < 52; ++i) deck[static_cast<std::size_t>(i)] = i;
        for (int trial = 0; trial < 100000; ++trial) {
            for (int i = 0; i < 7; ++i) {
                std::uniform_int_distribution<int> pick(i, 51);
                std::swap(deck[static_cast<std::size_t>(i)], deck[static_cast<std::size_t>(pick(rng))]);
            }
            std::array<Card, 7> hand;
            for (int i = 0; i < 7; ++i) hand[static_cast<std::size_t>(i)] = Card::from_index(deck[static_cast<std::size_t>(i)]);
            if (rank7(hand) != oracle::rank7_oracle(hand)) ++mismatches;
        }
        out << directed.size() << " directed + 100000 random draws, " << mismatches << " mismatches";
        return mismatches == 0;
    });
}

CheckResult check_five_card_census() {
    return timed(2, "five-card category census", [](std::ostream& out) {
        constexpr std::array<std::uint64_t, 9> expected = {1302540, 1098240, 123552, 54912, 10200, 5108, 3744, 624, 40};
        std::array<std::uint64_t, 9> fast{}, naive{};
        std::array<Card, 5> h;
        for (int a = 0; a < 52; ++a)
            for (int b = a + 1; b < 52; ++b)
                for (int c = b + 1; c < 52; ++c)
                    for (int d = c + 1; d < 52; ++d)
                        for (int e = d + 1; e < 52; ++e) {
                            h = {Card::from_index(a), Card::from_index(b), Card::from_index(c), Card::from_index(d), Card::from_index(e)};
                            ++fast[static_cast<std::size_t>(rank5(h).category())];
                            ++naive[static_cast<std::size_t>(oracle::rank5_naive(h).category())];
                        }
        out << "fast=(";
        for (std::size_t i = 0; i < 9; ++i) out << (i ? "," : "") << fast[i];
        out << ")";
        return fast == naive && fast == expected;
    });
}

CheckResult check_matchup_totals() {
    return timed(3, "matchup totals over 100 random matchups", [](std::ostream& out) {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> pick(0, kNumPairs - 1);
        int good = 0, done = 0;
        while (done < 100) {
            const auto a = HolePair::from_index(pick(rng));
            const auto b = HolePair::from_index(pick(rng));
            if (a.overlaps(b)) continue;
            ++done;
            good += matchup_counts(a, b).total() == kBoardsPerMatchup;
        }
        out << good << "/100 sum to " << kBoardsPerMatchup;
        return good == 100;
    });
}

CheckResult check_triangle() {
    return timed(4, "Ac2c > 3c5c > 2d2h > Ac2c", [](std::ostream& out) {
        const auto hands = landmarks::triangle_hands();
        const auto& src = shared_counts();
        const MatchupCount c01 = src.counts(hands[0], hands[1]);
        const MatchupCount c12 = src.counts(hands[1], hands[2]);
        const MatchupCount c20 = src.counts(hands[2], hands[0]);
        bool any = false;
        for (auto tc : {TieConvention::StrictWin, TieConvention::SplitTie}) {
            const auto p01 = win_probability(c01, tc), p12 = win_probability(c12, tc), p20 = win_probability(c20, tc);
            const bool first = near(p01, 0.591, 0.0015) || near(p01, 0.594, 0.0015);
            const bool ok = first && near(p12, 0.504, 0.0015) && near(p20, 0.620, 0.0015);
            const auto t = relation_at(src, hands, tc, Rational(1, 2));
            const bool cycle = t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0);
            out << tie_convention_name(tc) << ": " << to_decimal(p01, 6) << ", " << to_decimal(p12, 6) << ", " << to_decimal(p20, 6)
                << (ok && cycle ? " [match, 3-cycle]" : " [no match]") << "; ";
            any = any || (ok && cycle);
        }
        return any;
    });
}

CheckResult check_closest_call() {
    return timed(5, "closest call 3c3d vs AcTc = 0.50007", [](std::ostream& out) {
        const auto [a, b] = landmarks::closest_call_matchup();
        const auto c = shared_counts().counts(a, b);
        const auto p = win_probability(c, kReferenceConvention);
        out << tie_convention_name(kReferenceConvention) << " " << to_string(p) << " = " << to_decimal(p, 7);
        return near(p, 0.50007, 0.00002);
    });
}

CheckResult check_sphere() {
    return timed(6, "eight-hand set is a 4-sphere", [](std::ostream& out) {
        const auto& src = shared_counts();
        const auto hands = landmarks::sphere_hands();
        const auto t = relation_at(src, hands, kReferenceConvention, Rational(1, 2));
        std::set<std::pair<std::string, std::string>> got, want;
        for (auto [u, v] : t.edges()) got.emplace(t.label(u), t.label(v));
        for (const auto& e : landmarks::sphere_edges()) want.insert(e);
        const bool digraph = got == want;
        out << "digraph " << (digraph ? "matches" : "differs") << " (" << got.size() << " edges); ";

        const auto k = order_complex(t);
        const auto h = homology(k, true);
        const bool sphere = h.torsion_free() && h.betti() == std::vector<std::size_t>{0, 0, 0, 0, 1};
        out << "reduced betti " << join_counts(h.betti()) << "; ";

        SimplicialComplex joined;
        for (const auto& row : landmarks::sphere_rows()) {
            std::vector<std::size_t> ids;
            for (const auto& p : row) ids.push_back(t.id(pair_label(p)));
            joined = join(joined, order_complex(t.induced(ids)));
        }
        const bool is_join = joined.same_faces(k);
        out << "join " << (is_join ? "equal" : "differs") << "; f=" << join_counts(k.f_vector());
        return digraph && sphere && is_join;
    });
}

CheckResult check_penney_small() {
    return timed(7, "Penney n=3 cycle and bouquet of 3 circles", [](std::ostream& out) {
        const auto t = penney::penney_tournament(3);
        const std::vector<std::string> cycle = {"011", "110", "100", "001"};
        bool has_cycle = true;
        for (std::size_t i = 0; i < cycle.size(); ++i) has_cycle = has_cycle && t.beats(t.id(cycle[i]), t.id(cycle[(i + 1) % cycle.size()]));
        const auto h = homology(order_complex(t), true);
        const auto betti = h.betti();
        bool bouquet = h.torsion_free() && betti.size() >= 2 && betti[1] == 3;
        for (std::size_t k = 0; k < betti.size(); ++k)
            if (k != 1 && betti[k] != 0) bouquet = false;
        out << "cycle " << (has_cycle ? "present" : "missing") << "; reduced betti " << join_counts(betti);
        return has_cycle && bouquet;
    });
}

CheckResult check_penney_six() {
    return timed(8, "Penney n=6 reduced homology", [](std::ostream& out) {
        const auto h = penney::penney_homology(6);
        auto betti = h.betti();
        const std::vector<std::size_t> expected = {0, 0, 0, 0, 0, 38, 149, 12};
        bool ok = h.torsion_free() && betti.size() >= expected.size() && std::equal(expected.begin(), expected.end(), betti.begin());
        for (std::size_t k = expected.size(); k < betti.size(); ++k) ok = ok && betti[k] == 0;
        out << "reduced betti " << join_counts(betti) << (h.torsion_free() ? ", torsion-free" : ", TORSION");
        return ok;
    });
}

CheckResult check_penney_odds() {
    return timed(9, "Penney odds formula equals Markov chain", [](std::ostream& out) {
        std::size_t checked = 0, bad = 0;
        auto compare = [&](const penney::BinaryWord& a, const penney::BinaryWord& b) {
            ++checked;
            if (penney::first_occurrence_probability(a, b) != penney::first_occurrence_probability_odds(a, b)) ++bad;
        };
        for (int n : {3, 4})
            for (std::uint32_t i = 0; i < (1u << n); ++i)
                for (std::uint32_t j = 0; j < (1u << n); ++j)
                    if (i != j) compare(penney::BinaryWord::from_integer(i, n), penney::BinaryWord::from_integer(j, n));
        std::mt19937_64 rng(99);
        for (int n : {5, 6}) {
            std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
            for (int k = 0; k < 500;) {
                const auto i = pick(rng), j = pick(rng);
                if (i == j) continue;
                compare(penney::BinaryWord::from_integer(i, n), penney::BinaryWord::from_integer(j, n));
                ++k;
            }
        }
        out << checked << " pairs, " << bad << " disagreements";
        return bad == 0;
    });
}

CheckResult check_persistence() {
    return timed(10, "persistence on the eight-hand filtration", [](std::ostream& out) {
        const auto hands = landmarks::sphere_hands();
        const auto filtration = filtration_from_matrix(shared_counts(), hands, kReferenceConvention);
        const auto diagram = persistence(filtration);
        bool consistent = true;
        for (const auto& stage : filtration) {
            const auto betti = betti_mod2(stage.complex, false);
            for (std::size_t d = 0; d < betti.size(); ++d)
                if (diagram.alive(static_cast<int>(d), stage.threshold) != betti[d]) consistent = false;
            for (const auto& p : diagram.points)
                if (static_cast<std::size_t>(p.dimension) >= betti.size() && diagram.alive(p.dimension, stage.threshold) != 0) consistent = false;
        }
        const auto t = relation_at(shared_counts(), hands, kReferenceConvention, Rational(1, 2));
        Rational weakest(1);
        for (auto [u, v] : t.edges()) weakest = std::min(weakest, *t.probability(u, v));
        std::size_t h4 = 0;
        bool born_right = false;
        for (const auto& p : diagram.points) {
            if (p.dimension != 4) continue;
            ++h4;
            born_right = p.essential && p.birth == weakest;
        }
        out << filtration.size() << " stages, alive counts " << (consistent ? "match" : "DIFFER") << " field betti; H4 born at "
            << to_decimal(weakest, 6) << (born_right && h4 == 1 ? " (ok)" : " (MISMATCH)");
        return consistent && born_right && h4 == 1;
    });
}

CheckResult check_full_matrix(const CountsMatrix& m) {
    return timed(11, "full matrix reproduction", [&](std::ostream& out) {
        std::size_t bad_antisym = 0, bad_total = 0, bad_empty = 0, sweeps = 0;
        for (int i = 0; i < CountsMatrix::n; ++i) {
            const auto a = HolePair::from_index(i);
            for (int j = 0; j < CountsMatrix::n; ++j) {
                const auto b = HolePair::from_index(j);
                const auto& c = m.at(i, j);
                if (i == j || a.overlaps(b)) {
                    bad_empty += c.total() != 0;
                    continue;
                }
                bad_total += !c.complete();
                sweeps += c.ties == 0 && c.losses == 0;
                bad_antisym += !(c == m.at(j, i).swapped());
            }
        }
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> pick(0, kNumPairs - 1);
        std::uniform_int_distribution<std::size_t> perm(0, 23);
        std::size_t bad_suit = 0, bad_spot = 0;
        for (int k = 0; k < 1000;) {
            const auto a = HolePair::from_index(pick(rng)), b = HolePair::from_index(pick(rng));
            if (a.overlaps(b)) continue;
            const auto& s = SuitPermutation::all()[perm(rng)];
            bad_suit += !(m.at(a.index(), b.index()) == m.at(apply_suit_permutation(a, s).index(), apply_suit_permutation(b, s).index()));
            if (k < 20) bad_spot += !(m.at(a.index(), b.index()) == matchup_counts(a, b));
            ++k;
        }
        const auto closest = closest_call(m, kReferenceConvention);
        const auto [x, y] = landmarks::closest_call_matchup();
        const auto target = canonical_matchup(x, y);
        bool in_class = !closest.matchups.empty();
        for (const auto& [w, l] : closest.matchups) {
            const auto c = canonical_matchup(w, l);
            in_class = in_class && c.a == target.a && c.b == target.b;
        }
        out << "antisymmetry violations " << bad_antisym << ", incomplete " << bad_total << ", nonempty invalid " << bad_empty << ", suit mismatches "
            << bad_suit << ", spot mismatches " << bad_spot << "; closest " << to_decimal(closest.probability, 6) << " attained by "
            << closest.matchups.size() << " matchups" << (in_class ? " all in the 3x3y vs AxTx class" : " NOT all in the 3x3y vs AxTx class")
            << "; matchups won on every board " << sweeps << " (so r_1 is " << (sweeps == 0 ? "empty" : "nonempty") << ")";
        return bad_antisym == 0 && bad_total == 0 && bad_empty == 0 && bad_suit == 0 && bad_spot == 0 && in_class;
    });
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
    std::vector<std::pair<int, std::function<CheckResult()>>> checks = {
        {1, check_evaluator_oracle}, {2, check_five_card_census}, {3, check_matchup_totals}, {4, check_triangle},
        {5, check_closest_call},     {6, check_sphere},           {7, check_penney_small},  {8, check_penney_six},
        {9, check_penney_odds},      {10, check_persistence},
    };
    checks.emplace_back(11, [&] {
        if (options.fast && options.matrix.empty()) {
            CheckResult r;
            r.id = 11;
            r.title = "full matrix reproduction";
            r.skipped = true;
            r.passed = true;
            r.detail = "skipped (fast mode, no --matrix given)";
            return r;
        }
        CountsMatrix m;
        if (!options.matrix.empty()) {
            m = read_matrix(options.matrix);
        } else {
            MatrixOptions mo;
            mo.jobs = options.jobs;
            mo.checkpoint = options.checkpoint;
            mo.resume = !options.checkpoint.empty();
            m = full_matrix(mo);
        }
        return check_full_matrix(m);
    });
    std::vector<CheckResult> results;
    for (auto& [id, fn] : checks) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            CheckResult r;
            r.id = id;
            r.title = "check " + std::to_string(id);
            r.detail = std::string("exception: ") + e.what();
            results.push_back(r);
        }
        if (options.on_result) options.on_result(results.back());
    }
    return results;
}

}  // namespace pokertopo::verify
