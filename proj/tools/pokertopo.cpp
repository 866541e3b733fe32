// pokertopo: exact heads-up equities and the topology of the "beats" relation.
//
// Exit codes: 0 success, 1 usage, 2 data-format error, 3 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "pokertopo/cards.hpp"
#include "pokertopo/complex.hpp"
#include "pokertopo/equity.hpp"
#include "pokertopo/evaluator.hpp"
#include "pokertopo/explore.hpp"
#include "pokertopo/homology.hpp"
#include "pokertopo/manifest.hpp"
#include "pokertopo/penney.hpp"
#include "pokertopo/persistence.hpp"
#include "pokertopo/verify.hpp"

using namespace pokertopo;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> collect_flags(const CLI::App* app) {
    std::map<std::string, std::string> flags;
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string v;
        for (const auto& r : opt->results()) v += (v.empty() ? "" : " ") + r;
        flags[opt->get_name()] = v.empty() ? "true" : v;
    }
    return flags;
}

class Manifested {
public:
    Manifested(const CLI::App* app, int workers) : start_(std::chrono::steady_clock::now()) {
        m_.subcommand = app->get_name();
        m_.flags = collect_flags(app);
        m_.started_utc = utc_now();
        m_.workers = workers;
    }
    void input(const std::filesystem::path& p) { m_.inputs[p.string()] = sha256_file(p); }
    void finish(const std::filesystem::path& output) {
        m_.outputs[output.string()] = sha256_file(output);
        m_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_manifest(output, m_);
    }

private:
    RunManifest m_;
    std::chrono::steady_clock::time_point start_;
};

/// Matrix-backed counts when a file is given, on-demand enumeration otherwise.
std::unique_ptr<CountsSource> open_source(const std::string& matrix_path) {
    if (matrix_path.empty()) return std::make_unique<OnDemandCounts>();
    check_against_manifest(matrix_path);
    return std::make_unique<CountsMatrix>(read_matrix(matrix_path));
}

json homology_json(const HomologyReport& h) {
    json groups = json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        json torsion = json::array();
        for (const auto& t : h.groups[k].torsion) torsion.push_back(t.str());
        groups.push_back({{"dim", k}, {"betti", h.groups[k].betti}, {"torsion", torsion}});
    }
    return {{"reduced", h.reduced}, {"groups", groups}};
}

std::string homology_compact(const HomologyReport& h) {
    std::string s;
    for (const auto& line : h.lines())
        if (line.substr(line.find(':') + 2) != "0") s += (s.empty() ? "" : "; ") + line;
    return s.empty() ? "acyclic" : s;
}

std::string hands_text(const std::vector<HolePair>& hands) {
    std::string s;
    for (const auto& h : hands) s += (s.empty() ? "" : " ") + pair_label(h);
    return s;
}

void print_relation(std::ostream& out, const Tournament& t, const std::string& path, const CLI::App* app, int workers,
                    const std::string& matrix) {
    if (path.empty() || path == "-") {
        write_relation(out, t);
        return;
    }
    Manifested man(app, workers);
    if (!matrix.empty()) man.input(matrix);
    {
        std::ofstream f(path);
        write_relation(f, t);
    }
    man.finish(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact heads-up hold'em equities and the topology of the beats relation"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format for read-out commands")->check(CLI::IsMember({"text", "json"}));
    std::string tie = "split-tie";
    app.add_option("--tie", tie, "Tie convention: split-tie or strict-win")->check(CLI::IsMember({"split-tie", "strict-win"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    int exit_code = 0;
    const auto tc = [&] { return parse_tie_convention(tie); };
    auto as_json = [&] { return format == "json"; };

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a 5- or 7-card hand");
    std::vector<std::string> eval_cards;
    eval->add_option("cards", eval_cards, "Cards, e.g. AsKsQsJsTs2c3d or 'As Ks ...'")->required();
    eval->callback([&] {
        std::string joined;
        for (const auto& c : eval_cards) joined += c;
        const auto cards = cards_from_text(joined);
        HandValue v;
        if (cards.size() == 7) v = rank7(cards);
        else if (cards.size() == 5) v = rank5(cards);
        else throw ParseError("eval needs 5 or 7 cards, got " + std::to_string(cards.size()));
        if (as_json()) {
            std::cout << json{{"category", category_name(v.category())}, {"tiebreak", v.tiebreak()}, {"packed", v.packed()}}.dump() << '\n';
        } else {
            std::cout << v.describe() << '\n';
        }
    });

    // matchup
    auto* matchup = app.add_subcommand("matchup", "Exact wins/ties/losses of one hole pair against another");
    std::string ma, mb;
    matchup->add_option("a", ma, "First hole pair (e.g. Ac2c or a pair index)")->required();
    matchup->add_option("b", mb, "Second hole pair")->required();
    matchup->callback([&] {
        const auto a = pair_from_text(ma), b = pair_from_text(mb);
        const auto c = matchup_counts(a, b, jobs);
        const auto ps = win_probability(c, TieConvention::StrictWin), pt = win_probability(c, TieConvention::SplitTie);
        if (as_json()) {
            std::cout << json{{"a", pair_label(a)}, {"b", pair_label(b)}, {"wins", c.wins}, {"ties", c.ties}, {"losses", c.losses},
                              {"total", c.total()}, {"strict_win", to_string(ps)}, {"split_tie", to_string(pt)}}
                             .dump()
                      << '\n';
        } else {
            std::cout << pair_label(a) << " vs " << pair_label(b) << ": wins " << c.wins << ", ties " << c.ties << ", losses " << c.losses
                      << " (total " << c.total() << ")\n"
                      << "strict-win " << to_decimal(ps, 6) << " (" << to_string(ps) << ")\n"
                      << "split-tie  " << to_decimal(pt, 6) << " (" << to_string(pt) << ")\n";
        }
    });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Compute the full 1326 x 1326 counts matrix");
    std::string matrix_out, matrix_csv, matrix_ckpt;
    bool matrix_resume = false, matrix_no_symmetry = false;
    matrix->add_option("--out", matrix_out, "Output file (PKTP format)")->required();
    matrix->add_option("--csv", matrix_csv, "Also write a CSV export");
    matrix->add_option("--checkpoint", matrix_ckpt, "Checkpoint file (default <out>.ckpt)");
    matrix->add_flag("--resume", matrix_resume, "Resume from the checkpoint");
    matrix->add_flag("--no-symmetry", matrix_no_symmetry, "Enumerate every matchup instead of one per suit class");
    matrix->callback([&] {
        Manifested man(matrix, jobs);
        MatrixOptions opts;
        opts.use_symmetry = !matrix_no_symmetry;
        opts.jobs = jobs;
        opts.checkpoint = matrix_ckpt.empty() ? matrix_out + ".ckpt" : matrix_ckpt;
        opts.resume = matrix_resume;
        const auto t0 = std::chrono::steady_clock::now();
        opts.progress = [&](std::size_t done, std::size_t total) {
            if (done % 500 == 0 || done == total) {
                const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                std::cerr << "\r" << done << "/" << total << " matchup classes (" << static_cast<long>(s) << " s)" << std::flush;
            }
        };
        const auto m = full_matrix(opts);
        std::cerr << '\n';
        write_matrix(matrix_out, m);
        man.finish(matrix_out);
        if (!matrix_csv.empty()) {
            Manifested csv_man(matrix, jobs);
            {
                std::ofstream f(matrix_csv);
                write_matrix_csv(f, m);
            }
            csv_man.finish(matrix_csv);
        }
        std::cout << "wrote " << matrix_out << '\n';
    });

    // closest
    auto* closest = app.add_subcommand("closest", "Smallest win probability above one half");
    std::string closest_matrix;
    closest->add_option("--matrix", closest_matrix, "Counts matrix file")->required();
    closest->callback([&] {
        check_against_manifest(closest_matrix);
        const auto m = read_matrix(closest_matrix);
        const auto c = closest_call(m, tc());
        if (as_json()) {
            json list = json::array();
            for (const auto& [w, l] : c.matchups) list.push_back({pair_label(w), pair_label(l)});
            std::cout << json{{"probability", to_string(c.probability)}, {"decimal", to_decimal(c.probability, 7)}, {"matchups", list}}.dump() << '\n';
        } else {
            std::cout << "closest " << to_decimal(c.probability, 7) << " (" << to_string(c.probability) << "), " << c.matchups.size() << " matchups:\n";
            for (const auto& [w, l] : c.matchups) std::cout << "  " << pair_label(w) << " > " << pair_label(l) << '\n';
        }
    });

    // relation
    auto* relation = app.add_subcommand("relation", "Write the thresholded beats relation on a hand set");
    std::string rel_hands, rel_matrix, rel_out, rel_p = "0.5";
    relation->add_option("--hands", rel_hands, "Comma separated hole pairs")->required();
    relation->add_option("--matrix", rel_matrix, "Counts matrix (enumerates on demand if absent)");
    relation->add_option("--p", rel_p, "Threshold in [0.5, 1]; 0.5 means strictly more than half");
    relation->add_option("--out", rel_out, "Output relation file (default stdout)");
    relation->callback([&] {
        const auto src = open_source(rel_matrix);
        const auto t = relation_at(*src, pairs_from_list(rel_hands), tc(), parse_rational(rel_p));
        print_relation(std::cout, t, rel_out, relation, jobs, rel_matrix);
    });

    // complex
    auto* complex_cmd = app.add_subcommand("complex", "Order complex of a relation file");
    std::string cx_relation, cx_out;
    complex_cmd->add_option("--relation", cx_relation, "Relation file (u v [prob] per line)")->required()->check(CLI::ExistingFile);
    complex_cmd->add_option("--out", cx_out, "Output complex file (default stdout)");
    complex_cmd->callback([&] {
        std::ifstream in(cx_relation);
        const auto k = order_complex(read_relation(in));
        if (cx_out.empty() || cx_out == "-") {
            write_complex(std::cout, k);
            return;
        }
        Manifested man(complex_cmd, jobs);
        man.input(cx_relation);
        {
            std::ofstream f(cx_out);
            write_complex(f, k);
        }
        man.finish(cx_out);
    });

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "Integer homology of a complex file");
    std::string hom_complex;
    bool hom_reduced = false;
    homology_cmd->add_option("--complex", hom_complex, "Complex file (one maximal face per line)")->required()->check(CLI::ExistingFile);
    homology_cmd->add_flag("--reduced", hom_reduced, "Reduced homology");
    homology_cmd->callback([&] {
        std::ifstream in(hom_complex);
        const auto h = homology(read_complex(in), hom_reduced);
        if (as_json()) std::cout << homology_json(h).dump() << '\n';
        else
            for (const auto& l : h.lines()) std::cout << l << '\n';
    });

    // persist
    auto* persist = app.add_subcommand("persist", "Persistence diagram of the threshold filtration on a hand set");
    std::string per_matrix, per_hands;
    persist->add_option("--matrix", per_matrix, "Counts matrix (enumerates on demand if absent)");
    persist->add_option("--hands", per_hands, "Comma separated hole pairs")->required();
    persist->callback([&] {
        const auto src = open_source(per_matrix);
        const auto diagram = persistence(filtration_from_matrix(*src, pairs_from_list(per_hands), tc()));
        if (as_json()) {
            json pts = json::array();
            for (const auto& p : diagram.points)
                pts.push_back({{"dim", p.dimension}, {"birth", to_string(p.birth)}, {"death", to_string(p.death)}, {"essential", p.essential}});
            std::cout << json{{"points", pts}}.dump() << '\n';
        } else {
            for (const auto& p : diagram.points) std::cout << p.dimension << ' ' << to_string(p.birth) << ' ' << to_string(p.death) << '\n';
        }
    });

    // penney
    auto* penney_cmd = app.add_subcommand("penney", "Penney's game: odds, relation and homology");
    int pn = 3;
    bool pen_homology = false, pen_relation = false;
    std::vector<std::string> pen_odds;
    penney_cmd->add_option("--n", pn, "Word length")->check(CLI::Range(1, 16));
    auto* hflag = penney_cmd->add_flag("--homology", pen_homology, "Reduced homology of the order complex");
    auto* rflag = penney_cmd->add_flag("--relation", pen_relation, "Print the relation as an edge list");
    auto* oflag = penney_cmd->add_option("--odds", pen_odds, "Probability that word a appears before word b")->expected(2);
    hflag->excludes(rflag)->excludes(oflag);
    rflag->excludes(oflag);
    penney_cmd->callback([&] {
        if (!pen_odds.empty()) {
            const penney::BinaryWord a(pen_odds[0]), b(pen_odds[1]);
            const auto p = penney::first_occurrence_probability(a, b);
            const auto q = penney::first_occurrence_probability_odds(a, b);
            if (p != q) throw VerificationFailed("odds formula disagrees with the Markov chain");
            if (as_json())
                std::cout << json{{"a", a.text()}, {"b", b.text()}, {"probability", to_string(p)}, {"correlations", {penney::correlation(a, a), penney::correlation(a, b), penney::correlation(b, b), penney::correlation(b, a)}}}.dump() << '\n';
            else
                std::cout << "P(" << a.text() << " before " << b.text() << ") = " << to_string(p) << " = " << to_decimal(p, 6) << '\n';
            return;
        }
        const auto t = penney::penney_tournament(pn);
        if (pen_relation) {
            write_relation(std::cout, t);
            return;
        }
        const auto h = homology(order_complex(t), true);
        if (as_json()) std::cout << homology_json(h).dump() << '\n';
        else
            for (const auto& l : h.lines()) std::cout << l << '\n';
    });

    // search
    auto* search_cmd = app.add_subcommand("search", "Randomized search for sphere-like hand sets");
    std::string s_matrix;
    SearchConfig cfg;
    std::vector<std::string> s_inject;
    search_cmd->add_option("--matrix", s_matrix, "Counts matrix (enumerates on demand if absent)");
    search_cmd->add_option("--p", cfg.keep_probability, "Probability of keeping each card")->check(CLI::Range(0.0, 1.0));
    search_cmd->add_option("--trials", cfg.trials, "Number of trials");
    search_cmd->add_option("--first-trial", cfg.first_trial, "Index of the first trial (for resuming)");
    search_cmd->add_option("--seed", cfg.seed, "Seed");
    search_cmd->add_option("--min-degree", cfg.min_degree, "Smallest homology degree reported");
    search_cmd->add_option("--inject", s_inject, "Extra hand set to test (comma separated pairs); repeatable");
    search_cmd->callback([&] {
        const auto src = open_source(s_matrix);
        std::vector<std::vector<HolePair>> injected;
        for (const auto& s : s_inject) injected.push_back(pairs_from_list(s));
        search(cfg, *src, tc(), injected, [&](const SearchHit& hit) {
            const std::string trial = hit.trial ? std::to_string(*hit.trial) : "injected";
            if (as_json())
                std::cout << json{{"trial", trial}, {"hands", hands_text(hit.hands)}, {"homology", homology_json(hit.homology)}}.dump() << '\n';
            else
                std::cout << trial << ", " << hands_text(hit.hands) << ", " << homology_compact(hit.homology) << '\n';
            std::cout.flush();
        });
    });

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the golden reproduction suite");
    verify::SuiteOptions vopts;
    std::string v_matrix, v_ckpt;
    verify_cmd->add_flag("--fast", vopts.fast, "Skip the full-matrix reproduction");
    verify_cmd->add_option("--matrix", v_matrix, "Precomputed matrix for the full-matrix check");
    verify_cmd->add_option("--checkpoint", v_ckpt, "Checkpoint when computing the matrix");
    verify_cmd->add_option("--only", vopts.only, "Run only these check numbers");
    verify_cmd->callback([&] {
        vopts.jobs = jobs;
        vopts.matrix = v_matrix;
        vopts.checkpoint = v_ckpt.empty() ? std::filesystem::path() : std::filesystem::path(v_ckpt);
        if (!vopts.fast && v_matrix.empty() && v_ckpt.empty()) vopts.checkpoint = "pokertopo-matrix.ckpt";
        if (!v_matrix.empty()) check_against_manifest(v_matrix);
        json all = json::array();
        vopts.on_result = [&](const verify::CheckResult& r) {
            if (as_json()) {
                all.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"skipped", r.skipped}, {"detail", r.detail}, {"seconds", r.seconds}});
                return;
            }
            const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
            std::cout << status << " [" << r.id << "] " << r.title << " (" << std::fixed << std::setprecision(1) << r.seconds << " s): " << r.detail << std::endl;
        };
        const auto results = verify::run_suite(vopts);
        if (as_json()) std::cout << all.dump(2) << '\n';
        for (const auto& r : results)
            if (!r.passed) throw VerificationFailed("verification failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return exit_code;
}
