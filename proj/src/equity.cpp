#include "pokertopo/equity.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>
#include <unordered_map>

#include "pokertopo/evaluator.hpp"

namespace pokertopo {
namespace {

// Four 6-bit card indices; order-preserving for (a.lo, a.hi, b.lo, b.hi).
std::uint32_t matchup_key(const HolePair& a, const HolePair& b) {
    return static_cast<std::uint32_t>(a.lo().index()) << 18 | static_cast<std::uint32_t>(a.hi().index()) << 12 |
           static_cast<std::uint32_t>(b.lo().index()) << 6 | static_cast<std::uint32_t>(b.hi().index());
}

std::pair<HolePair, HolePair> unpack_key(std::uint32_t key) {
    auto card = [&](int shift) { return Card::from_index(static_cast<int>((key >> shift) & 63)); };
    return {HolePair(card(18), card(12)), HolePair(card(6), card(0))};
}

MatchupCount count_boards(const HolePair& a, const HolePair& b, int outer_begin, int outer_step) {
    std::array<std::uint64_t, 48> bit{};
    const std::uint64_t used = a.mask() | b.mask();
    int n = 0;
    for (int c = 0; c < kNumCards; ++c)
        if (!((used >> c) & 1)) bit[static_cast<std::size_t>(n++)] = SuitMasks::card_bit(c);
    const std::uint64_t ha = SuitMasks::card_bit(a.lo().index()) | SuitMasks::card_bit(a.hi().index());
    const std::uint64_t hb = SuitMasks::card_bit(b.lo().index()) | SuitMasks::card_bit(b.hi().index());

    std::uint32_t wins = 0, ties = 0, losses = 0;
    for (int e4 = 4 + outer_begin; e4 < 48; e4 += outer_step) {
        const std::uint64_t m4 = bit[static_cast<std::size_t>(e4)];
        for (int e3 = 3; e3 < e4; ++e3) {
            const std::uint64_t m3 = m4 | bit[static_cast<std::size_t>(e3)];
            for (int e2 = 2; e2 < e3; ++e2) {
                const std::uint64_t m2 = m3 | bit[static_cast<std::size_t>(e2)];
                for (int e1 = 1; e1 < e2; ++e1) {
                    const std::uint64_t m1 = m2 | bit[static_cast<std::size_t>(e1)];
                    for (int e0 = 0; e0 < e1; ++e0) {
                        const std::uint64_t board = m1 | bit[static_cast<std::size_t>(e0)];
                        const auto va = evaluate(SuitMasks{board | ha}).packed();
                        const auto vb = evaluate(SuitMasks{board | hb}).packed();
                        wins += va > vb;
                        losses += va < vb;
                        ties += va == vb;
                    }
                }
            }
        }
    }
    return {wins, ties, losses};
}

void put_u16(std::ostream& out, std::uint16_t v) {
    const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
    out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF), static_cast<char>((v >> 16) & 0xFF),
                       static_cast<char>(v >> 24)};
    out.write(b, 4);
}

std::uint32_t get_u32(const unsigned char* p) {
    return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

constexpr std::size_t kCheckpointRecord = 16;

std::unordered_map<std::uint32_t, MatchupCount> load_checkpoint(const std::filesystem::path& path) {
    std::unordered_map<std::uint32_t, MatchupCount> done;
    if (!std::filesystem::exists(path)) return done;
    const auto size = std::filesystem::file_size(path);
    const auto whole = size - size % kCheckpointRecord;
    {
        std::ifstream in(path, std::ios::binary);
        std::vector<unsigned char> buf(whole);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(whole));
        for (std::size_t off = 0; off + kCheckpointRecord <= whole; off += kCheckpointRecord) {
            const unsigned char* p = buf.data() + off;
            MatchupCount c{get_u32(p + 4), get_u32(p + 8), get_u32(p + 12)};
            if (c.complete()) done[get_u32(p)] = c;
        }
    }
    // Drop a torn trailing record so appends stay aligned.
    if (whole != size) std::filesystem::resize_file(path, whole);
    return done;
}

}  // namespace

const char* tie_convention_name(TieConvention tc) { return tc == TieConvention::StrictWin ? "strict-win" : "split-tie"; }

TieConvention parse_tie_convention(const std::string& s) {
    if (s == "strict-win" || s == "strict") return TieConvention::StrictWin;
    if (s == "split-tie" || s == "split") return TieConvention::SplitTie;
    throw ParseError("unknown tie convention '" + s + "' (expected strict-win or split-tie)");
}

Rational win_probability(const MatchupCount& c, TieConvention tc) {
    const auto total = c.total();
    if (total == 0) throw std::invalid_argument("win probability of an empty matchup");
    if (tc == TieConvention::StrictWin) return Rational(BigInt(c.wins), BigInt(total));
    return Rational(BigInt(2) * c.wins + c.ties, BigInt(2) * total);
}

bool beats(const MatchupCount& c, TieConvention tc, const Rational& p) {
    const Rational half(1, 2);
    if (p < half || p > 1) throw std::invalid_argument("threshold must lie in [1/2, 1]");
    const Rational q = win_probability(c, tc);
    return p == half ? q > half : q >= p;
}

MatchupCount matchup_counts(const HolePair& a, const HolePair& b, int jobs) {
    if (a.overlaps(b)) throw std::invalid_argument("matchup " + a.text() + " vs " + b.text() + " shares a card");
    jobs = std::clamp(jobs, 1, 44);
    if (jobs == 1) return count_boards(a, b, 0, 1);
    std::vector<MatchupCount> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back([&, j] { partial[static_cast<std::size_t>(j)] = count_boards(a, b, j, jobs); });
    for (auto& w : workers) w.join();
    MatchupCount sum;
    for (const auto& p : partial) sum += p;
    return sum;
}

MatchupCount matchup_counts_reference(const HolePair& a, const HolePair& b) {
    if (a.overlaps(b)) throw std::invalid_argument("matchup " + a.text() + " vs " + b.text() + " shares a card");
    std::vector<int> rest;
    for (int c = kNumCards - 1; c >= 0; --c)
        if (!((a.mask() | b.mask()) >> c & 1)) rest.push_back(c);
    MatchupCount out;
    std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
    const std::size_t m = rest.size();
    while (true) {
        std::uint64_t board = 0;
        for (auto i : idx) board |= std::uint64_t{1} << rest[i];
        const auto va = evaluate_mask(board | a.mask());
        const auto vb = evaluate_mask(board | b.mask());
        if (va > vb) ++out.wins;
        else if (va < vb) ++out.losses;
        else ++out.ties;
        // Next 5-subset in lexicographic order of positions.
        int k = 4;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - 5 + static_cast<std::size_t>(k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (auto j = static_cast<std::size_t>(k) + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

MatchupCount OnDemandCounts::counts(const HolePair& a, const HolePair& b) const {
    const auto canon = canonical_matchup(a, b);
    const auto key = matchup_key(canon.a, canon.b);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const auto c = matchup_counts(canon.a, canon.b);
    std::lock_guard lock(mutex_);
    cache_[key] = c;
    return c;
}

std::size_t OnDemandCounts::cached() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

MatchupCount CountsMatrix::counts(const HolePair& a, const HolePair& b) const {
    if (a.overlaps(b)) throw std::invalid_argument("matchup " + a.text() + " vs " + b.text() + " shares a card");
    const auto& c = at(a.index(), b.index());
    if (!c.complete()) throw DataError("matrix has no entry for " + a.text() + " vs " + b.text());
    return c;
}

std::size_t count_matchup_classes() {
    std::vector<std::uint32_t> keys;
    keys.reserve(static_cast<std::size_t>(kNumPairs) * (kNumPairs - 1));
    for (int i = 0; i < kNumPairs; ++i) {
        const auto a = HolePair::from_index(i);
        for (int j = 0; j < kNumPairs; ++j) {
            const auto b = HolePair::from_index(j);
            if (a.overlaps(b)) continue;
            const auto c = canonical_matchup(a, b);
            keys.push_back(matchup_key(c.a, c.b));
        }
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

CountsMatrix full_matrix(const MatrixOptions& options) {
    std::vector<HolePair> pairs = options.subset;
    if (pairs.empty())
        for (int i = 0; i < kNumPairs; ++i) pairs.push_back(HolePair::from_index(i));

    // Work items are matchups (a, b) keyed by their card indices; a computed
    // entry is valid regardless of which mode produced it.
    std::vector<std::uint32_t> work;
    for (const auto& a : pairs) {
        for (const auto& b : pairs) {
            if (a.overlaps(b)) continue;
            if (!options.use_symmetry) {
                work.push_back(matchup_key(a, b));
                continue;
            }
            const auto c = canonical_matchup(a, b);
            const auto r = canonical_matchup(c.b, c.a);
            work.push_back(std::min(matchup_key(c.a, c.b), matchup_key(r.a, r.b)));
        }
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    std::unordered_map<std::uint32_t, MatchupCount> done;
    if (!options.checkpoint.empty()) {
        if (options.resume) done = load_checkpoint(options.checkpoint);
        else std::filesystem::remove(options.checkpoint);
    }
    std::vector<std::uint32_t> todo;
    for (auto k : work)
        if (!done.count(k)) todo.push_back(k);

    std::FILE* ckpt = nullptr;
    if (!options.checkpoint.empty()) {
        ckpt = std::fopen(options.checkpoint.string().c_str(), "ab");
        if (!ckpt) throw DataError("cannot open checkpoint " + options.checkpoint.string());
    }

    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    std::size_t finished = work.size() - todo.size();
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            const auto [a, b] = unpack_key(todo[i]);
            const auto c = matchup_counts(a, b);
            std::lock_guard lock(mutex);
            done[todo[i]] = c;
            if (ckpt) {
                unsigned char rec[kCheckpointRecord];
                const std::uint32_t vals[4] = {todo[i], c.wins, c.ties, c.losses};
                for (int v = 0; v < 4; ++v)
                    for (int byte = 0; byte < 4; ++byte) rec[4 * v + byte] = static_cast<unsigned char>(vals[v] >> (8 * byte));
                std::fwrite(rec, 1, kCheckpointRecord, ckpt);
                std::fflush(ckpt);
            }
            ++finished;
            if (options.progress) options.progress(finished, work.size());
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (ckpt) std::fclose(ckpt);

    CountsMatrix m;
    for (const auto& a : pairs) {
        for (const auto& b : pairs) {
            if (a.overlaps(b)) continue;
            MatchupCount c;
            if (!options.use_symmetry) {
                c = done.at(matchup_key(a, b));
            } else {
                const auto can = canonical_matchup(a, b);
                if (auto it = done.find(matchup_key(can.a, can.b)); it != done.end()) {
                    c = it->second;
                } else {
                    const auto r = canonical_matchup(can.b, can.a);
                    c = done.at(matchup_key(r.a, r.b)).swapped();
                }
            }
            m.at(a.index(), b.index()) = c;
        }
    }
    return m;
}

void write_matrix(const std::filesystem::path& path, const CountsMatrix& m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out.write("PKTP", 4);
    put_u16(out, kMatrixFormatVersion);
    put_u32(out, static_cast<std::uint32_t>(CountsMatrix::n));
    for (const auto& c : m.entries()) {
        put_u32(out, c.wins);
        put_u32(out, c.ties);
        put_u32(out, c.losses);
    }
    if (!out) throw DataError("write failed for " + path.string());
}

CountsMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open matrix file " + path.string());
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    constexpr std::size_t header = 4 + 2 + 4;
    if (buf.size() < header || std::string(buf.begin(), buf.begin() + 4) != "PKTP") throw DataError(path.string() + ": not a PKTP matrix file");
    const std::uint16_t version = static_cast<std::uint16_t>(buf[4] | buf[5] << 8);
    if (version != kMatrixFormatVersion) throw DataError(path.string() + ": unsupported format version " + std::to_string(version));
    const std::uint32_t n = get_u32(buf.data() + 6);
    if (n != static_cast<std::uint32_t>(CountsMatrix::n)) throw DataError(path.string() + ": unexpected dimension " + std::to_string(n));
    const std::size_t expected = header + std::size_t{n} * n * 12;
    if (buf.size() != expected)
        throw DataError(path.string() + ": truncated or oversized (" + std::to_string(buf.size()) + " bytes, expected " + std::to_string(expected) + ")");
    CountsMatrix m;
    const unsigned char* p = buf.data() + header;
    for (auto& c : m.entries()) {
        c = {get_u32(p), get_u32(p + 4), get_u32(p + 8)};
        p += 12;
    }
    return m;
}

void write_matrix_csv(std::ostream& out, const CountsMatrix& m) {
    out << "a_index,b_index,a_text,b_text,wins,ties,losses\n";
    for (int i = 0; i < CountsMatrix::n; ++i) {
        const auto a = HolePair::from_index(i);
        for (int j = 0; j < CountsMatrix::n; ++j) {
            const auto& c = m.at(i, j);
            if (!c.complete()) continue;
            const auto b = HolePair::from_index(j);
            out << i << ',' << j << ',' << pair_label(a) << ',' << pair_label(b) << ',' << c.wins << ',' << c.ties << ',' << c.losses << '\n';
        }
    }
}

ClosestCall closest_call(const CountsMatrix& m, TieConvention tc) {
    // All complete entries share the denominator, so compare numerators:
    // strict-win uses w against total, split-tie uses 2w + t against 2 * total.
    const std::uint64_t total = kBoardsPerMatchup;
    const std::uint64_t half = tc == TieConvention::StrictWin ? total : 2 * total;  // 2 * numerator > half
    auto numerator = [&](const MatchupCount& c) { return tc == TieConvention::StrictWin ? std::uint64_t{c.wins} : 2 * std::uint64_t{c.wins} + c.ties; };
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::pair<int, int>> where;
    for (int i = 0; i < CountsMatrix::n; ++i) {
        for (int j = 0; j < CountsMatrix::n; ++j) {
            const auto& c = m.at(i, j);
            if (!c.complete()) continue;
            const auto num = numerator(c);
            if (2 * num <= half) continue;
            if (num < best) {
                best = num;
                where.clear();
            }
            if (num == best) where.emplace_back(i, j);
        }
    }
    if (where.empty()) throw DataError("matrix has no matchup above one half");
    ClosestCall out;
    out.probability = Rational(BigInt(best), BigInt(tc == TieConvention::StrictWin ? total : 2 * total));
    for (auto [i, j] : where) out.matchups.emplace_back(HolePair::from_index(i), HolePair::from_index(j));
    return out;
}

std::string pair_label(const HolePair& p) {
    if (p.lo().rank() == p.hi().rank()) return p.lo().text() + p.hi().text();
    return p.hi().text() + p.lo().text();
}

OverlapError::OverlapError(std::vector<Overlap> overlaps)
    : std::invalid_argument([&] {
          std::string msg = "hole pairs share cards:";
          for (const auto& o : overlaps) {
              msg += " " + pair_label(o.a) + "/" + pair_label(o.b) + " (";
              for (std::size_t i = 0; i < o.shared.size(); ++i) msg += (i ? "," : "") + o.shared[i].text();
              msg += ")";
          }
          return msg;
      }()),
      overlaps_(std::move(overlaps)) {}

void require_disjoint(const std::vector<HolePair>& vertices) {
    std::vector<OverlapError::Overlap> bad;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const auto shared = vertices[i].mask() & vertices[j].mask();
            if (!shared) continue;
            OverlapError::Overlap o{vertices[i], vertices[j], {}};
            for (auto s = shared; s; s &= s - 1) o.shared.push_back(Card::from_index(std::countr_zero(s)));
            bad.push_back(std::move(o));
        }
    }
    if (!bad.empty()) throw OverlapError(std::move(bad));
}

Tournament relation_at(const CountsSource& source, const std::vector<HolePair>& vertices, TieConvention tc, const Rational& p) {
    require_disjoint(vertices);
    std::vector<std::string> labels;
    for (const auto& v : vertices) labels.push_back(pair_label(v));
    Tournament t(labels);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const auto c = source.counts(vertices[i], vertices[j]);
            if (beats(c, tc, p)) t.add_edge(i, j, win_probability(c, tc));
            else if (beats(c.swapped(), tc, p)) t.add_edge(j, i, win_probability(c.swapped(), tc));
        }
    }
    return t;
}

}  // namespace pokertopo
