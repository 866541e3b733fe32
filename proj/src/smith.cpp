#include "pokertopo/smith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pokertopo {
namespace {

struct Overflow {};

// Checked int64 arithmetic; throws Overflow so the caller can redo the
// elimination over BigInt.
struct Checked {
    static std::int64_t sub_mul(std::int64_t x, std::int64_t f, std::int64_t y) {
        std::int64_t p, r;
        if (__builtin_mul_overflow(f, y, &p) || __builtin_sub_overflow(x, p, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t neg_mul(std::int64_t a, std::int64_t u) {
        std::int64_t p;
        if (__builtin_mul_overflow(a, u, &p)) throw Overflow{};
        return p;
    }
};

template <class T>
T sub_mul(const T& x, const T& f, const T& y) {
    if constexpr (std::is_same_v<T, std::int64_t>) return Checked::sub_mul(x, f, y);
    else return x - f * y;
}

template <class T>
T mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) return Checked::neg_mul(a, b);
    else return a * b;
}

template <class T>
bool is_unit(const T& v) {
    return v == 1 || v == -1;
}

template <class T>
struct Eliminator {
    using Column = std::vector<std::pair<std::uint32_t, T>>;
    std::vector<Column> cols;
    std::vector<std::vector<std::uint32_t>> row_cols;
    std::vector<char> col_alive;
    std::size_t pivots = 0;

    explicit Eliminator(const SparseIntMatrix& m) : cols(m.cols), row_cols(m.rows), col_alive(m.cols, 1) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            for (const auto& e : m.columns[j]) {
                if (e.value == 0) continue;
                cols[j].emplace_back(e.row, T(e.value));
                row_cols[e.row].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }

    void pivot(std::uint32_t r, std::size_t c) {
        const Column pc = cols[c];
        const auto pit = std::lower_bound(pc.begin(), pc.end(), r, [](const auto& e, std::uint32_t row) { return e.first < row; });
        const T u = pit->second;
        auto& cand = row_cols[r];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        Column merged;
        for (auto k : cand) {
            if (k == c || !col_alive[k]) continue;
            Column& ck = cols[k];
            auto it = std::lower_bound(ck.begin(), ck.end(), r, [](const auto& e, std::uint32_t row) { return e.first < row; });
            if (it == ck.end() || it->first != r) continue;
            const T factor = mul(it->second, u);
            merged.clear();
            merged.reserve(ck.size() + pc.size());
            std::size_t i = 0, j = 0;
            while (i < ck.size() || j < pc.size()) {
                if (j == pc.size() || (i < ck.size() && ck[i].first < pc[j].first)) {
                    merged.push_back(ck[i++]);
                } else if (i == ck.size() || pc[j].first < ck[i].first) {
                    merged.emplace_back(pc[j].first, sub_mul(T(0), factor, pc[j].second));
                    row_cols[pc[j].first].push_back(k);
                    ++j;
                } else {
                    T v = sub_mul(ck[i].second, factor, pc[j].second);
                    if (v != 0) merged.emplace_back(ck[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            ck.swap(merged);
        }
        col_alive[c] = 0;
        cols[c].clear();
        cols[c].shrink_to_fit();
        row_cols[r].clear();
        row_cols[r].shrink_to_fit();
        ++pivots;
    }

    void run() {
        bool progress = true;
        std::vector<std::size_t> order;
        while (progress) {
            progress = false;
            order.clear();
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (col_alive[j] && !cols[j].empty()) order.push_back(j);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cols[a].size() < cols[b].size(); });
            for (auto j : order) {
                if (!col_alive[j] || cols[j].empty()) continue;
                std::uint32_t best_row = 0;
                std::size_t best_weight = SIZE_MAX;
                for (const auto& [row, v] : cols[j]) {
                    if (is_unit(v) && row_cols[row].size() < best_weight) {
                        best_weight = row_cols[row].size();
                        best_row = row;
                    }
                }
                if (best_weight == SIZE_MAX) continue;
                pivot(best_row, j);
                progress = true;
            }
        }
    }

    std::vector<std::vector<BigInt>> remainder() const {
        std::vector<std::size_t> live_cols;
        std::vector<std::uint32_t> live_rows;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!col_alive[j] || cols[j].empty()) continue;
            live_cols.push_back(j);
            for (const auto& e : cols[j]) live_rows.push_back(e.first);
        }
        std::sort(live_rows.begin(), live_rows.end());
        live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
        std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
        for (std::size_t jj = 0; jj < live_cols.size(); ++jj) {
            for (const auto& [row, v] : cols[live_cols[jj]]) {
                const auto ii = static_cast<std::size_t>(std::lower_bound(live_rows.begin(), live_rows.end(), row) - live_rows.begin());
                dense[ii][jj] = BigInt(v);
            }
        }
        return dense;
    }
};

template <class T>
SmithForm eliminate(const SparseIntMatrix& m) {
    Eliminator<T> e(m);
    e.run();
    SmithForm rest = smith_normal_form_dense(e.remainder());
    rest.rank += e.pivots;
    rest.unit_factors += e.pivots;
    return rest;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    SparseIntMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (dense[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < m.cols; ++j)
            if (dense[i][j] != 0) m.columns[j].push_back({static_cast<std::uint32_t>(i), dense[i][j]});
    }
    return m;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& e : columns[j]) d[e.row][j] = e.value;
    return d;
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

std::vector<BigInt> SmithForm::invariant_factors() const {
    std::vector<BigInt> out(unit_factors, BigInt(1));
    out.insert(out.end(), torsion.begin(), torsion.end());
    return out;
}

SmithForm smith_normal_form_dense(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        auto move_min = [&](bool whole_block) {
            std::size_t bi = rows, bj = cols;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (!whole_block && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    BigInt v = abs(a[i][j]);
                    if (bi == rows || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == rows) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!move_min(true)) break;
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
            move_min(false);
        }
        diag.push_back(abs(a[t][t]));
    }
    // diag(x, y) is equivalent to diag(gcd, lcm); sweeping pairs yields the
    // divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const BigInt g = gcd(diag[i], diag[j]);
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    SmithForm out;
    out.rank = diag.size();
    for (auto& d : diag) {
        if (d == 1) ++out.unit_factors;
        else out.torsion.push_back(std::move(d));
    }
    return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
    try {
        return eliminate<std::int64_t>(m);
    } catch (const Overflow&) {
        return eliminate<BigInt>(m);
    }
}

SmithForm smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) { return smith_normal_form(SparseIntMatrix::from_dense(dense)); }

}  // namespace pokertopo
