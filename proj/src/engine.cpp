#include "cyldom/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

namespace cyldom {
namespace engine_detail {

namespace {

// Cell states inside a frontier profile.
constexpr int kNeedy = 0;
constexpr int kCovered = 1;
constexpr int kOccupied = 2;

constexpr int16_t kInf = 30000;
constexpr int16_t kInfThresh = 20000; // values above this are logically infinite

// One branch of a cell decision: occupy the new cell or not. `delta` moves
// the mixed-profile index to the successor profile.
struct CellCase {
    bool valid = false;
    int16_t cost = 0;
    int32_t delta = 0;
};

struct Tables {
    int h = 0;
    uint32_t profiles = 0; // 3^h
    std::vector<int32_t> pow3;
    std::vector<CellCase> cases; // [((r*3 + d_prev)*3 + d_old)*2 + b]
    std::vector<uint16_t> occ_of;
    std::vector<uint16_t> needy_of;
    uint16_t full_mask = 0;
    uint16_t required_mask = 0;
    uint16_t occupiable_mask = 0;
    int occupy_cost = 0;
    int credit = 0;

    explicit Tables(const DpProblem& prob) {
        h = prob.height();
        if (h < 1 || h > 15) throw infeasible_error("frontier height out of range");
        occupy_cost = prob.occupy_cost;
        credit = prob.dominate_credit;
        pow3.resize(h + 1);
        pow3[0] = 1;
        for (int i = 1; i <= h; ++i) pow3[i] = pow3[i - 1] * 3;
        profiles = static_cast<uint32_t>(pow3[h]);
        full_mask = static_cast<uint16_t>((1u << h) - 1);
        for (int r = 0; r < h; ++r) {
            if (prob.classes[r] == RowClass::Required)
                required_mask |= static_cast<uint16_t>(1u << r);
            if (prob.classes[r] != RowClass::Padding)
                occupiable_mask |= static_cast<uint16_t>(1u << r);
        }

        cases.assign(static_cast<size_t>(h) * 3 * 3 * 2, CellCase{});
        for (int r = 0; r < h; ++r) {
            for (int d_prev = 0; d_prev < 3; ++d_prev) {
                for (int d_old = 0; d_old < 3; ++d_old) {
                    for (int b = 0; b < 2; ++b) {
                        CellCase cc;
                        cc.valid = true;
                        int cost = 0;
                        if (b && prob.classes[r] == RowClass::Padding)
                            cc.valid = false;
                        // finalize the old cell in row r
                        if (d_old == kOccupied || d_old == kCovered) {
                            cost += credit;
                        } else if (b) {
                            cost += credit; // dominated by the new same-row cell
                        } else if (prob.classes[r] == RowClass::Required) {
                            cc.valid = false;
                        }
                        if (b) cost += occupy_cost;
                        int nd_r = b ? kOccupied
                                     : ((d_old == kOccupied ||
                                         (r > 0 && d_prev == kOccupied))
                                            ? kCovered
                                            : kNeedy);
                        int nd_prev =
                            (b && r > 0 && d_prev == kNeedy) ? kCovered : d_prev;
                        cc.cost = static_cast<int16_t>(cost);
                        cc.delta = (nd_r - d_old) * pow3[r];
                        if (r > 0) cc.delta += (nd_prev - d_prev) * pow3[r - 1];
                        cases[case_index(r, d_prev, d_old, b)] = cc;
                    }
                }
            }
        }

        occ_of.resize(profiles);
        needy_of.resize(profiles);
        for (uint32_t p = 0; p < profiles; ++p) {
            uint16_t occ = 0, needy = 0;
            uint32_t q = p;
            for (int r = 0; r < h; ++r) {
                int d = q % 3;
                q /= 3;
                if (d == kOccupied) occ |= static_cast<uint16_t>(1u << r);
                if (d == kNeedy) needy |= static_cast<uint16_t>(1u << r);
            }
            occ_of[p] = occ;
            needy_of[p] = needy;
        }
    }

    size_t case_index(int r, int d_prev, int d_old, int b) const {
        return ((static_cast<size_t>(r) * 3 + d_prev) * 3 + d_old) * 2 + b;
    }

    static uint16_t vertical(uint16_t occ, uint16_t full) {
        return static_cast<uint16_t>(((occ << 1) | (occ >> 1)) & full);
    }

    // Wrap from a final-column profile p back into start state s0: the wrap
    // finalizes column n against s0's occupancy and re-derives s0's coverage
    // claims, which must match exactly. Returns kInf if invalid.
    int wrap_cost(uint32_t p, uint16_t occ0, uint16_t cov0) const {
        uint16_t occ_p = occ_of[p];
        uint16_t needy_p = needy_of[p];
        if (needy_p & required_mask & static_cast<uint16_t>(~occ0)) return kInf;
        uint16_t vert0 = vertical(occ0, full_mask);
        uint16_t expect =
            static_cast<uint16_t>((vert0 | occ_p) & ~occ0 & full_mask);
        if (expect != cov0) return kInf;
        int dominated = std::popcount(static_cast<unsigned>(occ_p)) +
                        std::popcount(static_cast<unsigned>(
                            full_mask & ~occ_p & ~needy_p)) +
                        std::popcount(static_cast<unsigned>(needy_p & occ0));
        return occupy_cost * std::popcount(static_cast<unsigned>(occ0)) +
               credit * dominated;
    }

    // Cheapest wrap from p into *any* start state: occupy exactly the needy
    // required rows, nothing else (extra occupancy never pays off since
    // occupy_cost + credit > 0).
    int wrap_floor(uint32_t p) const {
        uint16_t occ_p = occ_of[p];
        uint16_t needy_p = needy_of[p];
        int forced = std::popcount(static_cast<unsigned>(needy_p & required_mask));
        int settled = std::popcount(static_cast<unsigned>(occ_p)) +
                      std::popcount(static_cast<unsigned>(
                          full_mask & ~occ_p & ~needy_p));
        return (occupy_cost + credit) * forced + credit * settled;
    }

    bool valid_start(uint32_t p) const {
        uint16_t occ = occ_of[p];
        if (occ & static_cast<uint16_t>(~occupiable_mask)) return false;
        uint16_t nonocc = static_cast<uint16_t>(full_mask & ~occ);
        uint16_t cov = static_cast<uint16_t>(nonocc & ~needy_of[p]);
        uint16_t vert = vertical(occ, full_mask);
        if (vert & nonocc & static_cast<uint16_t>(~cov))
            return false; // vertical coverage is mandatory
        if (cov & static_cast<uint16_t>(~(vert | occupiable_mask)))
            return false; // coverage from behind needs an occupiable row
        return true;
    }
};

// Sparse frontier: dense value array plus the list of finite entries.
struct Frontier {
    std::vector<int16_t> val;
    std::vector<uint32_t> live;

    explicit Frontier(uint32_t profiles) : val(profiles, kInf) {}

    void clear() {
        for (uint32_t p : live) val[p] = kInf;
        live.clear();
    }
};

// Advance one full column: h cell steps, each branching on occupancy of the
// new cell in that row. On return the new frontier is in `b` and `a` is
// empty.
void column_forward(const Tables& T, Frontier& a, Frontier& b) {
    Frontier* in = &a;
    Frontier* out = &b;
    for (int r = 0; r < T.h; ++r) {
        const int32_t p3 = T.pow3[r];
        const int32_t p3m1 = r > 0 ? T.pow3[r - 1] : 1;
        const CellCase* row_cases = &T.cases[T.case_index(r, 0, 0, 0)];
        for (uint32_t p : in->live) {
            int16_t v = in->val[p];
            int d_old = static_cast<int>((p / p3) % 3);
            int d_prev = r > 0 ? static_cast<int>((p / p3m1) % 3) : 0;
            const CellCase* cc = &row_cases[(d_prev * 3 + d_old) * 2];
            for (int bch = 0; bch < 2; ++bch) {
                if (!cc[bch].valid) continue;
                uint32_t q = static_cast<uint32_t>(
                    static_cast<int64_t>(p) + cc[bch].delta);
                int16_t nv = static_cast<int16_t>(v + cc[bch].cost);
                if (out->val[q] == kInf) {
                    out->val[q] = nv;
                    out->live.push_back(q);
                } else if (nv < out->val[q]) {
                    out->val[q] = nv;
                }
            }
        }
        in->clear();
        std::swap(in, out);
    }
    if (in != &b) {
        std::swap(a.val, b.val);
        std::swap(a.live, b.live);
    }
}

// One backward column: out[p] = min over transitions p -> p' of
// cost(p -> p') + in[p']. Dense.
void column_backward(const Tables& T, const std::vector<int16_t>& in,
                     std::vector<int16_t>& out, std::vector<int16_t>& scratch) {
    const uint32_t P = T.profiles;
    const int16_t* cur = in.data();
    int16_t* buf_a = scratch.data();
    int16_t* buf_b = out.data();
    int16_t* nxt = buf_a;
    for (int r = T.h - 1; r >= 0; --r) {
        const int32_t p3 = T.pow3[r];
        const int32_t p3m1 = r > 0 ? T.pow3[r - 1] : 1;
        const CellCase* row_cases = &T.cases[T.case_index(r, 0, 0, 0)];
        for (uint32_t p = 0; p < P; ++p) {
            int d_old = static_cast<int>((p / p3) % 3);
            int d_prev = r > 0 ? static_cast<int>((p / p3m1) % 3) : 0;
            const CellCase* cc = &row_cases[(d_prev * 3 + d_old) * 2];
            int best = kInf;
            for (int bch = 0; bch < 2; ++bch) {
                if (!cc[bch].valid) continue;
                int cand = cc[bch].cost + cur[p + cc[bch].delta];
                if (cand < best) best = cand;
            }
            nxt[p] = static_cast<int16_t>(best);
        }
        cur = nxt;
        nxt = (nxt == buf_a) ? buf_b : buf_a;
    }
    if (cur != out.data())
        std::memcpy(out.data(), cur, P * sizeof(int16_t));
    for (uint32_t p = 0; p < P; ++p)
        if (out[p] > kInfThresh) out[p] = kInf;
}

struct BestTracker {
    std::atomic<int> best{kInf};
    std::mutex mu;
    std::vector<uint32_t> starts;

    void offer(int value, uint32_t s0) {
        int cur = best.load(std::memory_order_relaxed);
        if (value > cur) return;
        std::lock_guard<std::mutex> lock(mu);
        cur = best.load(std::memory_order_relaxed);
        if (value < cur) {
            best.store(value, std::memory_order_relaxed);
            starts.assign(1, s0);
        } else if (value == cur) {
            starts.push_back(s0);
        }
    }
};

int hw_threads(const EngineOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace

SeriesResult compute_series(const DpProblem& prob, int n_max,
                            const EngineOptions& opts,
                            const std::vector<int>& seed_upper_bounds) {
    if (n_max < 3) throw input_error("series requires n_max >= 3");
    Tables T(prob);
    const uint32_t P = T.profiles;
    const int kcount = n_max - 2; // lengths 3..n_max

    std::vector<int> seeds(static_cast<size_t>(kcount), kInf);
    for (size_t i = 0; i < seeds.size() && i < seed_upper_bounds.size(); ++i)
        seeds[i] = std::min<int>(kInf, seed_upper_bounds[i]);

    // Completion lower bounds: WT[p*n_max + (t-1)] bounds the cheapest way
    // to finish a cycle from state p in exactly t further transitions (t-1
    // columns plus a wrap into any start state).
    std::vector<int16_t> WT(static_cast<size_t>(P) * n_max, kInf);
    {
        std::vector<int16_t> w(P), nw(P), scratch(P);
        for (uint32_t p = 0; p < P; ++p)
            w[p] = static_cast<int16_t>(std::min<int>(T.wrap_floor(p), kInf));
        for (uint32_t p = 0; p < P; ++p) WT[static_cast<size_t>(p) * n_max] = w[p];
        for (int t = 2; t <= n_max; ++t) {
            column_backward(T, w, nw, scratch);
            std::swap(w, nw);
            for (uint32_t p = 0; p < P; ++p)
                WT[static_cast<size_t>(p) * n_max + (t - 1)] = w[p];
        }
    }

    // Start states, most promising first.
    std::vector<uint32_t> starts;
    starts.reserve(P / 8 + 16);
    for (uint32_t p = 0; p < P; ++p)
        if (T.valid_start(p)) starts.push_back(p);
    {
        std::vector<int32_t> key(starts.size());
        for (size_t i = 0; i < starts.size(); ++i) {
            const int16_t* wrow = &WT[static_cast<size_t>(starts[i]) * n_max];
            int32_t best = kInf;
            for (int k = 3; k <= n_max; ++k)
                best = std::min<int32_t>(best, wrow[k - 1] - seeds[k - 3]);
            key[i] = best;
        }
        std::vector<uint32_t> order(starts.size());
        for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](uint32_t x, uint32_t y) { return key[x] < key[y]; });
        std::vector<uint32_t> sorted;
        sorted.reserve(starts.size());
        for (uint32_t i : order) sorted.push_back(starts[i]);
        starts.swap(sorted);
    }

    // Start caps from a rotation argument: a cycle of length k and weight at
    // most B has some column with at most floor((B - credit*k*h)/(occ*k))
    // occupied cells, so enumerating only such starts still sees it.
    std::vector<int> occ_cap(static_cast<size_t>(kcount), T.h);
    for (int k = 3; k <= n_max; ++k) {
        if (seeds[k - 3] >= kInf) continue;
        long long num =
            seeds[k - 3] - static_cast<long long>(T.credit) * k * T.h;
        long long cap = num / (static_cast<long long>(T.occupy_cost) * k);
        occ_cap[k - 3] = static_cast<int>(std::min<long long>(cap, T.h));
    }

    std::vector<BestTracker> trackers(static_cast<size_t>(kcount));
    for (int i = 0; i < kcount; ++i)
        trackers[i].best.store(seeds[i], std::memory_order_relaxed);

    const bool progress = std::getenv("CYLDOM_PROGRESS") != nullptr;
    std::atomic<size_t> cursor{0};
    std::atomic<size_t> executed{0};

    auto worker = [&]() {
        Frontier a(P), b(P);
        for (;;) {
            size_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
            if (idx >= starts.size()) return;
            uint32_t s0 = starts[idx];

            if (opts.pruning) {
                // Skip decisions use the fixed seed bounds so the set of
                // executed slices is independent of thread timing.
                const int16_t* wrow = &WT[static_cast<size_t>(s0) * n_max];
                int pop = std::popcount(static_cast<unsigned>(T.occ_of[s0]));
                bool useful = false;
                for (int k = 3; k <= n_max; ++k) {
                    if (pop <= occ_cap[k - 3] && wrow[k - 1] <= seeds[k - 3]) {
                        useful = true;
                        break;
                    }
                }
                if (!useful) continue;
            }
            executed.fetch_add(1, std::memory_order_relaxed);

            uint16_t occ0 = T.occ_of[s0];
            uint16_t cov0 = static_cast<uint16_t>(T.full_mask & ~occ0 &
                                                  ~T.needy_of[s0]);
            a.clear();
            b.clear();
            a.val[s0] = 0;
            a.live.push_back(s0);
            for (int t = 1; t <= n_max - 1; ++t) {
                column_forward(T, a, b);
                std::swap(a, b);
                if (a.live.empty()) break;
                int k = t + 1;
                if (k >= 3) {
                    int best = kInf;
                    for (uint32_t p : a.live) {
                        int wc = T.wrap_cost(p, occ0, cov0);
                        if (wc >= kInf) continue;
                        best = std::min(best, a.val[p] + wc);
                    }
                    if (best < kInfThresh) trackers[k - 3].offer(best, s0);
                }
                if (opts.pruning && k < n_max) {
                    // Keep a state only if some remaining length is still
                    // within the best bound (ties kept, so exact minima and
                    // their start lists never depend on thread timing).
                    size_t kept = 0;
                    for (size_t i = 0; i < a.live.size(); ++i) {
                        uint32_t p = a.live[i];
                        const int16_t* wrow =
                            &WT[static_cast<size_t>(p) * n_max];
                        int v = a.val[p];
                        bool alive = false;
                        for (int t2 = 1; t2 <= n_max - t; ++t2) {
                            int kk = t + t2;
                            if (kk < 3) continue;
                            int bound = trackers[kk - 3].best.load(
                                std::memory_order_relaxed);
                            if (v + wrow[t2 - 1] <= bound) {
                                alive = true;
                                break;
                            }
                        }
                        if (alive) {
                            a.live[kept++] = p;
                        } else {
                            a.val[p] = kInf;
                        }
                    }
                    a.live.resize(kept);
                    if (a.live.empty()) break;
                }
            }
            a.clear();
            if (progress && idx % 1000 == 0)
                std::fprintf(stderr, "[cyldom] slice %zu/%zu\n", idx,
                             starts.size());
        }
    };

    int nthreads = std::min<int>(hw_threads(opts), 64);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SeriesResult out;
    out.values.resize(static_cast<size_t>(kcount));
    out.optimal_starts.resize(static_cast<size_t>(kcount));
    for (int i = 0; i < kcount; ++i) {
        int v = trackers[i].best.load(std::memory_order_relaxed);
        out.values[i] = v >= kInfThresh ? kUnattained : v;
        auto& s = trackers[i].starts;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() > 64) s.resize(64);
        out.optimal_starts[i] = std::move(s);
    }
    if (progress)
        std::fprintf(stderr, "[cyldom] executed %zu of %zu slices\n",
                     executed.load(), starts.size());
    return out;
}

std::vector<int> slice_diagonals(const DpProblem& prob, int n_max, uint32_t s0) {
    Tables T(prob);
    if (s0 >= T.profiles || !T.valid_start(s0))
        throw input_error("not a valid start state");
    Frontier a(T.profiles), b(T.profiles);
    uint16_t occ0 = T.occ_of[s0];
    uint16_t cov0 = static_cast<uint16_t>(T.full_mask & ~occ0 & ~T.needy_of[s0]);
    a.val[s0] = 0;
    a.live.push_back(s0);
    std::vector<int> diag(static_cast<size_t>(n_max - 2), kUnattained);
    for (int t = 1; t <= n_max - 1; ++t) {
        column_forward(T, a, b);
        std::swap(a, b);
        if (a.live.empty()) break;
        int k = t + 1;
        if (k < 3) continue;
        int best = kInf;
        for (uint32_t p : a.live) {
            int wc = T.wrap_cost(p, occ0, cov0);
            if (wc >= kInf) continue;
            best = std::min(best, a.val[p] + wc);
        }
        if (best < kInfThresh) diag[k - 3] = best;
    }
    return diag;
}

int enumerate_cycles(const DpProblem& prob, int n, uint32_t s0, int cost,
                     int budget, std::optional<int> max_cells,
                     const std::function<bool(const CycleWalk&)>& cb) {
    if (n < 3) throw input_error("cycle length must be >= 3");
    if (budget <= 0) return 0;
    Tables T(prob);
    if (s0 >= T.profiles || !T.valid_start(s0))
        throw input_error("not a valid start state");
    const uint32_t P = T.profiles;
    uint16_t occ0 = T.occ_of[s0];
    uint16_t cov0 = static_cast<uint16_t>(T.full_mask & ~occ0 & ~T.needy_of[s0]);

    // completion[j][s]: exact min cost of the remaining n-j transitions from
    // state s at position j, ending with the wrap into s0.
    std::vector<std::vector<int16_t>> completion(static_cast<size_t>(n));
    completion[n - 1].resize(P);
    for (uint32_t p = 0; p < P; ++p)
        completion[n - 1][p] = static_cast<int16_t>(
            std::min(T.wrap_cost(p, occ0, cov0), static_cast<int>(kInf)));
    {
        std::vector<int16_t> scratch(P);
        for (int j = n - 2; j >= 1; --j) {
            completion[j].resize(P);
            column_backward(T, completion[j + 1], completion[j], scratch);
        }
    }

    CycleWalk walk;
    walk.states.assign(static_cast<size_t>(n), 0);
    walk.states[0] = s0;
    walk.occupancy.assign(static_cast<size_t>(n), occ0);
    int start_cells = std::popcount(static_cast<unsigned>(occ0));
    int delivered = 0;
    bool stop = false;

    std::function<void(int, uint32_t, int, int)> descend_column;
    std::function<void(int, int, uint32_t, int, int)> descend_cell;

    descend_cell = [&](int j, int r, uint32_t p, int g, int cells) {
        if (stop) return;
        if (r == T.h) {
            if (g + completion[j + 1][p] != cost) return;
            walk.states[j + 1] = p;
            walk.occupancy[j + 1] = T.occ_of[p];
            descend_column(j + 1, p, g, cells);
            return;
        }
        const int32_t p3 = T.pow3[r];
        const int32_t p3m1 = r > 0 ? T.pow3[r - 1] : 1;
        int d_old = static_cast<int>((p / p3) % 3);
        int d_prev = r > 0 ? static_cast<int>((p / p3m1) % 3) : 0;
        for (int bch = 0; bch < 2; ++bch) {
            const CellCase& cc = T.cases[T.case_index(r, d_prev, d_old, bch)];
            if (!cc.valid) continue;
            int nc = cells + bch;
            if (max_cells && nc > *max_cells) continue;
            descend_cell(j, r + 1,
                         static_cast<uint32_t>(static_cast<int64_t>(p) + cc.delta),
                         g + cc.cost, nc);
            if (stop) return;
        }
    };

    descend_column = [&](int j, uint32_t p, int g, int cells) {
        if (stop) return;
        if (j == n - 1) {
            int wc = T.wrap_cost(p, occ0, cov0);
            if (wc >= kInf || g + wc != cost) return;
            if (max_cells && cells > *max_cells) return;
            walk.cells = cells;
            ++delivered;
            if (!cb(walk) || delivered >= budget) stop = true;
            return;
        }
        descend_cell(j, 0, p, g, cells);
    };

    descend_column(0, s0, 0, start_cells);
    return delivered;
}

DpProblem problem_for(const SegmentConfig& config) {
    DpProblem prob;
    prob.classes = config.layout().classes;
    prob.occupy_cost = 5;
    prob.dominate_credit = -1;
    return prob;
}

DpProblem gamma_problem(int m) {
    DpProblem prob;
    prob.classes.assign(static_cast<size_t>(m), RowClass::Required);
    prob.occupy_cost = 1;
    prob.dominate_credit = 0;
    return prob;
}

namespace {

// Upper-bound seed patterns over the occupiable rows, verified column by
// column before use. Diagonal strips dominate the grid perfectly away from
// the wrap; full columns patch the wrap and cover small n.
std::vector<int> seed_bounds_for(const std::vector<RowClass>& classes,
                                 bool need_full_domination, int occupy_cost,
                                 int credit, int n_max) {
    int h = static_cast<int>(classes.size());
    uint16_t full_col = 0;
    for (int r = 0; r < h; ++r)
        if (classes[r] != RowClass::Padding)
            full_col |= static_cast<uint16_t>(1u << r);

    std::vector<int> out(static_cast<size_t>(n_max - 2), 1 << 20);
    for (int n = 3; n <= n_max; ++n) {
        std::vector<std::vector<uint16_t>> candidates;
        {
            std::vector<uint16_t> cols(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; i += 3) cols[i] = full_col;
            candidates.push_back(cols);
        }
        for (int c = 0; c < 5; ++c) {
            std::vector<uint16_t> diag(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < h; ++r)
                    if ((full_col & (1u << r)) && (2 * i + r) % 5 == c)
                        diag[i] |= static_cast<uint16_t>(1u << r);
            candidates.push_back(diag);
            auto patched = diag;
            patched[0] = full_col;
            candidates.push_back(patched);
            patched[n - 1] = full_col;
            candidates.push_back(patched);
        }

        int best = 1 << 20;
        uint16_t full = static_cast<uint16_t>((1u << h) - 1);
        for (const auto& cols : candidates) {
            int size = 0;
            int dominated = 0;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                uint16_t occ = cols[i];
                size += std::popcount(static_cast<unsigned>(occ));
                uint16_t dom = static_cast<uint16_t>(
                    (occ | (occ << 1) | (occ >> 1) | cols[(i + 1) % n] |
                     cols[(i + n - 1) % n]) &
                    full);
                dominated += std::popcount(static_cast<unsigned>(dom));
                for (int r = 0; r < h && ok; ++r) {
                    bool must = need_full_domination ||
                                classes[r] == RowClass::Required;
                    if (must && !(dom & (1u << r))) ok = false;
                }
            }
            if (!ok) continue;
            best = std::min(best, occupy_cost * size + credit * dominated);
        }
        out[n - 3] = best;
    }
    return out;
}

} // namespace

std::vector<int> waste_seed_bounds(const SegmentConfig& config, int n_max) {
    return seed_bounds_for(config.layout().classes, false, 5, -1, n_max);
}

std::vector<int> gamma_seed_bounds(int m, int n_max) {
    std::vector<RowClass> classes(static_cast<size_t>(m), RowClass::Required);
    return seed_bounds_for(classes, true, 1, 0, n_max);
}

Pattern walk_to_segment_pattern(const SegmentConfig& config, int n,
                                const CycleWalk& walk) {
    RowLayout lay = config.layout();
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
        uint16_t occ = walk.occupancy[static_cast<size_t>(i)];
        for (int r = 0; r < lay.height; ++r) {
            if (!(occ & (1u << r))) continue;
            int seg_row = r - lay.seg_top + 1;
            if (seg_row < 1 || seg_row > config.rows)
                throw input_error("walk occupies a padding row");
            cells.push_back({i + 1, seg_row});
        }
    }
    return Pattern(CylinderSpec::segment_dims(n, config.rows), std::move(cells));
}

} // namespace engine_detail
} // namespace cyldom
