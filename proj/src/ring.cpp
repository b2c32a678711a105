#include <algorithm>
#include <cstdint>
#include <vector>

#include "cyldom/engine.hpp"

namespace cyldom {

// gamma via the orthogonal sweep: the frontier is the full cyclic ring of n
// cells and rows are processed 1..m. Within a row the cells are decided left
// to right; the ring seam (cells n-1 and 0) is resolved at the row end using
// one carried bit for cell 0's occupancy.
int gamma_path_orientation(int n, int m, const EngineOptions& opts) {
    if (n < 3) throw input_error("cylinder requires n >= 3");
    if (m < 2) throw input_error("cylinder requires m >= 2");
    if (n > 13) throw infeasible_error("ring frontier capped at n <= 13");
    if (n > 10 && !opts.allow_long)
        throw long_run_refused("ring frontier wider than 10 is long-running; "
                               "pass --allow-long");

    constexpr int kNeedy = 0, kCovered = 1, kOccupied = 2;
    constexpr int16_t kInf = 30000;

    std::vector<int32_t> pow3(n + 1);
    pow3[0] = 1;
    for (int i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
    const uint32_t P = static_cast<uint32_t>(pow3[n]);

    auto digit = [&](uint32_t p, int i) {
        return static_cast<int>((p / pow3[i]) % 3);
    };

    // index = profile + (c_first ? P : 0)
    std::vector<int16_t> cur(2 * P, kInf), nxt(2 * P, kInf);

    uint32_t all_covered = 0;
    for (int i = 0; i < n; ++i) all_covered += kCovered * pow3[i];
    cur[all_covered] = 0; // virtual row 0: nothing occupied, nothing owed

    for (int row = 1; row <= m; ++row) {
        for (int i = 0; i < n; ++i) {
            std::fill(nxt.begin(), nxt.end(), kInf);
            for (uint32_t idx = 0; idx < 2 * P; ++idx) {
                int16_t v = cur[idx];
                if (v >= kInf) continue;
                bool c_first = idx >= P;
                uint32_t p = c_first ? idx - P : idx;
                int d_old = digit(p, i);
                for (int b = 0; b < 2; ++b) {
                    // finalize the cell above (all rows Required)
                    if (d_old == kNeedy && !b) continue;
                    int nd = b ? kOccupied
                               : ((d_old == kOccupied ||
                                   (i > 0 && digit(p, i - 1) == kOccupied))
                                      ? kCovered
                                      : kNeedy);
                    uint32_t q = p + (nd - d_old) * pow3[i];
                    if (b && i > 0 && digit(p, i - 1) == kNeedy)
                        q += (kCovered - kNeedy) * pow3[i - 1];
                    bool cf = i == 0 ? (b == 1) : c_first;
                    if (i == n - 1) {
                        // ring seam: cell 0 may be covered by cell n-1 and
                        // vice versa; then the carried bit is dropped
                        if (b && digit(q, 0) == kNeedy)
                            q += (kCovered - kNeedy) * pow3[0];
                        if (cf && digit(q, n - 1) == kNeedy)
                            q += (kCovered - kNeedy) * pow3[n - 1];
                        cf = false;
                    }
                    uint32_t out = q + (cf ? P : 0);
                    int16_t nv = static_cast<int16_t>(v + b);
                    if (nv < nxt[out]) nxt[out] = nv;
                }
            }
            std::swap(cur, nxt);
        }
    }

    // last row: every cell must have ended dominated
    int best = kInf;
    for (uint32_t p = 0; p < P; ++p) {
        if (cur[p] >= kInf) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (digit(p, i) == kNeedy) ok = false;
        if (ok) best = std::min<int>(best, cur[p]);
    }
    if (best >= kInf) throw infeasible_error("gamma unattained"); // cannot happen
    return best;
}

} // namespace cyldom
