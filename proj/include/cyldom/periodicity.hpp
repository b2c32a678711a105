#pragma once

// Detection of eventual arithmetic periodicity f(n) = f(n-p) + q in value
// series indexed by cycle length. The certificate is empirical: it attests
// the relation on the observed data only.

#include <optional>
#include <string>
#include <vector>

#include "cyldom/engine.hpp"

namespace cyldom {

struct PeriodicityCert {
    int p = 0;         // period
    int q = 0;         // increment per period
    int threshold = 0; // first n from which the relation holds through n_max
    int window = 0;    // number of verified instances (n_max - threshold + 1)
};

constexpr int kDefaultPMax = 15;
// Verification window: engineering default of 3 * p_max data points.
inline int default_min_window(int p_max) { return 3 * p_max; }

// Smallest p (ties broken by smallest threshold) whose relation holds over at
// least min_window trailing entries; nullopt if none qualifies. min_window 0
// selects the default.
std::optional<PeriodicityCert> detect(const WasteSeries& series,
                                      int p_max = kDefaultPMax,
                                      int min_window = 0);

// f(n) from the certified recurrence; n must be >= cert.threshold.
int extrapolate(const PeriodicityCert& cert, const WasteSeries& series, int n);

// Affine fits a*n + b per residue class of n mod 5 over the certified window;
// reported alongside the single (p, q) because the waste constants are
// naturally per-residue. Slope is rational (num/den).
struct ResidueFit {
    int residue = 0;
    bool linear = false;
    long long a_num = 0, a_den = 1;
    long long b_num = 0, b_den = 1;
};
std::vector<ResidueFit> residue_fits(const WasteSeries& series,
                                     const PeriodicityCert& cert);

std::string format_cert(const PeriodicityCert& cert);
std::optional<PeriodicityCert> parse_cert(const std::string& text);

} // namespace cyldom
