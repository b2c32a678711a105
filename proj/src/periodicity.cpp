#include "cyldom/periodicity.hpp"

#include <numeric>
#include <sstream>

namespace cyldom {

std::optional<PeriodicityCert> detect(const WasteSeries& series, int p_max,
                                      int min_window) {
    if (p_max < 1) throw input_error("p_max must be >= 1");
    if (min_window <= 0) min_window = default_min_window(p_max);
    int count = static_cast<int>(series.values.size());
    if (count < min_window + p_max)
        throw input_error("series too short: need at least " +
                          std::to_string(min_window + p_max) + " entries, have " +
                          std::to_string(count));
    int n_max = series.n_max();
    for (int p = 1; p <= p_max; ++p) {
        int q = series.value_at(n_max) - series.value_at(n_max - p);
        // walk backwards to the earliest n where the relation still holds
        int threshold = n_max;
        for (int n = n_max; n - p >= series.start_n; --n) {
            if (series.value_at(n) - series.value_at(n - p) != q) break;
            threshold = n;
        }
        int window = n_max - threshold + 1;
        if (window >= min_window)
            return PeriodicityCert{p, q, threshold, window};
    }
    return std::nullopt;
}

int extrapolate(const PeriodicityCert& cert, const WasteSeries& series, int n) {
    if (n < cert.threshold)
        throw input_error("extrapolation below the certificate threshold " +
                          std::to_string(cert.threshold));
    int n_max = series.n_max();
    if (n <= n_max) return series.value_at(n);
    long long steps = (n - n_max + cert.p - 1) / cert.p;
    int base = n - static_cast<int>(steps) * cert.p;
    return series.value_at(base) + static_cast<int>(steps) * cert.q;
}

std::vector<ResidueFit> residue_fits(const WasteSeries& series,
                                     const PeriodicityCert& cert) {
    std::vector<ResidueFit> out;
    int n_max = series.n_max();
    for (int r = 0; r < 5; ++r) {
        ResidueFit fit;
        fit.residue = r;
        std::vector<int> xs;
        for (int n = cert.threshold; n <= n_max; ++n)
            if (n % 5 == r) xs.push_back(n);
        if (xs.size() >= 2) {
            int x1 = xs[0], x2 = xs[1];
            long long dy = series.value_at(x2) - series.value_at(x1);
            long long dx = x2 - x1;
            long long g = std::gcd(dy < 0 ? -dy : dy, dx);
            if (g == 0) g = 1;
            fit.a_num = dy / g;
            fit.a_den = dx / g;
            // b = f(x1) - a*x1
            fit.b_num = static_cast<long long>(series.value_at(x1)) * fit.a_den -
                        fit.a_num * x1;
            fit.b_den = fit.a_den;
            fit.linear = true;
            for (size_t i = 2; i < xs.size(); ++i) {
                long long lhs =
                    static_cast<long long>(series.value_at(xs[i])) * fit.a_den;
                if (lhs != fit.a_num * xs[i] + fit.b_num) {
                    fit.linear = false;
                    break;
                }
            }
        }
        out.push_back(fit);
    }
    return out;
}

std::string format_cert(const PeriodicityCert& cert) {
    std::ostringstream out;
    out << "cyldom-cert v1 p " << cert.p << " q " << cert.q << " threshold "
        << cert.threshold << " window " << cert.window
        << " note empirical-on-observed-data\n";
    return out.str();
}

std::optional<PeriodicityCert> parse_cert(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version, kp, kq, kt, kw;
    PeriodicityCert cert;
    in >> magic >> version >> kp >> cert.p >> kq >> cert.q >> kt >>
        cert.threshold >> kw >> cert.window;
    if (!in || magic != "cyldom-cert" || version != "v1") return std::nullopt;
    return cert;
}

} // namespace cyldom
