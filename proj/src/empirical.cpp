#include "paircorr/empirical.hpp"
#include "paircorr/fbounds.hpp"
#include "paircorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace paircorr::empirical {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double pair_weight(double u) { return 4.0 / (4.0 + u * u); }
}  // namespace

ZeroDataset load_zeros(const std::string& path, double T) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zeros: cannot open " + path);
    ZeroDataset ds;
    ds.source = path;
    std::string line;
    long line_no = 0;
    double prev = 0.0;
    double largest = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double v;
        if (!(ss >> v)) {
            std::string rest;
            ss.clear();
            ss >> rest;
            if (rest.empty()) continue;   // blank or comment-only line
            throw std::runtime_error("load_zeros: parse error at line " +
                                     std::to_string(line_no));
        }
        std::string trailing;
        if (ss >> trailing)
            throw std::runtime_error("load_zeros: trailing junk at line " +
                                     std::to_string(line_no));
        if (v <= 0.0)
            throw std::runtime_error("load_zeros: non-positive ordinate at line " +
                                     std::to_string(line_no));
        if (v < prev)
            throw std::runtime_error("load_zeros: ordinates decrease at line " +
                                     std::to_string(line_no));
        prev = v;
        largest = v;
        ds.ordinates.push_back(v);
    }
    ds.T = T > 0.0 ? T : largest;
    if (T > 0.0) {
        auto it = std::upper_bound(ds.ordinates.begin(), ds.ordinates.end(), T);
        ds.ordinates.erase(it, ds.ordinates.end());
    }
    if (ds.ordinates.empty())
        throw std::runtime_error("load_zeros: no ordinates at or below T");
    return ds;
}

FormFactorEstimate form_factor(const ZeroDataset& ds, double alpha, double cutoff) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("form_factor: cutoff must be > 0");
    if (ds.ordinates.empty() || !(ds.T > 1.0))
        throw std::invalid_argument("form_factor: dataset needs zeros and T > 1");

    const double logT = std::log(ds.T);
    const double scale = kTwoPi / (ds.T * logT);
    const auto& g = ds.ordinates;
    const size_t n = g.size();

    num::KahanSum sum;
    sum.add((double)n);   // diagonal: cos(0) w(0) = 1 per zero
    long kept_pairs = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const double gap = g[j] - g[i];
            if (gap > cutoff) break;
            sum.add(2.0 * std::cos(alpha * logT * gap) * pair_weight(gap));
            ++kept_pairs;
        }
    }
    const long discarded = (long)n * ((long)n - 1) - 2 * kept_pairs;
    FormFactorEstimate est{};
    est.alpha = alpha;
    est.value = scale * sum.value();
    est.cutoff = cutoff;
    est.truncation_bound =
        std::isinf(cutoff) ? 0.0 : scale * (double)discarded * pair_weight(cutoff);
    return est;
}

CompareReport compare_report(const ZeroDataset& ds, double b, double beta, int steps,
                             double cutoff) {
    if (!(b >= 1.0) || beta < b)
        throw std::invalid_argument("compare_report: need beta >= b >= 1");
    CompareReport rep{};
    rep.b = b;
    rep.beta = beta;
    if (beta == b) {
        rep.conjectured = 0.0;
        rep.within_band = true;
        return rep;
    }
    if (steps < 8) throw std::invalid_argument("compare_report: need at least 8 steps");

    rep.samples.reserve(steps + 1);
    num::KahanSum trap;
    const double h = (beta - b) / steps;
    for (int i = 0; i <= steps; ++i) {
        auto est = form_factor(ds, b + h * i, cutoff);
        trap.add((i == 0 || i == steps) ? 0.5 * est.value : est.value);
        rep.samples.push_back(est);
    }
    rep.integral_estimate = trap.value() * h;

    if (b > 1.0) {
        auto [lo, hi] = fbounds::c_bounds_interval(b, beta);
        rep.lower_bound = lo;
        rep.upper_bound = hi;
    } else {
        rep.lower_bound = fbounds::c_minus_symmetric(beta);
        rep.upper_bound = fbounds::c_plus_symmetric(beta);
    }
    rep.conjectured = beta - b;
    rep.density_reference = fbounds::pair_correlation_density_integral(beta) -
                            fbounds::pair_correlation_density_integral(b);
    rep.within_band = rep.integral_estimate >= rep.lower_bound &&
                      rep.integral_estimate <= rep.upper_bound;
    return rep;
}

double f_alpha_reference(double alpha, double T) {
    const double a = std::fabs(alpha);
    return std::pow(T, -2.0 * a) * std::log(T) + a;
}

}  // namespace paircorr::empirical
