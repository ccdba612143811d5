#pragma once

#include <string>
#include <vector>

namespace paircorr::empirical {

struct ZeroDataset {
    std::vector<double> ordinates;   // ascending, positive, <= T
    double T = 0.0;
    std::string source;
};

/// Parse a text file of zero ordinates (one decimal per line, '#' comments),
/// validate monotonicity and positivity, and keep gamma <= T. T <= 0 selects
/// the largest ordinate in the file.
ZeroDataset load_zeros(const std::string& path, double T = 0.0);

struct FormFactorEstimate {
    double alpha;
    double value;
    double cutoff;
    double truncation_bound;   // certified bound on the discarded-pair mass
};

/// Montgomery form factor at frequency alpha:
///   (2 pi / (T log T)) sum_{gamma, gamma'} cos(alpha log T (gamma-gamma')) w(gamma-gamma'),
/// w(u) = 4/(4+u^2), restricted to pairs with |gamma - gamma'| <= cutoff.
/// The symmetric double sum is folded (diagonal once, off-diagonal doubled)
/// and Kahan-compensated.
FormFactorEstimate form_factor(const ZeroDataset& ds, double alpha, double cutoff = 100.0);

struct CompareReport {
    double b, beta;
    double integral_estimate;     // trapezoid over the form-factor samples
    double lower_bound;
    double upper_bound;
    double conjectured;           // beta - b
    double density_reference;     // pair-count density mass over [b, beta]
    bool within_band;
    std::vector<FormFactorEstimate> samples;
};

/// Integrate the empirical form factor over [b, beta] and set it against the
/// proved bound band and the conjectured value. Exceeding the band is
/// reported, not failed: the bounds hold asymptotically in T.
CompareReport compare_report(const ZeroDataset& ds, double b, double beta, int steps,
                             double cutoff = 100.0);

/// The proved small-alpha shape T^{-2|alpha|} log T + |alpha|, for reference
/// columns next to empirical values on |alpha| <= 1.
double f_alpha_reference(double alpha, double T);

}  // namespace paircorr::empirical
