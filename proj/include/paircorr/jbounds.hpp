#pragma once

#include <string>
#include <utility>
#include <vector>

namespace paircorr::jbounds {

/// Coefficients of log^2(T)/T bracketing the prime-variance integral J(beta, T).
struct JBound {
    double beta;
    double lower_coeff;
    double upper_coeff;
};

/// L^- C^-(1, beta) + 1/2 and L^+ C^+(1, beta) + 1/2.
JBound j_bounds(double beta);

/// Window form for beta > b > 1 (no 1/2 offset): L^- C^-(b, beta), L^+ C^+(b, beta).
std::pair<double, double> j_interval_bounds(double b, double beta);

struct ComparisonRow {
    std::string label;
    double value;
};

/// Prior-art constants next to this library's computed coefficients.
std::vector<ComparisonRow> legacy_comparison();

}  // namespace paircorr::jbounds
