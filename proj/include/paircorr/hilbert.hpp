#pragma once

#include <utility>
#include <vector>

namespace paircorr::hilbert {

/// Lagrange-multiplier solution of the level-N coefficient problem: lambda
/// solves sum_{n<=N} 1/((2n-1)^2 lambda - 1) = 1/2, the a_k follow from the
/// multiplier relations, and the optimum value is Q = lambda/2.
struct LevelSolution {
    int level;                   // N, or 0 for the limiting problem
    double lambda;
    double q;                    // lambda / 2
    std::vector<double> coeffs;  // a_1..a_N (first 64 for the limit)
};

LevelSolution solve_level(int n_level);
LevelSolution solve_level_infinity();

/// Both sides of the closed-form identity for sum_k ((2k-1)lambda - 1/(2k-1))^{-2}:
/// truncated sum with an analytic tail against the sec/tan expression.
std::pair<double, double> series_identity_check(double lambda, long terms = 100000);

struct EmbeddingConstants {
    double lambda_inf;
    double theta;      // 1/(2 sqrt(lambda_inf)); solves pi theta tan(pi theta) = 1
    double eta;        // solved independently from (2 eta)^{-1/2} tan((2 eta)^{-1/2}) = 1
    double d_squared;  // 1 - 2 lambda_inf / pi^2 = 1 - eta
};

/// Computes the sharp embedding constant by the interpolation route and the
/// variational route and insists they agree to 1e-10.
EmbeddingConstants embedding_constants();

/// The extremal function: a sum of two unit sinc bumps offset by +-theta.
double extremal_f(double z);

/// EP9 functional 2 (sum a_n/(2n-1))^2 + sum a_n^2/(2n-1)^2.
double ep9_functional(const std::vector<double>& a);

struct ExtremalityReport {
    double norm_pw;            // sampled Paley-Wiener norm of the normalized f; ~1
    double ratio_sampling;     // |f|^2 d(mu)-mass via the sampling decomposition
    double ratio_quadrature;   // same by direct quadrature
};

/// Checks that the closed-form extremal function attains D^2 both through the
/// half-integer sampling identity and through direct quadrature.
/// `cutoff` is the number of half-integer samples kept before the analytic tail.
ExtremalityReport verify_extremality(long cutoff = 10000);

}  // namespace paircorr::hilbert
