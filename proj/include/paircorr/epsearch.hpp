#pragma once

#include "paircorr/numerics.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircorr::epsearch {

/// rho(g) = hat g(0) + int_{-1}^{1} |a| hat g(a) da, together with the two
/// normalizations that enter the EP objectives.
struct RhoValue {
    double rho;
    double g0;      // g(0) = (int p)^2
    double ghat0;   // hat g(0) = int p^2
};

/// Even polynomial profile p with hat h = p * chi_[-1/2, 1/2]. The non-negative
/// bandlimited function is g = |h|^2, so hat g is the autocorrelation of hat h
/// and supp(hat g) lies in [-1, 1]. coeffs[j] multiplies alpha^j; odd entries
/// must be zero; degree <= 8.
struct KreinProfile {
    std::vector<double> coeffs;

    explicit KreinProfile(std::vector<double> c = {1.0}) : coeffs(std::move(c)) {
        if (coeffs.empty() || coeffs.size() > 9)
            throw std::invalid_argument("KreinProfile: degree must be <= 8");
        for (size_t j = 1; j < coeffs.size(); j += 2)
            if (coeffs[j] != 0.0)
                throw std::invalid_argument("KreinProfile: odd coefficients must vanish");
    }
};

/// hat g(alpha) = int p(t) p(t - alpha) dt over the overlap of the two boxes,
/// evaluated from the exact polynomial antiderivative. Zero outside [-1, 1].
double autocorrelate(const KreinProfile& profile, double alpha);

/// Coefficients of hat g on [0, 1] as a polynomial in alpha (exact convolution).
std::vector<double> autocorrelation_poly(const KreinProfile& profile);

RhoValue rho_of(const KreinProfile& profile);

/// Periodization min over one period: for supp(hat g) in [-1,1] only the
/// shifts n in {-1, 0, 1} contribute, so P(a) = hat g(a) + hat g(1-a) on [0,1].
double periodization_min(const KreinProfile& profile);

/// K_1(g) = max_a (hat g(a) + hat g(a+1)); equals K_m for every m when
/// supp(hat g) is inside [-1, 1].
double k1_of(const KreinProfile& profile);

/// EP4: rho(g) / min_{0<=a<=1} P_{hat g}(a). Throws std::domain_error when the
/// periodization minimum vanishes (infeasible profile).
double ep4_objective(const KreinProfile& profile);

/// EP5: (g(0) + c0 (rho(g) - g(0))) / K_1(g). Throws std::domain_error when
/// g(0) = 0.
double ep5_objective(const KreinProfile& profile);

enum class Problem { ep4, ep5 };

struct SearchResult {
    Problem problem;
    int degree = 0;
    std::uint64_t seed = 0;
    int restarts = 0;
    KreinProfile best{std::vector<double>{1.0}};
    double value = 0.0;
    bool record_met = false;     // ep4 <= 1.3302 resp. ep5 >= 0.9278
    int best_restart = -1;
    long total_iterations = 0;
    std::vector<double> restart_values;   // best value per restart, in order
};

/// Multi-start simplex search over the even coefficients with c0 gauge-fixed
/// to 1. Restart 0 descends from the box profile p = 1; the rest draw
/// coefficients uniformly from [-50, 50] with deterministic per-restart
/// sub-seeds. Deterministic for a fixed seed.
SearchResult search(Problem problem, int degree, int restarts, std::uint64_t seed);

std::string to_string(Problem p);

}  // namespace paircorr::epsearch
