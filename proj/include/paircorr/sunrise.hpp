#pragma once

#include <vector>

namespace paircorr::sunrise {

/// The lobes of sinc^2: maxima m_0 = 0 < m_1 < ... (roots of tan x = x) and
/// the crossings a_k in (m_{k-1}, m_k) where sinc^2 comes down to the level of
/// the next maximum. Immutable after construction.
struct SunriseDecomposition {
    std::vector<double> maxima;      // m_0 .. m_K
    std::vector<double> crossings;   // a_1 .. a_K
    std::vector<double> levels;      // sinc^2(m_k) = 1/(1 + m_k^2), k = 1..K
    int depth = 0;
};

SunriseDecomposition build_decomposition(int depth);

/// Upper sunrise envelope of sinc^2: the curve on the rising spans, held flat
/// at each plateau. Beyond the resolved depth falls back to min(1, 1/x^2)
/// (still a majorant); *exact is cleared in that case when provided.
double g_plus(double x, const SunriseDecomposition& dec, bool* exact = nullptr);

/// Lower sunrise envelope: sinc^2 on [0, pi], zero afterwards.
double g_minus(double x);

/// (2/pi) int_0^pi sinc^2; cached
double l_minus();

/// (2/pi) int_0^inf g_plus, resolving max(10*depth, 1000) lobes before the
/// analytic arctan tail. Non-increasing in depth; cached per depth.
double l_plus(int depth = 200);

}  // namespace paircorr::sunrise
