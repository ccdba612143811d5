#pragma once

#include <stdexcept>

namespace paircorr::kernels {

/// Kernel with the triangular transform: hat K_D(xi) = (1 - |xi|/D)_+,
/// K_D(x) = D (sin(pi D x)/(pi D x))^2, 0 < D <= 1.
struct FejerKernel {
    double delta = 1.0;
};

struct DirichletKernel {
    int n = 0;
};

struct PoissonKernel {
    double b = 1.0;
};

/// stable sinc^2: (sin x / x)^2 with the removable singularity handled
double sinc2(double x);

double fejer_eval(double delta, double x);
double fejer_ft(double delta, double xi);

/// rho(K_D) = 1 + D^2/3
double rho_fejer(double delta);

/// D_n(x) = sin((n+1/2)x)/sin(x/2) = 1 + 2 sum_{k<=n} cos(kx)
double dirichlet_eval(int n, double x);

/// global minimum of D_n over the reals (= min over [0, pi]); memoized for n <= 64
double dirichlet_min(int n);

/// c0 = min_x sin(x)/x and its argmin x1 in (pi, 2pi); cached after first use
double c0();
double x1();

struct Envelope {
    double lower;
    double upper;
    bool sandwich_ok;
};

/// Bounds 2 c0 - (2 pi - 1)/n <= m(n)/n <= 2 c0 + 5.4935/n, plus the pointwise
/// check 1/n + 2 sin(nx)/(nx) -+ x around D_n(x)/n on a sample of (0, pi].
Envelope appendix_a_envelope(int n);

double poisson_eval(double b, double x);
double poisson_ft(double b, double alpha);

/// Least bandlimited majorant of the Poisson kernel: m_b >= h_b pointwise,
/// supp(hat m_b) in [-1, 1], minimal excess integral.
double poisson_majorant_eval(double b, double x);
double poisson_majorant_ft(double b, double alpha);

}  // namespace paircorr::kernels
