#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace schurproc {

struct QuadratureSpec {
    int nodes = 256;          // starting N per circle, power of 2
    double epsilon = 0.05;    // radial separation of the two contours
    double tol = 1e-10;
    int max_doublings = 6;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    int nodes_used = 0;
};

/// z_j = r exp(2 pi i j / N), j = 0..N-1.
std::vector<std::complex<double>> circle_nodes(double r, int N);

/// (2 pi i)^-1 times the contour integral of f over |z| = r, by the periodic
/// trapezoid rule with N-doubling until successive values differ by < tol.
/// est_error is the last observed change.
std::complex<double> contour_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double r, const QuadratureSpec& quad, double* est_error = nullptr,
    int* nodes_used = nullptr);

/// Gauss-Legendre rule on [-1, 1].
struct GLRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GLRule& gauss_legendre(int n);

/// Integral of f over [a, b] by composite Gauss-Legendre panels, doubling the
/// panel count until the change is < tol.
std::complex<double> integrate_gl(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, double* est_error = nullptr);

/// Real-valued convenience wrapper around integrate_gl.
double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, double tol, double* est_error = nullptr);

}  // namespace schurproc
