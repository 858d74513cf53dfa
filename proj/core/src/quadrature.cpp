#include "schurproc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace schurproc {

std::vector<std::complex<double>> circle_nodes(double r, int N) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j)
        z[static_cast<std::size_t>(j)] =
            std::polar(r, 2.0 * std::numbers::pi * j / N);
    return z;
}

std::complex<double> contour_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double r, const QuadratureSpec& quad, double* est_error, int* nodes_used) {
    // (2 pi i)^-1 \oint f dz = N^-1 sum f(z_j) z_j on |z| = r
    auto eval = [&](int N) {
        std::complex<double> s = 0.0;
        for (const auto& z : circle_nodes(r, N)) s += f(z) * z;
        return s / static_cast<double>(N);
    };
    int N = quad.nodes;
    std::complex<double> prev = eval(N);
    double change = std::abs(prev);
    for (int d = 0; d < quad.max_doublings; ++d) {
        N *= 2;
        std::complex<double> cur = eval(N);
        change = std::abs(cur - prev);
        prev = cur;
        if (change < quad.tol) break;
    }
    if (est_error) *est_error = change;
    if (nodes_used) *nodes_used = N;
    return prev;
}

namespace {

GLRule make_gl(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    GLRule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[static_cast<std::size_t>(n - 1 - i)] = x;
        r.w[static_cast<std::size_t>(n - 1 - i)] =
            2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GLRule& gauss_legendre(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

std::complex<double> integrate_gl(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, double* est_error) {
    const GLRule& rule = gauss_legendre(16);
    auto composite = [&](int panels) {
        std::complex<double> s = 0.0;
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            double mid = a + (p + 0.5) * h;
            for (std::size_t i = 0; i < rule.x.size(); ++i)
                s += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
        }
        return s * (0.5 * h);
    };
    int panels = 1;
    std::complex<double> prev = composite(panels);
    double change = std::abs(prev);
    for (int d = 0; d < 12; ++d) {
        panels *= 2;
        std::complex<double> cur = composite(panels);
        change = std::abs(cur - prev);
        prev = cur;
        if (change < tol) break;
    }
    if (est_error) *est_error = change;
    return prev;
}

double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, double tol, double* est_error) {
    return integrate_gl([&](double s) { return std::complex<double>(f(s), 0.0); },
                        a, b, tol, est_error)
        .real();
}

}  // namespace schurproc
