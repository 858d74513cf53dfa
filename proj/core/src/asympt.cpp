#include "schurproc/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "schurproc/dilog.hpp"
#include "schurproc/linalg.hpp"
#include "schurproc/quadrature.hpp"

namespace schurproc {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> ipow(std::complex<double> z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    std::complex<double> r = 1.0;
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

}  // namespace

double chi_lower(double tau) {
    return -2.0 * std::log(2.0 * std::cosh(std::abs(tau) / 4.0));
}

double chi_upper(double tau) {
    double s = 2.0 * std::sinh(std::abs(tau) / 4.0);
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return -2.0 * std::log(s);
}

std::complex<double> action(std::complex<double> z, const BulkPoint& b) {
    double tau = std::abs(b.tau);
    return -(tau / 2.0 + b.chi) * std::log(z) - dil(1.0 - 1.0 / z) +
           dil(1.0 - std::exp(-tau) * z);
}

CriticalData critical_points(const BulkPoint& b) {
    double tau = std::abs(b.tau);
    CriticalData cd;
    if (b.chi >= chi_upper(tau)) {
        cd.region = BulkRegion::above;
        cd.z_star = std::exp(-tau / 2.0);
        cd.z_c = std::exp(tau / 2.0);
        cd.theta_star = 0.0;
        return cd;
    }
    if (b.chi <= chi_lower(tau)) {
        cd.region = BulkRegion::below;
        cd.z_star = -std::exp(-tau / 2.0);
        cd.z_c = -std::exp(tau / 2.0);
        cd.theta_star = kPi;
        return cd;
    }
    cd.region = BulkRegion::bulk;
    // roots of z^2 - bz + e^tau with b = e^tau + 1 - e^{tau/2 - chi}
    double et = std::exp(tau);
    double bq = et + 1.0 - std::exp(tau / 2.0 - b.chi);
    double disc = 4.0 * et - bq * bq;
    if (disc < 0.0) disc = 0.0;  // boundary roundoff
    cd.z_c = std::complex<double>(bq / 2.0, std::sqrt(disc) / 2.0);
    cd.z_star = std::exp(-tau) * cd.z_c;
    cd.theta_star = std::arg(cd.z_star);
    return cd;
}

std::pair<double, double> theta_density(const BulkPoint& b) {
    double tau = std::abs(b.tau);
    double c = std::cosh(tau / 2.0) - std::exp(-b.chi) / 2.0;
    double theta = std::acos(std::clamp(c, -1.0, 1.0));
    return {theta, theta / kPi};
}

double incomplete_beta(int k, int l, std::complex<double> z_star, bool plus,
                       double tol) {
    double R = std::abs(z_star);
    double theta = std::abs(std::arg(z_star));
    if (plus && k < 0 && std::abs(R - 1.0) < 1e-12)
        throw std::domain_error(
            "incomplete_beta: plus path through the singular endpoint w = 1");
    double a = -theta;
    double bnd = plus ? theta : theta - 2.0 * kPi;
    auto f = [&](double th) {
        std::complex<double> w = std::polar(R, th);
        return ipow(1.0 - w, k) * ipow(w, -l);
    };
    std::complex<double> v = integrate_gl(f, a, bnd, tol) / (2.0 * kPi);
    return v.real();
}

double bulk_correlation(const std::vector<TilePoint>& offsets,
                        const BulkPoint& b, double tol) {
    CriticalData cd = critical_points(b);
    std::size_t n = offsets.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int k = offsets[i].t - offsets[j].t;
            int num = offsets[i].h2 - offsets[j].h2 + k;
            if (num & 1)
                throw std::invalid_argument("bulk_correlation: parity violation");
            m[i][j] = incomplete_beta(k, num / 2, cd.z_star, k >= 0, tol);
        }
    return matrix_det(std::move(m));
}

double beta_double_integral(int k, int l, const BulkPoint& b, double tol) {
    double tau = std::abs(b.tau);
    double rw = std::exp(-tau / 2.0);
    double alpha = std::exp(tau / 4.0 + b.chi / 2.0);
    double theta = theta_density(b).first;

    QuadratureSpec inner_spec;
    inner_spec.nodes = 64;
    inner_spec.tol = std::min(tol, 1e-10) * 0.1;
    inner_spec.max_doublings = 5;

    auto inner = [&](std::complex<double> w) {
        // pole of the z-integrand at z_p = 1/(1-w); the nominal radius alpha
        // touches |z_p| exactly at the arc split, so integrate on a radius
        // pulled 30% away from the pole on the side alpha selects
        std::complex<double> omw = 1.0 - w;
        double ap = alpha;
        if (omw != std::complex<double>(0.0, 0.0)) {
            double rp = 1.0 / std::abs(omw);
            ap = (alpha > rp) ? std::max(alpha, 1.3 * rp)
                              : std::min(alpha, 0.7 * rp);
        }
        auto g = [&](std::complex<double> z) {
            return ipow(z, -k - 1) / (1.0 - z + z * w);
        };
        return contour_integral(g, ap, inner_spec);
    };

    auto outer = [&](double th) {
        std::complex<double> w = std::polar(rw, th);
        return inner(w) * ipow(w, -l);
    };
    // the inner value jumps across arg w = +-theta; integrate the two smooth
    // arcs separately
    std::complex<double> s = 0.0;
    if (theta > 0.0) s += integrate_gl(outer, -theta, theta, tol);
    if (theta < kPi) s += integrate_gl(outer, theta, 2.0 * kPi - theta, tol);
    return (s / (2.0 * kPi)).real();
}

ShapePoint limit_shape(const BulkPoint& b, double tol) {
    double tau = std::abs(b.tau);
    double theta = theta_density(b).first;
    double ch = std::cosh(tau / 2.0);
    double z = 0.0;
    if (theta < kPi)
        z = integrate_gl_real(
                [&](double s) { return s * std::sin(s) / (std::cos(s) + ch); },
                0.0, kPi - theta, tol) /
            kPi;
    ShapePoint p;
    p.z = z;
    p.x = z - b.chi - b.tau / 2.0;
    p.y = z - b.chi + b.tau / 2.0;
    return p;
}

ShapePoint ck_parametrization(double A, double B, double C, double tol) {
    if (A <= 0.0 || B <= 0.0 || C <= 0.0)
        throw std::invalid_argument("ck_parametrization: positive A, B, C required");
    auto eval = [&](int N) {
        std::vector<std::complex<double>> eu(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j)
            eu[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * kPi * j / N);
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            std::complex<double> p = A + B * eu[static_cast<std::size_t>(j)];
            for (int kk = 0; kk < N; ++kk) {
                std::complex<double> v = p + C * eu[static_cast<std::size_t>(kk)];
                double n2 = std::norm(v);
                if (n2 > 0.0) s += 0.5 * std::log(n2);
            }
        }
        return s / (static_cast<double>(N) * static_cast<double>(N));
    };
    int N = 512;
    double prev = eval(N);
    for (int d = 0; d < 3; ++d) {
        N *= 2;
        double cur = eval(N);
        double change = std::abs(cur - prev);
        prev = cur;
        if (change < tol) break;
    }
    double f = 2.0 * prev;  // (2 pi^2)^-1 integral = 2 * mean of the samples
    ShapePoint p;
    p.x = f - 2.0 * std::log(A);
    p.y = f - 2.0 * std::log(B);
    p.z = f - 2.0 * std::log(C);
    return p;
}

double planch_theta(double xi) {
    if (xi <= -2.0 || xi >= 2.0)
        throw std::domain_error("planch_theta: xi in (-2, 2) required");
    return std::acos(xi / 2.0);
}

double sine_kernel(double theta, int delta) {
    if (delta == 0) return theta / kPi;
    return std::sin(theta * delta) / (kPi * delta);
}

}  // namespace schurproc
