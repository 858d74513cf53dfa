#pragma once

#include <complex>
#include <vector>

#include "schurproc/plane_partition.hpp"

namespace schurproc {

/// Rescaled position: r t -> tau, r h -> chi. Negative tau is handled by the
/// reflection t -> -t, under which the measure is symmetric.
struct BulkPoint {
    double tau = 0.0;
    double chi = 0.0;
};

enum class BulkRegion { below, bulk, above };

struct CriticalData {
    std::complex<double> z_c;     // critical point with Im >= 0
    std::complex<double> z_star;  // e^{-tau} z_c, or the degenerate +-e^{-tau/2}
    double theta_star = 0.0;      // arg z_star, in [0, pi]
    BulkRegion region = BulkRegion::bulk;
};

/// Lower bulk boundary in chi at fixed tau: -2 ln(2 cosh(tau/4)).
double chi_lower(double tau);
/// Upper bulk boundary: -2 ln(2 sinh(|tau|/4)); +inf at tau = 0.
double chi_upper(double tau);

/// S(z; tau, chi) = -(tau/2 + chi) ln z - dil(1 - 1/z) + dil(1 - e^{-tau} z);
/// analytic off the cuts (0,1) and (e^tau, +inf).
std::complex<double> action(std::complex<double> z, const BulkPoint& b);

/// Roots of (1 - 1/z)(1 - e^{-tau} z) = e^{-tau/2 - chi}, classified by the
/// closed-form boundary comparison rather than the discriminant sign.
CriticalData critical_points(const BulkPoint& b);

/// theta_star = arccos(cosh(tau/2) - e^{-chi}/2) clamped to [0, pi], and the
/// horizontal tile density rho = theta_star / pi.
std::pair<double, double> theta_density(const BulkPoint& b);

/// B_+-(k, l; z_star) = (2 pi i)^-1 int_{conj z_star}^{z_star}
/// (1-w)^k w^{-l-1} dw along the arc |w| = |z_star|, crossing (0,1) for the
/// plus sign and (-inf, 0) for the minus sign.
double incomplete_beta(int k, int l, std::complex<double> z_star, bool plus,
                       double tol = 1e-12);

/// det[B_+-(dt_ij, dh_ij + dt_ij/2; z_star)] over the given tile offsets
/// (t, 2h); the plus sign is chosen iff dt_ij >= 0.
double bulk_correlation(const std::vector<TilePoint>& offsets,
                        const BulkPoint& b, double tol = 1e-10);

/// The same kernel as an iterated double integral over |w| = e^{-tau/2} and
/// |z| = e^{tau/4 + chi/2}, integrand z^{-k-1} w^{-l-1} / (1 - z + zw); the
/// nominal z-circle passes through the pole at the bulk split angles, so the
/// inner integral is taken on a radius deformed away from the pole on the
/// side the nominal contour selects.
double beta_double_integral(int k, int l, const BulkPoint& b,
                            double tol = 1e-10);

struct ShapePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Limit-shape point over (tau, chi):
/// z = pi^-1 int_0^{pi - theta_star} s sin s / (cos s + cosh(tau/2)) ds,
/// x = z - chi - tau/2, y = z - chi + tau/2.
ShapePoint limit_shape(const BulkPoint& b, double tol = 1e-10);

/// Cerf-Kenyon parametrization: f(A,B,C) = (2 pi^2)^-1 times the double
/// integral of ln|A + B e^{iu} + C e^{iv}|, returning
/// (f - 2 ln A, f - 2 ln B, f - 2 ln C). Tensor trapezoid with doubling;
/// the integrand has a logarithmic singularity in the bulk, so this is the
/// weakest-accuracy operation (tol defaults to 1e-3).
ShapePoint ck_parametrization(double A, double B, double C, double tol = 1e-3);

/// theta = arccos(xi/2) for xi in (-2, 2).
double planch_theta(double xi);

/// sin(theta d)/(pi d); theta/pi at d = 0.
double sine_kernel(double theta, int delta);

}  // namespace schurproc
