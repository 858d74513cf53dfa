#pragma once

#include <complex>
#include <functional>

#include "schurproc/process.hpp"
#include "schurproc/quadrature.hpp"

namespace schurproc {

/// Kernel query in the point frame: positions x stored doubled (odd).
struct KernelQuery {
    int t1;
    int x1_2;
    int t2;
    int x2_2;
};

/// Phi(t,z) = prod_{m>t} phi-[m](1/z) / prod_{m<t} phi+[m](1/z), both sides
/// evaluated at argument 1/z over the finite window.
std::complex<double> phi_big(const SchurProcessParams& p, int t,
                             std::complex<double> z);

/// (z;q)_inf = prod_{n>=0} (1 - q^n z), truncated once q^n|z| < 1e-18.
std::complex<double> qdilog(std::complex<double> z, double q);

/// Phi of the M_q specialization in closed form:
/// qd(q^(1/2)/z)/qd(q^(1/2+t) z) for t >= 0, qd(q^(1/2-t)/z)/qd(q^(1/2) z)
/// for t <= 0.
std::complex<double> phi_3d(int t, std::complex<double> z, double q);

/// Contour separation actually used: the requested epsilon shrunk so that
/// both circles keep distance 0.1(1-a_max) from every factor pole/zero and
/// so that the decay from the pole gap balances the (w/z)^m coupling decay.
double effective_epsilon(double a_max, const QuadratureSpec& quad);

/// Theorem 1 kernel entry by double contour quadrature on |z| = 1 +- eps,
/// |w| = 1 -+ eps, the plus sign iff t1 >= t2. Throws on parity violation,
/// non-convergence, or an imaginary part above tol.
QuadResult kernel_entry(const SchurProcessParams& p, const KernelQuery& query,
                        const QuadratureSpec& quad);

/// Tile-frame kernel of the M_q measure (exponents h + (|t|+1)/2 and
/// h + (|t|-1)/2), via the closed-form phi_3d.
QuadResult kernel_3d(const TilePoint& q1, const TilePoint& q2, double q,
                     const QuadratureSpec& quad);

/// Poissonized Plancherel kernel at t = 0; x, y doubled half-integers.
QuadResult kernel_planch(int x2, int y2, double alpha,
                         const QuadratureSpec& quad);

/// det of the n x n matrix with entries entry(i, j); n = 0 gives 1.
double correlation_det(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& entry);

/// Sum representation: sum_{m=1/2}^{M-1/2} [z^{x1+m}] Phi(t1,z) *
/// [w^{-x2-m}] Phi(t2,w)^{-1} for t1 >= t2, and minus the mirrored sum for
/// t1 < t2. Coefficients by 1D quadrature on |z| = 1; throws when the last
/// term has not decayed below tol.
QuadResult kernel_sum_repr(const SchurProcessParams& p, const KernelQuery& query,
                           int M, const QuadratureSpec& quad);

}  // namespace schurproc
