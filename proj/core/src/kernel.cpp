#include "schurproc/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "schurproc/linalg.hpp"

namespace schurproc {

namespace {

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

double params_a_max(const SchurProcessParams& p) {
    double a = 0.0;
    for (const auto& [m2, pr] : p.phi)
        a = std::max({a, pr.plus.max_abs_param(), pr.minus.max_abs_param()});
    return a;
}

// K = N^-2 sum_{j,k} A(z_j) B(w_k) / (z_j - w_k) over circles of radii
// rz != rw, with N-doubling until the change drops below tol.
QuadResult coupled_contour(
    const std::function<std::complex<double>(std::complex<double>)>& A,
    const std::function<std::complex<double>(std::complex<double>)>& B,
    double rz, double rw, const QuadratureSpec& quad) {
    auto eval = [&](int N) {
        auto zs = circle_nodes(rz, N);
        auto ws = circle_nodes(rw, N);
        std::vector<std::complex<double>> a(zs.size()), b(ws.size());
        for (std::size_t j = 0; j < zs.size(); ++j) a[j] = A(zs[j]) * zs[j];
        for (std::size_t k = 0; k < ws.size(); ++k) b[k] = B(ws[k]) * ws[k];
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < zs.size(); ++j) {
            std::complex<double> row = 0.0;
            for (std::size_t k = 0; k < ws.size(); ++k)
                row += b[k] / (zs[j] - ws[k]);
            s += a[j] * row;
        }
        return s / (static_cast<double>(N) * static_cast<double>(N));
    };
    int N = quad.nodes;
    std::complex<double> prev = eval(N);
    double change = std::abs(prev);
    bool converged = false;
    for (int d = 0; d < quad.max_doublings; ++d) {
        N *= 2;
        std::complex<double> cur = eval(N);
        change = std::abs(cur - prev);
        prev = cur;
        if (change < quad.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("coupled_contour: no convergence after max_doublings");
    if (std::abs(prev.imag()) > quad.tol)
        throw std::runtime_error("coupled_contour: imaginary part above tol");
    return QuadResult{prev.real(), change, N};
}

}  // namespace

std::complex<double> phi_big(const SchurProcessParams& p, int t,
                             std::complex<double> z) {
    std::complex<double> v = 1.0;
    std::complex<double> zi = 1.0 / z;
    for (const auto& [m2, pr] : p.phi) {
        if (m2 > 2 * t)
            v *= pr.minus.eval(zi);
        else if (m2 < 2 * t)
            v /= pr.plus.eval(zi);
    }
    return v;
}

std::complex<double> qdilog(std::complex<double> z, double q) {
    if (q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("qdilog: q in (0,1) required");
    std::complex<double> logsum = 0.0;
    std::complex<double> qnz = z;
    double bound = std::abs(z);
    while (bound >= 1e-18) {
        std::complex<double> f = 1.0 - qnz;
        if (f == 0.0) return 0.0;
        logsum += std::log(f);
        qnz *= q;
        bound *= q;
    }
    return std::exp(logsum);
}

std::complex<double> phi_3d(int t, std::complex<double> z, double q) {
    double rq = std::sqrt(q);
    if (t >= 0) return qdilog(rq / z, q) / qdilog(rq * std::pow(q, t) * z, q);
    return qdilog(rq * std::pow(q, -t) / z, q) / qdilog(rq * z, q);
}

double effective_epsilon(double a_max, const QuadratureSpec& quad) {
    if (a_max <= 0.0) return quad.epsilon;
    if (a_max >= 1.0)
        throw std::invalid_argument("effective_epsilon: factor parameters must have |a| < 1");
    double guard = 0.1 * (1.0 - a_max);
    double cap_out = 1.0 / a_max - 1.0 - guard;
    double cap_in = 1.0 - a_max - guard;
    // equalize the pole-gap decay of the Phi coefficients against the
    // (w/z)^m coupling decay: one third of the gap on each side
    double balanced = (1.0 / a_max - 1.0) / 3.0;
    double eps = std::min({quad.epsilon, balanced, cap_out, cap_in});
    if (eps <= 0.0)
        throw std::runtime_error("effective_epsilon: no admissible contour separation");
    return eps;
}

QuadResult kernel_entry(const SchurProcessParams& p, const KernelQuery& query,
                        const QuadratureSpec& quad) {
    if ((query.x1_2 & 1) == 0 || (query.x2_2 & 1) == 0)
        throw std::invalid_argument("kernel_entry: x must be a half-integer");
    double eps = effective_epsilon(params_a_max(p), quad);
    double sgn = (query.t1 >= query.t2) ? 1.0 : -1.0;
    int ez = -(query.x1_2 + 1) / 2;      // z exponent after folding sqrt(zw)
    int ew = (query.x2_2 - 1) / 2;
    auto A = [&](std::complex<double> z) {
        return phi_big(p, query.t1, z) * ipow(z, ez);
    };
    auto B = [&](std::complex<double> w) {
        return ipow(w, ew) / phi_big(p, query.t2, w);
    };
    return coupled_contour(A, B, 1.0 + sgn * eps, 1.0 - sgn * eps, quad);
}

QuadResult kernel_3d(const TilePoint& q1, const TilePoint& q2, double q,
                     const QuadratureSpec& quad) {
    if (!valid_tile_parity(q1) || !valid_tile_parity(q2))
        throw std::invalid_argument("kernel_3d: parity violation");
    if (q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("kernel_3d: q in (0,1) required");
    double eps = effective_epsilon(std::sqrt(q), quad);
    double sgn = (q1.t >= q2.t) ? 1.0 : -1.0;
    int e1 = (q1.h2 + std::abs(q1.t) + 1) / 2;
    int e2 = (q2.h2 + std::abs(q2.t) - 1) / 2;
    auto A = [&](std::complex<double> z) {
        return phi_3d(q1.t, z, q) * ipow(z, -e1);
    };
    auto B = [&](std::complex<double> w) {
        return ipow(w, e2) / phi_3d(q2.t, w, q);
    };
    return coupled_contour(A, B, 1.0 + sgn * eps, 1.0 - sgn * eps, quad);
}

QuadResult kernel_planch(int x2, int y2, double alpha,
                         const QuadratureSpec& quad) {
    if ((x2 & 1) == 0 || (y2 & 1) == 0)
        throw std::invalid_argument("kernel_planch: x, y must be half-integers");
    if (alpha <= 0.0)
        throw std::invalid_argument("kernel_planch: alpha > 0 required");
    double c = std::sqrt(alpha);
    auto A = [&](std::complex<double> z) {
        return std::exp(c * (z - 1.0 / z)) * ipow(z, -(x2 + 1) / 2);
    };
    auto B = [&](std::complex<double> w) {
        return std::exp(-c * (w - 1.0 / w)) * ipow(w, (y2 - 1) / 2);
    };
    return coupled_contour(A, B, 1.0 + quad.epsilon, 1.0 - quad.epsilon, quad);
}

double correlation_det(std::size_t n,
                       const std::function<double(std::size_t, std::size_t)>& entry) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(i, j);
    return matrix_det(std::move(m));
}

namespace {

// Laurent coefficients [z^e] f on |z| = 1, all exponents at once, trapezoid
// with N-doubling against the largest coefficient change.
std::vector<std::complex<double>> laurent_coeffs(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const std::vector<int>& exps, const QuadratureSpec& quad, double* err,
    int* nodes) {
    auto eval = [&](int N) {
        auto zs = circle_nodes(1.0, N);
        std::vector<std::complex<double>> fv(zs.size());
        for (std::size_t j = 0; j < zs.size(); ++j) fv[j] = f(zs[j]);
        std::vector<std::complex<double>> out(exps.size(), 0.0);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            std::complex<double> s = 0.0;
            for (int j = 0; j < N; ++j)
                s += fv[static_cast<std::size_t>(j)] *
                     std::polar(1.0, -2.0 * std::numbers::pi * j * exps[i] / N);
            out[i] = s / static_cast<double>(N);
        }
        return out;
    };
    int N = quad.nodes;
    auto prev = eval(N);
    double change = 0.0;
    bool converged = false;
    for (int d = 0; d < quad.max_doublings; ++d) {
        N *= 2;
        auto cur = eval(N);
        change = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i)
            change = std::max(change, std::abs(cur[i] - prev[i]));
        prev = std::move(cur);
        if (change < quad.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("laurent_coeffs: no convergence after max_doublings");
    if (err) *err = change;
    if (nodes) *nodes = N;
    return prev;
}

}  // namespace

QuadResult kernel_sum_repr(const SchurProcessParams& p, const KernelQuery& query,
                           int M, const QuadratureSpec& quad) {
    if ((query.x1_2 & 1) == 0 || (query.x2_2 & 1) == 0)
        throw std::invalid_argument("kernel_sum_repr: x must be a half-integer");
    if (M < 1) throw std::invalid_argument("kernel_sum_repr: M >= 1 required");
    bool fwd = query.t1 >= query.t2;
    std::vector<int> e1(static_cast<std::size_t>(M)), e2(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        int m2 = 2 * i + 1;
        e1[static_cast<std::size_t>(i)] =
            fwd ? (query.x1_2 + m2) / 2 : (query.x1_2 - m2) / 2;
        e2[static_cast<std::size_t>(i)] =
            fwd ? (-query.x2_2 - m2) / 2 : (-query.x2_2 + m2) / 2;
    }
    double err1 = 0.0, err2 = 0.0;
    int n1 = 0, n2 = 0;
    auto c1 = laurent_coeffs(
        [&](std::complex<double> z) { return phi_big(p, query.t1, z); }, e1, quad,
        &err1, &n1);
    auto c2 = laurent_coeffs(
        [&](std::complex<double> w) { return 1.0 / phi_big(p, query.t2, w); }, e2,
        quad, &err2, &n2);
    std::complex<double> s = 0.0;
    for (int i = 0; i < M; ++i)
        s += c1[static_cast<std::size_t>(i)] * c2[static_cast<std::size_t>(i)];
    if (!fwd) s = -s;
    double last = std::abs(c1.back() * c2.back());
    if (last > quad.tol)
        throw std::runtime_error("kernel_sum_repr: tail has not decayed at M");
    if (std::abs(s.imag()) > quad.tol)
        throw std::runtime_error("kernel_sum_repr: imaginary part above tol");
    return QuadResult{s.real(), err1 + err2 + last, std::max(n1, n2)};
}

}  // namespace schurproc
