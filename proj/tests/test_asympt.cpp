#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <schurproc/asympt.hpp>
#include <schurproc/dilog.hpp>
#include <schurproc/export.hpp>
#include <schurproc/quadrature.hpp>

using namespace schurproc;
using doctest::Approx;
using cd = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

TEST_CASE("dilogarithm special values") {
    CHECK(std::abs(li2(cd(1.0, 0.0)) - pi * pi / 6.0) < 1e-14);
    CHECK(std::abs(li2(cd(-1.0, 0.0)) + pi * pi / 12.0) < 1e-14);
    double l2 = std::log(2.0);
    CHECK(std::abs(li2(cd(0.5, 0.0)) - (pi * pi / 12.0 - 0.5 * l2 * l2)) < 1e-14);
    CHECK(std::abs(li2(cd(0.0, 0.0))) == 0.0);
    CHECK(std::abs(dil(cd(1.0, 0.0))) == 0.0);
    CHECK_THROWS(li2(cd(2.0, 0.0)));
}

TEST_CASE("dilogarithm series") {
    for (cd z : {cd(0.3, 0.1), cd(-0.2, 0.25), cd(0.05, -0.3)}) {
        cd want = 0.0;
        cd zn = 1.0;
        for (int n = 1; n <= 120; ++n) {
            zn *= z;
            want += zn / static_cast<double>(n * n);
        }
        CHECK(std::abs(li2(z) - want) < 1e-14);
    }
}

TEST_CASE("dilogarithm functional equations") {
    for (cd z : {cd(0.7, 0.4), cd(-1.3, 0.8), cd(0.2, -1.7), cd(3.0, 2.0)}) {
        cd lhs = li2(z) + li2(1.0 - z);
        cd rhs = pi * pi / 6.0 - std::log(z) * std::log(1.0 - z);
        CHECK(std::abs(lhs - rhs) < 1e-12);

        cd inv = li2(z) + li2(1.0 / z);
        cd want = -pi * pi / 6.0 - 0.5 * std::pow(std::log(-z), 2);
        CHECK(std::abs(inv - want) < 1e-12);

        CHECK(std::abs(li2(std::conj(z)) - std::conj(li2(z))) < 1e-14);
    }
}

TEST_CASE("bulk boundaries") {
    CHECK(chi_lower(0.0) == Approx(-2.0 * std::log(2.0)));
    CHECK(std::isinf(chi_upper(0.0)));
    for (double tau : {0.3, 1.0, 2.5}) {
        CHECK(chi_lower(tau) < chi_upper(tau));
        CHECK(chi_lower(-tau) == Approx(chi_lower(tau)));
        CHECK(chi_upper(-tau) == Approx(chi_upper(tau)));
    }
}

TEST_CASE("critical point at the origin") {
    auto cd0 = critical_points({0.0, 0.0});
    CHECK(cd0.region == BulkRegion::bulk);
    CHECK(std::abs(cd0.z_c - std::polar(1.0, pi / 3.0)) < 1e-12);
    CHECK(std::abs(cd0.z_star - cd0.z_c) < 1e-12);
    CHECK(cd0.theta_star == Approx(pi / 3.0));
    auto [th, rho] = theta_density({0.0, 0.0});
    CHECK(th == Approx(pi / 3.0));
    CHECK(rho == Approx(1.0 / 3.0));
}

TEST_CASE("critical points in the bulk") {
    for (auto b : {BulkPoint{0.5, 0.2}, BulkPoint{1.0, -1.0}, BulkPoint{-0.7, 0.1}}) {
        auto c = critical_points(b);
        CHECK(c.region == BulkRegion::bulk);
        CHECK(std::abs(c.z_star) == Approx(std::exp(-std::abs(b.tau) / 2.0)).epsilon(1e-12));
        CHECK(c.z_c.imag() >= 0.0);
        CHECK(std::arg(c.z_star) == Approx(theta_density(b).first).epsilon(1e-10));

        // critical equation (1 - 1/z)(1 - e^{-|tau|} z) = e^{-|tau|/2 - chi}
        cd z = c.z_c;
        cd lhs = (1.0 - 1.0 / z) * (1.0 - std::exp(-std::abs(b.tau)) * z);
        CHECK(std::abs(lhs - std::exp(-std::abs(b.tau) / 2.0 - b.chi)) < 1e-10);

        // stationarity of the action
        const double h = 1e-6;
        BulkPoint ref{std::abs(b.tau), b.chi};
        cd d1 = (action(z + h, ref) - action(z - h, ref)) / (2.0 * h);
        cd d2 = (action(z + cd(0, h), ref) - action(z - cd(0, h), ref)) / (2.0 * h);
        CHECK(std::abs(d1) < 1e-6);
        CHECK(std::abs(d2) < 1e-6);
    }
}

TEST_CASE("action identities") {
    BulkPoint b{0.8, -0.2};
    // conjugation symmetry
    for (cd z : {cd(0.5, 1.2), cd(-0.9, 0.4), cd(1.8, 2.1)})
        CHECK(std::abs(action(std::conj(z), b) - std::conj(action(z, b))) < 1e-12);

    // Re S is constant on |z| = e^{tau/2}, equal to -(tau/2+chi) tau/2
    double want = -(b.tau / 2.0 + b.chi) * b.tau / 2.0;
    for (double arg : {0.4, 1.1, 2.0, 2.9}) {
        cd z = std::polar(std::exp(b.tau / 2.0), arg);
        CHECK(action(z, b).real() == Approx(want).epsilon(1e-10).scale(1.0));
    }

    // functional equation S(z) + S(e^tau / z) = -(tau/2+chi) tau
    for (cd z : {cd(0.7, 1.4), cd(-1.1, 0.9)}) {
        cd s = action(z, b) + action(std::exp(b.tau) / z, b);
        CHECK(std::abs(s - cd(-(b.tau / 2.0 + b.chi) * b.tau, 0.0)) < 1e-10);
    }
}

TEST_CASE("intersection circles invariant") {
    for (auto b : {BulkPoint{0.5, 0.2}, BulkPoint{1.0, -1.0}, BulkPoint{1.6, 0.1}}) {
        auto c = critical_points(b);
        CHECK(std::abs(c.z_c) == Approx(std::exp(b.tau / 2.0)).epsilon(1e-12));
        CHECK(std::abs(c.z_c - std::exp(b.tau)) ==
              Approx(std::exp(0.75 * b.tau - 0.5 * b.chi)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate regions") {
    double tau = 1.0;
    auto above = critical_points({tau, chi_upper(tau) + 0.5});
    CHECK(above.region == BulkRegion::above);
    CHECK(std::abs(above.z_star - cd(std::exp(-0.5), 0.0)) < 1e-12);  // theta* = 0
    CHECK(theta_density({tau, chi_upper(tau) + 0.5}).second == Approx(0.0));

    auto below = critical_points({tau, chi_lower(tau) - 0.5});
    CHECK(below.region == BulkRegion::below);
    CHECK(std::abs(below.z_star - cd(-std::exp(-0.5), 0.0)) < 1e-12);  // theta* = pi
    CHECK(theta_density({tau, chi_lower(tau) - 0.5}).second == Approx(1.0));
}

TEST_CASE("density decreases with height") {
    double tau = 0.8;
    double prev = 1.1;
    for (double chi = chi_lower(tau) + 0.05; chi < chi_upper(tau); chi += 0.3) {
        double rho = theta_density({tau, chi}).second;
        CHECK(rho < prev);
        CHECK(rho > 0.0);
        CHECK(rho < 1.0);
        prev = rho;
    }
}

TEST_CASE("incomplete beta basics") {
    auto c = critical_points({0.8, -0.3});
    double th = c.theta_star;
    CHECK(incomplete_beta(0, 0, c.z_star, true) == Approx(th / pi).epsilon(1e-10));
    CHECK(incomplete_beta(0, 0, c.z_star, false) == Approx(th / pi - 1.0).epsilon(1e-10));
}

TEST_CASE("incomplete beta on the unit circle reduces to the sine kernel") {
    auto c = critical_points({0.0, 0.4});
    CHECK(std::abs(std::abs(c.z_star) - 1.0) < 1e-12);
    double th = c.theta_star;
    for (int l = -4; l <= 4; ++l)
        CHECK(incomplete_beta(0, l, c.z_star, true) ==
              Approx(sine_kernel(th, l)).epsilon(1e-10).scale(1.0));
    // the pole of (1-w)^k, k < 0, sits on the contour here
    CHECK_THROWS(incomplete_beta(-1, 0, c.z_star, true));
}

TEST_CASE("incomplete beta binomial expansion") {
    auto c = critical_points({0.9, 0.15});
    for (bool plus : {true, false}) {
        for (int k : {1, 2, 3}) {
            for (int l : {-2, 0, 1, 3}) {
                double direct = incomplete_beta(k, l, c.z_star, plus);
                double sum = 0.0;
                for (int j = 0; j <= k; ++j)
                    sum += binom(k, j) * (j % 2 ? -1.0 : 1.0) *
                           incomplete_beta(0, l - j, c.z_star, plus);
                CHECK(direct == Approx(sum).epsilon(1e-9).scale(1.0));
            }
        }
    }
}

TEST_CASE("plus and minus arcs differ by the full-circle coefficient") {
    auto c = critical_points({1.2, -0.5});  // |z_star| < 1, pole outside
    for (int k : {-3, -1, 0, 2, 4}) {
        for (int l : {-2, -1, 0, 1, 3}) {
            double diff = incomplete_beta(k, l, c.z_star, true) -
                          incomplete_beta(k, l, c.z_star, false);
            // [w^l] (1-w)^k on |w| < 1
            double coeff;
            if (k >= 0)
                coeff = (l % 2 ? -1.0 : 1.0) * binom(k, l);
            else
                coeff = l >= 0 ? binom(-k + l - 1, l) : 0.0;
            CHECK(diff == Approx(coeff).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("bulk correlation single point is the density") {
    for (auto b : {BulkPoint{0.5, 0.2}, BulkPoint{1.0, -1.0}}) {
        double rho = theta_density(b).second;
        CHECK(bulk_correlation({{0, 0}}, b) == Approx(rho).epsilon(1e-9));
        double two = bulk_correlation({{0, 0}, {0, 2}}, b);
        CHECK(two >= 0.0);
        CHECK(two <= rho + 1e-9);
    }
    CHECK_THROWS(bulk_correlation({{0, 0}, {0, 1}}, BulkPoint{0.5, 0.2}));  // parity
}

TEST_CASE("equal time bulk correlations are the discrete sine kernel") {
    BulkPoint b{0.0, 0.3};
    auto c = critical_points(b);
    double th = c.theta_star;
    for (int d2 : {2, 4, 6}) {
        double pair = bulk_correlation({{0, 0}, {0, d2}}, b);
        double s0 = sine_kernel(th, 0);
        double sd = sine_kernel(th, d2 / 2);
        CHECK(pair == Approx(s0 * s0 - sd * sd).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("double integral representation of the bulk kernel") {
    for (auto b : {BulkPoint{1.0, -1.0}, BulkPoint{0.5, 0.2}}) {
        auto c = critical_points(b);
        for (int k : {-2, -1, 0, 1, 2}) {
            for (int l : {-1, 0, 1, 2}) {
                double direct = incomplete_beta(k, l, c.z_star, k >= 0);
                double dbl = beta_double_integral(k, l, b, 1e-9);
                CHECK(dbl == Approx(direct).epsilon(1e-6).scale(1.0));
            }
        }
    }
}

TEST_CASE("determinants are gauge invariant") {
    BulkPoint b{0.9, -0.3};
    auto c = critical_points(b);
    std::vector<TilePoint> offs = {{0, 0}, {1, 3}, {-2, 2}};  // absolute positions
    auto entry = [&](std::size_t i, std::size_t j, bool gauged) {
        int k = offs[i].t - offs[j].t;
        int l = (offs[i].h2 - offs[j].h2 + k) / 2;
        double v = incomplete_beta(k, l, c.z_star, k >= 0);
        if (gauged) v *= std::exp(-b.tau * l);
        return v;
    };
    double d0 = 0.0, d1 = 0.0;
    {
        std::vector<std::vector<double>> m0(3, std::vector<double>(3)), m1 = m0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                m0[i][j] = entry(i, j, false);
                m1[i][j] = entry(i, j, true);
            }
        auto det3 = [](const std::vector<std::vector<double>>& m) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        d0 = det3(m0);
        d1 = det3(m1);
    }
    CHECK(d0 == Approx(d1).epsilon(1e-12).scale(1.0));
    std::vector<TilePoint> deltas = offs;
    CHECK(bulk_correlation(deltas, b) == Approx(d0).epsilon(1e-9).scale(1.0));
}

TEST_CASE("double integral outside the bulk is degenerate") {
    double tau = 1.0;
    BulkPoint above{tau, chi_upper(tau) + 0.4};
    BulkPoint below{tau, chi_lower(tau) - 0.4};
    CHECK(beta_double_integral(0, 0, above, 1e-9) == Approx(0.0).scale(1.0).epsilon(1e-8));
    CHECK(beta_double_integral(0, 0, below, 1e-9) == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("limit shape z equals the integrated hole density") {
    for (auto b : {BulkPoint{0.5, 0.2}, BulkPoint{1.1, -0.8}}) {
        double direct = integrate_gl_real(
            [&](double c) { return 1.0 - theta_density({b.tau, c}).second; },
            chi_lower(b.tau), b.chi, 1e-11);
        CHECK(limit_shape(b).z == Approx(direct).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("limit shape at the lower boundary and at the origin") {
    double tau = 0.6;
    auto p = limit_shape({tau, chi_lower(tau)});
    CHECK(p.z == Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(p.x == Approx(-chi_lower(tau) - tau / 2.0));
    CHECK(p.y == Approx(-chi_lower(tau) + tau / 2.0));

    auto o = limit_shape({0.0, 0.0});
    CHECK(o.x == Approx(o.y).epsilon(1e-12));
    CHECK(o.z > 0.0);
}

TEST_CASE("limit shape threefold symmetry") {
    for (auto b : {BulkPoint{0.5, 0.2}, BulkPoint{0.9, -0.4}}) {
        auto p = limit_shape(b);
        BulkPoint b2{b.chi - b.tau / 2.0, -b.chi / 2.0 - 3.0 * b.tau / 4.0};
        auto p2 = limit_shape(b2);
        CHECK(p2.x == Approx(p.y).epsilon(1e-7).scale(1.0));
        CHECK(p2.y == Approx(p.z).epsilon(1e-7).scale(1.0));
        CHECK(p2.z == Approx(p.x).epsilon(1e-7).scale(1.0));
    }
}

TEST_CASE("cerf-kenyon parametrization matches the closed form") {
    for (auto b : {BulkPoint{0.0, 0.0}, BulkPoint{0.5, 0.2}}) {
        auto ls = limit_shape(b);
        double B = std::exp(b.chi / 2.0 + b.tau / 4.0);
        double C = std::exp(b.chi / 2.0 - b.tau / 4.0);
        auto ck = ck_parametrization(1.0, B, C);
        CHECK(ck.x == Approx(ls.z).epsilon(2e-3).scale(1.0));
        CHECK(ck.y == Approx(ls.x).epsilon(2e-3).scale(1.0));
        CHECK(ck.z == Approx(ls.y).epsilon(2e-3).scale(1.0));
    }
    CHECK_THROWS(ck_parametrization(0.0, 1.0, 1.0));
}

TEST_CASE("density grid and level curves") {
    GridSpec g{-1.5, 1.5, 41, -2.0, 2.5, 41};
    auto dg = density_grid(g);
    CHECK(dg.rho.size() == 41u * 41u);
    for (double v : dg.rho) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    // iso-curve points reproduce their level when re-evaluated, up to the
    // linear interpolation error of the grid
    auto segs = level_curves(dg, pi / 2.0);
    CHECK(!segs.empty());
    for (const auto& seg : segs)
        for (const auto& [tau, chi] : seg) {
            double th = theta_density({tau, chi}).first;
            CHECK(std::abs(th - pi / 2.0) < 0.06);
        }

    auto svg = density_svg(dg, "cfg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("cfg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);

    auto csv = density_csv(dg, "cfg");
    CHECK(csv.rfind("# cfg", 0) == 0);
    CHECK(csv.find("tau,chi,theta,rho") != std::string::npos);
}

TEST_CASE("shape mesh export") {
    GridSpec g{-0.5, 0.5, 5, -1.0, 0.5, 5};
    auto mesh = shape_mesh(g);
    CHECK(mesh.points.size() == 25);
    auto csv = shape_csv(mesh, "cfg");
    CHECK(csv.find("tau,chi,x,y,z") != std::string::npos);
    // node (0, 0) carries the same value as a direct call
    auto p = limit_shape({g.tau(2), g.chi(2)});
    CHECK(mesh.points[2 * 5 + 2].z == Approx(p.z));
}

TEST_CASE("plancherel edge quantities") {
    CHECK(planch_theta(0.0) == Approx(pi / 2.0));
    CHECK(planch_theta(1.0) == Approx(pi / 3.0));
    CHECK_THROWS(planch_theta(2.0));
    CHECK_THROWS(planch_theta(-2.5));
    CHECK(sine_kernel(pi / 2.0, 0) == Approx(0.5));
    CHECK(sine_kernel(pi / 3.0, 3) == Approx(std::sin(pi) / (3.0 * pi)).scale(1.0));
}
