#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include <schurproc/partition.hpp>
#include <schurproc/schur.hpp>
#include <schurproc/specialization.hpp>

#include "oracles.hpp"

using namespace schurproc;
using doctest::Approx;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Taylor coefficients of exp(sum_k c_k u^k) from the log coefficients,
// by the standard recursion n f_n = sum_{k<=n} k c_k f_{n-k}.
std::vector<double> exp_series(const std::vector<double>& c, int n) {
    std::vector<double> f(static_cast<std::size_t>(n) + 1, 0.0);
    f[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double s = 0.0;
        for (int k = 1; k <= m; ++k)
            s += k * c[static_cast<std::size_t>(k - 1)] *
                 f[static_cast<std::size_t>(m - k)];
        f[static_cast<std::size_t>(m)] = s / m;
    }
    return f;
}

}  // namespace

TEST_CASE("h coefficients of elementary factors") {
    const double a = 0.37;
    auto g = geom_pole(Orientation::plus, a).h_coeffs(5);
    for (int k = 0; k <= 5; ++k)
        CHECK(g[static_cast<std::size_t>(k)] == Approx(std::pow(a, k)).epsilon(1e-14));

    Specialization lin(Orientation::plus, {{FactorKind::lin_zero, a}});
    auto l = lin.h_coeffs(4);
    CHECK(l[0] == Approx(1.0));
    CHECK(l[1] == Approx(-a));
    CHECK(l[2] == Approx(0.0));
    CHECK(l[3] == Approx(0.0));

    const double c = 1.3;
    auto e = exp_factor(Orientation::minus, c).h_coeffs(6);
    double fact = 1.0;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) fact *= k;
        CHECK(e[static_cast<std::size_t>(k)] ==
              Approx(std::pow(c, k) / fact).epsilon(1e-13));
    }
}

TEST_CASE("h coefficients of a two pole product") {
    const double a = 0.5, b = 0.25;
    auto s = geom_pole(Orientation::plus, a).concat(geom_pole(Orientation::plus, b));
    auto h = s.h_coeffs(6);
    for (int k = 0; k <= 6; ++k) {
        double want = 0.0;
        for (int i = 0; i <= k; ++i) want += std::pow(a, i) * std::pow(b, k - i);
        CHECK(h[static_cast<std::size_t>(k)] == Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("log coefficients re-exponentiate to the h series") {
    Specialization s(Orientation::plus, {{FactorKind::geom_pole, 0.3},
                                         {FactorKind::lin_zero, -0.2},
                                         {FactorKind::exp, 0.7},
                                         {FactorKind::geom_pole, -0.45}});
    const int n = 12;
    auto h = s.h_coeffs(n);
    auto f = exp_series(s.log_coeffs(n), n);
    for (int k = 0; k <= n; ++k)
        CHECK(h[static_cast<std::size_t>(k)] ==
              Approx(f[static_cast<std::size_t>(k)]).epsilon(1e-12));
}

TEST_CASE("log coefficient formulas") {
    auto lg = geom_pole(Orientation::plus, 0.4).log_coeffs(4);
    for (int k = 1; k <= 4; ++k)
        CHECK(lg[static_cast<std::size_t>(k - 1)] == Approx(std::pow(0.4, k) / k));

    auto le = exp_factor(Orientation::minus, 2.5).log_coeffs(3);
    CHECK(le[0] == Approx(2.5));
    CHECK(le[1] == Approx(0.0));
    CHECK(le[2] == Approx(0.0));
}

TEST_CASE("evaluation as a function of z") {
    const std::complex<double> z(0.6, 0.45);
    const double a = 0.7;
    auto plus = geom_pole(Orientation::plus, a);
    auto minus = geom_pole(Orientation::minus, a);
    CHECK(std::abs(plus.eval(z) - 1.0 / (1.0 - a * z)) < 1e-14);
    CHECK(std::abs(minus.eval(z) - 1.0 / (1.0 - a / z)) < 1e-14);

    auto ex = exp_factor(Orientation::plus, 0.9);
    CHECK(std::abs(ex.eval(z) - std::exp(0.9 * z)) < 1e-14);

    CHECK(Specialization(Orientation::plus).trivial());
    CHECK(std::abs(Specialization(Orientation::plus).eval(z) - 1.0) == 0.0);
    CHECK_THROWS(plus.eval(std::complex<double>(1.0 / a, 0.0)));
}

TEST_CASE("max_abs_param") {
    Specialization s(Orientation::plus, {{FactorKind::geom_pole, 0.3},
                                         {FactorKind::lin_zero, -0.8},
                                         {FactorKind::exp, 5.0}});
    CHECK(s.max_abs_param() == Approx(0.8));
    CHECK(exp_factor(Orientation::plus, 5.0).max_abs_param() == 0.0);
}

TEST_CASE("skew schur with a single geometric factor") {
    auto s = geom_pole(Orientation::plus, 0.6);
    CHECK(skew_schur(P({3, 1}), P({2}), s) == Approx(std::pow(0.6, 2)));
    CHECK(skew_schur(P({3, 1}), P({3, 1}), s) == Approx(1.0));
    CHECK(skew_schur(P({3, 3}), P({1, 1}), s) == 0.0);  // contained, no interlacing
    CHECK(skew_schur(P({2}), P({3}), s) == 0.0);        // no containment
    CHECK(skew_schur(P({4}), Partition{}, s) == Approx(std::pow(0.6, 4)));
    CHECK(skew_schur(P({4, 2}), Partition{}, s) == 0.0);  // empty does not interlace
}

TEST_CASE("trivial specialization is the identity transition") {
    Specialization triv(Orientation::plus);
    CHECK(skew_schur(P({2, 1}), P({2, 1}), triv) == Approx(1.0));
    CHECK(skew_schur(P({2, 1}), P({1, 1}), triv) == 0.0);
    CHECK(skew_schur(P({2, 1}), Partition{}, triv) == 0.0);
    CHECK(skew_schur(Partition{}, Partition{}, triv) == Approx(1.0));
}

TEST_CASE("jacobi-trudi in two variables") {
    const double a = 0.8, b = 0.35;
    auto s = geom_pole(Orientation::plus, a).concat(geom_pole(Orientation::plus, b));
    CHECK(skew_schur(P({2, 1}), Partition{}, s) == Approx(a * b * (a + b)).epsilon(1e-13));
    CHECK(skew_schur(P({1, 1}), Partition{}, s) == Approx(a * b).epsilon(1e-13));
    CHECK(skew_schur(P({2}), Partition{}, s) == Approx(a * a + a * b + b * b).epsilon(1e-13));
    // s_{(2,1)/(1)} = h_1^2 in the h basis
    CHECK(skew_schur(P({2, 1}), P({1}), s) == Approx((a + b) * (a + b)).epsilon(1e-13));
    // more than two rows vanish in two variables
    CHECK(skew_schur(P({1, 1, 1}), Partition{}, s) == Approx(0.0).epsilon(1e-13));
}

TEST_CASE("one variable schur matches the closed form") {
    const double x = 0.43;
    auto s = geom_pole(Orientation::plus, x);
    for_each_partition_up_to(6, [&](const Partition& lam) {
        CHECK(skew_schur(lam, Partition{}, s) ==
              Approx(oracles::schur_one_variable(lam, x)).epsilon(1e-13));
    });
}

TEST_CASE("branching rule over a concatenation") {
    const double a = 0.5, b = 0.3, c = 0.7;
    auto ab = geom_pole(Orientation::plus, a).concat(geom_pole(Orientation::plus, b));
    auto abc = ab.concat(geom_pole(Orientation::plus, c));
    auto last = geom_pole(Orientation::plus, c);
    auto lam = P({3, 2, 1});
    double total = 0.0;
    for_each_subpartition(lam, [&](const Partition& mu) {
        total += skew_schur(mu, Partition{}, ab) * skew_schur(lam, mu, last);
    });
    CHECK(total == Approx(skew_schur(lam, Partition{}, abc)).epsilon(1e-12));
}

TEST_CASE("transition weights") {
    const double a = 0.6, b = 0.25;
    SpecPair one_sided{geom_pole(Orientation::plus, a), Specialization(Orientation::minus)};
    CHECK(one_sided.minus.trivial());
    CHECK(transition_weight(P({2}), P({3, 1}), one_sided) == Approx(a * a));
    CHECK(transition_weight(P({3, 1}), P({2}), one_sided) == 0.0);

    SpecPair both{geom_pole(Orientation::plus, a), geom_pole(Orientation::minus, b)};
    CHECK(transition_weight(P({1}), P({1}), both) == Approx(1.0 + a * b).epsilon(1e-13));
    CHECK(transition_weight(P({1}), P({2}), both) == Approx(a * (1.0 + a * b)).epsilon(1e-13));
    CHECK(transition_weight(Partition{}, Partition{}, both) == Approx(1.0));
}

TEST_CASE("commutation constants") {
    const double a = 0.45, b = 0.3;
    auto gp = geom_pole(Orientation::plus, a);
    auto gm = geom_pole(Orientation::minus, b);
    CHECK(commutation_constant(gp, gm, 200) ==
          Approx(1.0 / (1.0 - a * b)).epsilon(1e-13));

    Specialization lp(Orientation::plus, {{FactorKind::lin_zero, a}});
    CHECK(commutation_constant(lp, gm, 200) == Approx(1.0 - a * b).epsilon(1e-13));

    auto ep = exp_factor(Orientation::plus, 1.7);
    auto em = exp_factor(Orientation::minus, 0.4);
    CHECK(commutation_constant(ep, em, 50) == Approx(std::exp(1.7 * 0.4)).epsilon(1e-13));

    CHECK(commutation_constant(Specialization(Orientation::plus), gm, 50) == Approx(1.0));

    // tail bound enforcement near the radius of convergence
    CHECK_THROWS(commutation_constant(geom_pole(Orientation::plus, 0.99),
                                      geom_pole(Orientation::minus, 0.99), 20));
}
