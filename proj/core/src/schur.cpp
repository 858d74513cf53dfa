#include "schurproc/schur.hpp"

#include <cmath>
#include <vector>

#include "schurproc/linalg.hpp"

namespace schurproc {

namespace {

// Single one-sided geom_pole(a): the constant specialization h_k = a^k, for
// which s_{lambda/mu} = a^{|lambda|-|mu|} iff mu ≺ lambda.
bool single_geom(const Specialization& s, double& a) {
    if (s.factors().size() != 1) return false;
    const Factor& f = s.factors().front();
    if (f.kind != FactorKind::geom_pole) return false;
    a = f.param;
    return true;
}

}  // namespace

double skew_schur(const Partition& lambda, const Partition& mu,
                  const Specialization& s) {
    if (!contains(lambda, mu)) return 0.0;
    if (lambda == mu) return 1.0;

    double a;
    if (single_geom(s, a))
        return interlaces(lambda, mu)
                   ? std::pow(a, static_cast<double>(lambda.sum() - mu.sum()))
                   : 0.0;

    std::size_t n = lambda.rows();
    int hmax = lambda.part(0) + static_cast<int>(n);
    std::vector<double> h = s.h_coeffs(hmax);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int k = lambda.part(i) - mu.part(j) - static_cast<int>(i) +
                    static_cast<int>(j);
            m[i][j] = (k >= 0 && k <= hmax) ? h[static_cast<std::size_t>(k)] : 0.0;
        }
    return matrix_det(std::move(m));
}

double transition_weight(const Partition& mu, const Partition& lambda,
                         const SpecPair& phi) {
    if (phi.minus.trivial()) return skew_schur(lambda, mu, phi.plus);
    if (phi.plus.trivial()) return skew_schur(mu, lambda, phi.minus);

    // shape of admissible nu: pointwise min of mu and lambda
    std::size_t n = std::min(mu.rows(), lambda.rows());
    std::vector<int> cap(n);
    for (std::size_t i = 0; i < n; ++i)
        cap[i] = std::min(mu.part(i), lambda.part(i));
    Partition shape(std::move(cap));

    double total = 0.0;
    for_each_subpartition(shape, [&](const Partition& nu) {
        double a = skew_schur(mu, nu, phi.minus);
        if (a == 0.0) return;
        double b = skew_schur(lambda, nu, phi.plus);
        if (b == 0.0) return;
        total += a * b;
    });
    return total;
}

}  // namespace schurproc
