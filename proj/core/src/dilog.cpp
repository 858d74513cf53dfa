#include "schurproc/dilog.hpp"

#include <numbers>
#include <stdexcept>

namespace schurproc {

namespace {

constexpr double kPi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

// Li2(z) = sum_{k>=0} B_k u^(k+1) / (k+1)!, u = -ln(1-z), with B_1 = -1/2;
// converges for |u| < 2 pi, used here only with |z| <= 1 and Re z <= 1/2.
std::complex<double> li2_bernoulli(std::complex<double> z) {
    static const double bern[] = {
        1.0,
        -0.5,
        1.0 / 6.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        1.0 / 42.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        5.0 / 66.0,
        0.0,
        -691.0 / 2730.0,
        0.0,
        7.0 / 6.0,
        0.0,
        -3617.0 / 510.0,
        0.0,
        43867.0 / 798.0,
        0.0,
        -174611.0 / 330.0,
        0.0,
        854513.0 / 138.0,
        0.0,
        -236364091.0 / 2730.0,
        0.0,
        8553103.0 / 6.0,
    };
    std::complex<double> u = -std::log(1.0 - z);
    std::complex<double> term = u;  // u^(k+1)/(k+1)! at k = 0
    std::complex<double> s = 0.0;
    for (int k = 0; k < 27; ++k) {
        if (bern[k] != 0.0) s += bern[k] * term;
        term *= u / static_cast<double>(k + 2);
    }
    return s;
}

}  // namespace

std::complex<double> li2(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() > 1.0)
        throw std::domain_error("li2: evaluation on the cut (1, +inf)");
    if (z == std::complex<double>(1.0, 0.0)) return kPi2_6;
    if (std::abs(z) > 1.0) {
        std::complex<double> lz = std::log(-z);
        return -kPi2_6 - 0.5 * lz * lz - li2(1.0 / z);
    }
    if (z.real() > 0.5)
        return kPi2_6 - std::log(z) * std::log(1.0 - z) - li2(1.0 - z);
    return li2_bernoulli(z);
}

std::complex<double> dil(std::complex<double> w) { return li2(1.0 - w); }

}  // namespace schurproc
